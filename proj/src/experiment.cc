// Copyright 2026 The crossgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crossgame/experiment.h"

#include <cmath>
#include <stdexcept>

#include "crossgame/svg_plot.h"

namespace crossgame {

void ExperimentConfig::Validate() const {
  model.Validate();
  if (iters < 1) throw std::invalid_argument("iters must be >= 1");
  if (n_real < 2 || n_pairs < 1) {
    throw std::invalid_argument("need n_real >= 2 and n_pairs >= 1");
  }
}

const LabeledTrace& ExperimentResult::Series(const std::string& label) const {
  for (const LabeledTrace& s : series) {
    if (s.label == label) return s;
  }
  throw std::out_of_range("no series labelled '" + label + "'");
}

std::vector<double> ExperimentResult::Relative(const std::string& label) const {
  const std::vector<double>& d = Series(label).trace.distances;
  std::vector<double> out(d.size());
  for (std::size_t t = 0; t < d.size(); ++t) out[t] = d[t] / d.front();
  return out;
}

ExperimentResult RunComparison(const ExperimentConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  ExperimentResult r;
  r.game = BuildCrossGame(
      config.model, GameOptions{config.n_real, config.n_pairs, config.b_zero}, rng);
  if (!VerifyGame(r.game).passed()) {
    throw std::runtime_error("generated game failed verification");
  }
  const QuadraticGame& g = r.game;
  r.w0 = Vector(g.dim());
  if (config.b_zero) {
    for (std::size_t i = 0; i < r.w0.size(); ++i) r.w0[i] = rng.Normal();
  }

  const SpectrumModel& mdl = config.model;
  const bool equal_length = mdl.c == (mdl.L - mdl.mu) / 2.0;
  const Hyperparams egm = equal_length ? OptimalEgmEqualLength(mdl.mu, mdl.L)
                                       : OptimalEgm(mdl.mu, mdl.L, mdl.c);
  const double gd_h = GdTheoryStep(g.declared);
  const double eg_h = EgTheoryStep(g.declared);

  r.gd_grid = GridSearchFrom(g, Method::kGd, config.gd_grid, config.iters, r.w0,
                             config.threads);
  r.eg_grid = GridSearchFrom(g, Method::kEg, config.eg_grid, config.iters, r.w0,
                             config.threads);
  r.gdm_grid = GridSearchFrom(g, Method::kGdm, config.gdm_grid, config.iters, r.w0,
                              config.threads);

  const int n = config.iters;
  r.series.push_back({"egm_optimal", RunEgm(g, egm, r.w0, n)});
  r.series.push_back({"gd_theory", RunGd(g, gd_h, r.w0, n)});
  r.series.push_back({"eg_theory", RunEg(g, eg_h, r.w0, n)});
  r.series.push_back({"gd_grid", RunGd(g, r.gd_grid.best.h, r.w0, n)});
  r.series.push_back({"eg_grid", RunEg(g, r.eg_grid.best.h, r.w0, n)});
  r.series.push_back(
      {"gdm_grid", RunGdm(g, r.gdm_grid.best.h, r.gdm_grid.best.m, r.w0, n)});
  return r;
}

std::string ComparisonSvg(const ExperimentResult& result) {
  std::vector<PlotSeries> plot;
  for (const LabeledTrace& s : result.series) {
    plot.push_back({s.label, result.Relative(s.label)});
  }
  return RenderLogPlotSvg(plot);
}

}  // namespace crossgame
