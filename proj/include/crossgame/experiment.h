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

#ifndef CROSSGAME_EXPERIMENT_H_
#define CROSSGAME_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "crossgame/gamegen.h"
#include "crossgame/spectrum.h"
#include "crossgame/trace_io.h"
#include "crossgame/tuner.h"

namespace crossgame {

// Comparison experiment on the equal-length cross mu = 1, L = 200 in R^200.
struct ExperimentConfig {
  SpectrumModel model = EqualLengthCross(1.0, 200.0);
  int n_real = 100;
  int n_pairs = 50;
  int iters = 2000;
  std::uint64_t seed = 0;
  bool b_zero = false;
  GridSpec gd_grid = DefaultGdGrid();
  GridSpec gdm_grid = DefaultGdmGrid();
  GridSpec eg_grid = DefaultEgGrid();
  int threads = 0;

  void Validate() const;
};

struct ExperimentResult {
  QuadraticGame game;
  Vector w0;
  // Series order: egm_optimal, gd_theory, eg_theory, gd_grid, eg_grid, gdm_grid.
  std::vector<LabeledTrace> series;
  GridResult gd_grid, eg_grid, gdm_grid;

  const LabeledTrace& Series(const std::string& label) const;
  // distances / distances[0] for one series.
  std::vector<double> Relative(const std::string& label) const;
};

// Builds the game (verifying it), runs EGM with its closed-form optimal
// parameters, GD and EG with their theory step sizes, and GD/EG/GDM with
// grid-searched parameters, all from w0 = 0. With b_zero the stationary point
// is 0, so w0 is drawn standard-normal from the game's generator instead.
// Throws std::runtime_error if the built game fails verification.
ExperimentResult RunComparison(const ExperimentConfig& config);

// SVG of the relative distances of every series.
std::string ComparisonSvg(const ExperimentResult& result);

}  // namespace crossgame

#endif  // CROSSGAME_EXPERIMENT_H_
