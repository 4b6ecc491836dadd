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

#include "crossgame/optimizers.h"

#include <cmath>
#include <stdexcept>

namespace crossgame {

std::string MethodName(Method method) {
  switch (method) {
    case Method::kGd:
      return "gd";
    case Method::kGdm:
      return "gdm";
    case Method::kEg:
      return "eg";
    case Method::kEgm:
      return "egm";
  }
  return "unknown";
}

std::optional<Method> ParseMethod(const std::string& name) {
  if (name == "gd") return Method::kGd;
  if (name == "gdm") return Method::kGdm;
  if (name == "eg") return Method::kEg;
  if (name == "egm") return Method::kEgm;
  return std::nullopt;
}

int EvalsPerIteration(Method method) {
  return method == Method::kEg || method == Method::kEgm ? 2 : 1;
}

Vector GameField::Eval(const Vector& w) const { return EvalVectorField(game_, w); }

double GameField::Distance(const Vector& w) const {
  return EuclideanNorm(w - game_.w_star);
}

namespace {

void CheckStart(const QuadraticGame& game, const Vector& w0) {
  if (w0.size() != static_cast<std::size_t>(game.dim())) {
    throw std::invalid_argument("w0 has length " + std::to_string(w0.size()) +
                                " but the game has dimension " +
                                std::to_string(game.dim()));
  }
}

}  // namespace

RunTrace RunOnGame(const QuadraticGame& game, Method method, const Hyperparams& p,
                   const Vector& w0, int iters) {
  CheckStart(game, w0);
  return RunMethod(method, p, GameField(game), w0, iters);
}

RunTrace RunGd(const QuadraticGame& game, double h, const Vector& w0, int iters) {
  return RunOnGame(game, Method::kGd, {h, 0.0, 0.0}, w0, iters);
}

RunTrace RunGdm(const QuadraticGame& game, double h, double m, const Vector& w0,
                int iters) {
  return RunOnGame(game, Method::kGdm, {h, 0.0, m}, w0, iters);
}

RunTrace RunEg(const QuadraticGame& game, double h, const Vector& w0, int iters) {
  return RunOnGame(game, Method::kEg, {h, h, 0.0}, w0, iters);
}

RunTrace RunEgm(const QuadraticGame& game, const Hyperparams& p, const Vector& w0,
                int iters) {
  return RunOnGame(game, Method::kEgm, p, w0, iters);
}

double FitRate(const RunTrace& trace, int t_lo, int t_hi) {
  if (t_lo < 0 || t_hi <= t_lo ||
      t_hi >= static_cast<int>(trace.distances.size())) {
    throw std::invalid_argument("fit_rate: window outside the trace");
  }
  const double floor = kFitFloor * trace.distances.front();
  double sum_t = 0.0, sum_y = 0.0;
  const int n = t_hi - t_lo + 1;
  for (int t = t_lo; t <= t_hi; ++t) {
    const double d = trace.distances[t];
    if (!(d > 0.0) || !std::isfinite(d) || d < floor) {
      throw std::invalid_argument("fit_rate: window touches the numerical floor at t = " +
                                  std::to_string(t));
    }
    sum_t += t;
    sum_y += std::log(d);
  }
  const double mean_t = sum_t / n;
  const double mean_y = sum_y / n;
  double num = 0.0, den = 0.0;
  for (int t = t_lo; t <= t_hi; ++t) {
    const double dt = t - mean_t;
    num += dt * (std::log(trace.distances[t]) - mean_y);
    den += dt * dt;
  }
  return std::exp(num / den);
}

}  // namespace crossgame
