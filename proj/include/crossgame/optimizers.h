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

#ifndef CROSSGAME_OPTIMIZERS_H_
#define CROSSGAME_OPTIMIZERS_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossgame/core.h"
#include "crossgame/gamegen.h"
#include "crossgame/polyoracle.h"

namespace crossgame {

enum class Method { kGd, kGdm, kEg, kEgm };

std::string MethodName(Method method);  // "gd", "gdm", "eg", "egm"
std::optional<Method> ParseMethod(const std::string& name);
int EvalsPerIteration(Method method);

struct RunTrace {
  Method method = Method::kGd;
  Hyperparams params;
  // distances[t] = ||w_t - w_star||, t = 0..T.
  std::vector<double> distances;
  // Cumulative vector-field evaluations after t iterations.
  std::vector<std::int64_t> vf_evals;
  bool diverged = false;

  int iterations() const { return static_cast<int>(distances.size()) - 1; }
};

// A run stops (diverged = true) once the distance is non-finite or exceeds
// this multiple of the initial distance.
inline constexpr double kDivergenceFactor = 1e12;

// Iterates of the four methods over any linear field. `Field` provides
//   using State = ...;
//   State Eval(const State& w) const;      // v(w)
//   double Distance(const State& w) const;  // ||w - w_star||
// GD and GDM read only p.h (and p.m); EG uses p.h for both steps.
// GDM and EGM take the damped first step w_1 = w_0 - h/(1+m) v(.) so their
// errors follow the closed-form residual polynomials exactly.
template <class Field>
RunTrace RunMethod(Method method, const Hyperparams& p, const Field& field,
                   typename Field::State w0, int iters) {
  using State = typename Field::State;
  if (iters < 1) throw std::invalid_argument("iters must be >= 1");
  if (!std::isfinite(p.h) || !std::isfinite(p.gamma) || !std::isfinite(p.m) ||
      p.h < 0.0 || p.gamma < 0.0 || p.m < 0.0 || p.m >= 1.0) {
    throw std::invalid_argument("invalid hyperparameters for run");
  }

  RunTrace trace;
  trace.method = method;
  trace.params = p;
  trace.distances.reserve(iters + 1);
  trace.vf_evals.reserve(iters + 1);
  const double d0 = field.Distance(w0);
  trace.distances.push_back(d0);
  trace.vf_evals.push_back(0);
  const int evals = EvalsPerIteration(method);

  State w = std::move(w0);
  State w_prev = w;
  for (int t = 0; t < iters; ++t) {
    State next;
    switch (method) {
      case Method::kGd:
        next = w - p.h * field.Eval(w);
        break;
      case Method::kEg:
        next = w - p.h * field.Eval(w - p.h * field.Eval(w));
        break;
      case Method::kGdm:
        if (t == 0) {
          next = w - (p.h / (1.0 + p.m)) * field.Eval(w);
        } else {
          next = (w - p.h * field.Eval(w)) + p.m * (w - w_prev);
        }
        break;
      case Method::kEgm:
        if (t == 0) {
          next = w - (p.h / (1.0 + p.m)) * field.Eval(w - p.gamma * field.Eval(w));
        } else {
          next = (w - p.h * field.Eval(w - p.gamma * field.Eval(w))) +
                 p.m * (w - w_prev);
        }
        break;
    }
    w_prev = std::move(w);
    w = std::move(next);
    const double dist = field.Distance(w);
    trace.distances.push_back(dist);
    trace.vf_evals.push_back(trace.vf_evals.back() + evals);
    if (!std::isfinite(dist) || (d0 > 0.0 && dist > kDivergenceFactor * d0)) {
      trace.diverged = true;
      break;
    }
  }
  return trace;
}

// v(w) = A w + b of a quadratic game.
class GameField {
 public:
  using State = Vector;
  explicit GameField(const QuadraticGame& game) : game_(game) {}
  Vector Eval(const Vector& w) const;
  double Distance(const Vector& w) const;

 private:
  const QuadraticGame& game_;
};

// One-dimensional complex field v(w) = lambda (w - w_star).
struct ScalarField {
  using State = Complex;
  Complex lambda;
  Complex w_star;
  Complex Eval(Complex w) const { return lambda * (w - w_star); }
  double Distance(Complex w) const { return std::abs(w - w_star); }
};

RunTrace RunGd(const QuadraticGame& game, double h, const Vector& w0, int iters);
RunTrace RunGdm(const QuadraticGame& game, double h, double m, const Vector& w0,
                int iters);
RunTrace RunEg(const QuadraticGame& game, double h, const Vector& w0, int iters);
RunTrace RunEgm(const QuadraticGame& game, const Hyperparams& p, const Vector& w0,
                int iters);
// Dispatches on `method`; GD/GDM ignore gamma and EG uses h for both steps.
RunTrace RunOnGame(const QuadraticGame& game, Method method, const Hyperparams& p,
                   const Vector& w0, int iters);

// exp of the least-squares slope of ln(distance) against t over
// [t_lo, t_hi]: the empirical per-iteration contraction factor. Throws
// std::invalid_argument if the window is out of range or any distance in it
// is non-positive or below kFitFloor * distances[0].
inline constexpr double kFitFloor = 1e-13;
double FitRate(const RunTrace& trace, int t_lo, int t_hi);

}  // namespace crossgame

#endif  // CROSSGAME_OPTIMIZERS_H_
