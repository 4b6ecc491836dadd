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

#ifndef CROSSGAME_TUNER_H_
#define CROSSGAME_TUNER_H_

#include <optional>
#include <string>
#include <vector>

#include "crossgame/gamegen.h"
#include "crossgame/optimizers.h"
#include "crossgame/polyoracle.h"
#include "crossgame/spectrum.h"

namespace crossgame {

// Optimal momentum-extragradient parameters for the cross [mu, L] U
// {(mu+L)/2 + b i : |b| <= c}: the robust region of Case 2 coincides with the
// cross. With s = sqrt(4c^2 + (mu+L)^2) and q = sqrt(4 mu L):
//   h = 16 (mu+L) / (s+q)^2,  gamma = 1/(mu+L),  m = ((s-q)/(s+q))^2.
// Throws std::invalid_argument unless 0 < mu <= L and c >= 0.
Hyperparams OptimalEgm(double mu, double L, double c);

// Closed form for c = (L - mu)/2 with r = sqrt(mu^2 + L^2), q = sqrt(2 mu L):
//   h = 8 (mu+L) / (r+q)^2,  gamma = 1/(mu+L),  m = ((r-q)/(r+q))^2.
Hyperparams OptimalEgmEqualLength(double mu, double L);

struct RateExpansion {
  double exact = 0.0;        // m^{1/4} of OptimalEgm(mu, L, c)
  double first_order = 0.0;  // 1 - 2 sqrt(tau) / sqrt((2c/L)^2 + 1)
  double tau = 0.0;
  bool applicable = false;   // false when tau == 1 (no ill-conditioning)
};
RateExpansion EgmRateExpansion(double mu, double L, double c);

struct RateReport {
  Method method = Method::kGd;
  double rho_squared = 0.0;     // bound on the squared spectral radius
  double per_iter_bound = 0.0;  // sqrt(rho_squared)
  double per_eval_bound = 0.0;  // per_iter_bound^(1 / evals per iteration)
  double tau = 0.0;
  std::string notes;
};

// h = min over the spectrum of Re(1/lambda).
double GdTheoryStep(const Spectrum& s);
// rho^2 <= 1 - min Re(1/lambda) * min Re(lambda).
RateReport GdRateBound(const Spectrum& s);

// h = 1 / (4 max |lambda|).
double EgTheoryStep(const Spectrum& s);

struct EgRateBounds {
  // rho^2 <= 1 - (min Re / max|.| + min|.|^2 / max|.|^2) / 4.
  RateReport general;
  // The piecewise closed form for the equal-length cross, which carries a
  // 1/16 factor on the second term. Set only when a cross model with
  // c = (L - mu)/2 is supplied.
  std::optional<double> equal_length_rho_squared;
};
EgRateBounds EgRateBound(const Spectrum& s,
                         const std::optional<SpectrumModel>& cross = std::nullopt);
// The piecewise equal-length-cross EG expression on its own.
double EgEqualLengthRhoSquared(double mu, double L);

struct GdmRate {
  double value = 0.0;
  std::string branch;  // "theta>1/2", "theta=1/2" or "theta<1/2"
};
// Leading-order GDM rate when the spectrum sits in an ellipse of
// half-height eps with eps / L = tau^theta.
GdmRate GdmRateBound(double tau, double theta);

// True when L/mu > sqrt(5), the condition number past which momentum
// gradient descent is reported not to accelerate on the equal-length cross.
bool GdmAccelerationThreshold(double mu, double L);

struct GridSpec {
  double h_lo = 0.0, h_hi = 0.0, h_step = 0.0;
  // Momentum axis; ignored for GD and EG.
  double m_lo = 0.0, m_hi = 0.0, m_step = 0.0;

  std::vector<double> HValues() const;
  std::vector<double> MValues() const;
};

// 0.005 <= h <= 0.015 step 1e-3 (GD and GDM); 0.01 <= m <= 0.99 step 1e-2.
GridSpec DefaultGdGrid();
GridSpec DefaultGdmGrid();
// 0.001 <= h <= 0.05 step 1e-4.
GridSpec DefaultEgGrid();
GridSpec DefaultGrid(Method method);

struct GridResult {
  Hyperparams best;
  double final_distance = 0.0;
  int candidates = 0;
  int diverged = 0;
};

// Runs every grid point from w0 = 0 for `iters` iterations and keeps the
// smallest final distance, breaking ties by smaller h and then smaller m.
// Diverged runs are skipped. `threads` <= 0 picks the hardware concurrency;
// the result does not depend on the thread count.
// Throws std::runtime_error when every candidate diverges.
GridResult GridSearch(const QuadraticGame& game, Method method,
                      const GridSpec& spec, int iters, int threads = 0);
// Same, starting every candidate from `w0`.
GridResult GridSearchFrom(const QuadraticGame& game, Method method,
                          const GridSpec& spec, int iters, const Vector& w0,
                          int threads = 0);

}  // namespace crossgame

#endif  // CROSSGAME_TUNER_H_
