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

#ifndef CROSSGAME_POLYORACLE_H_
#define CROSSGAME_POLYORACLE_H_

// Chebyshev-based residual polynomials of the momentum methods, the link
// functions that feed them, and the three-mode classification of the robust
// region sigma^{-1}([-1, 1]).

#include <array>
#include <string>

#include "crossgame/core.h"

namespace crossgame {

// Step size h, extrapolation step gamma, momentum m.
struct Hyperparams {
  double h = 0.0;
  double gamma = 0.0;
  double m = 0.0;

  // Requires h > 0, gamma >= 0, 0 <= m < 1, all finite.
  void Validate() const;
};

Complex ChebyshevT(int t, Complex z);
Complex ChebyshevU(int t, Complex z);

// sigma(lambda) = (1 + m - h lambda (1 - gamma lambda)) / (2 sqrt(m)).
// Throws std::invalid_argument when m == 0 or the params are invalid.
Complex LinkSigma(const Hyperparams& p, Complex lambda);
// xi(lambda) = (1 + m - h lambda) / (2 sqrt(m)).
Complex LinkXi(const Hyperparams& p, Complex lambda);

// m^{t/2} (2m/(1+m) T_t(z) + (1-m)/(1+m) U_t(z)).
Complex MomentumChebyshevCombination(double m, int t, Complex z);

// P~_0 = 1, P~_1 = 1 - h lambda (1 - gamma lambda) / (1 + m),
// P~_{t+1} = (1 + m - h lambda (1 - gamma lambda)) P~_t - m P~_{t-1}.
// Total in m (m = 0 allowed). Setting gamma = 0 gives the GDM polynomial.
Complex ResidualEgmRecurrence(const Hyperparams& p, Complex lambda, int t);
// Closed form through LinkSigma; requires m > 0.
Complex ResidualEgmChebyshev(const Hyperparams& p, Complex lambda, int t);
// Closed form through LinkXi (gamma is ignored); requires m > 0.
Complex ResidualGdm(const Hyperparams& p, Complex lambda, int t);

enum class Mode { kAllReal = 1, kComplexAndReal = 2, kAllComplex = 3 };
std::string ModeName(Mode mode);

struct ModeClass {
  Mode mode = Mode::kAllReal;
  // sigma^{-1}(-1) and sigma^{-1}(1), each as a +- pair (plus branch first).
  std::array<Complex, 2> preimage_minus_one;
  std::array<Complex, 2> preimage_plus_one;
};

// Imaginary parts with |im| <= this count as real.
inline constexpr double kRealTol = 1e-12;

// Case 1 iff h/(4 gamma) >= (1 + sqrt m)^2; Case 2 iff
// (1 - sqrt m)^2 <= h/(4 gamma) < (1 + sqrt m)^2; Case 3 otherwise.
// Requires gamma > 0.
ModeClass ClassifyMode(const Hyperparams& p);

struct RobustRegion {
  double real_lo = 0.0;
  double real_hi = 0.0;
  double complex_re = 0.0;     // 1 / (2 gamma)
  double complex_b_max = 0.0;  // half-length of the vertical segment
};

// Robust region in Case 2: a real interval plus a vertical segment.
// Throws std::invalid_argument for any other mode.
RobustRegion RobustRegionCase2(const Hyperparams& p);

// m^{t/2} (t + 2). Requires m in (0, 1), t >= 0.
double WorstCaseRateBound(double m, int t);
// m^{1/4}: asymptotic contraction per vector-field evaluation.
double AsymptoticRate(double m);

}  // namespace crossgame

#endif  // CROSSGAME_POLYORACLE_H_
