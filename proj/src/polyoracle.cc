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

#include "crossgame/polyoracle.h"

#include <cmath>
#include <stdexcept>

namespace crossgame {
namespace {

void RequireNonNegative(int t) {
  if (t < 0) throw std::invalid_argument("polynomial degree must be >= 0");
}

void RequirePositiveMomentum(const Hyperparams& p) {
  p.Validate();
  if (!(p.m > 0.0)) {
    throw std::invalid_argument(
        "Chebyshev form needs m > 0; use the recurrence form for m = 0");
  }
}

Complex ChebyshevRecurrence(int t, Complex z, Complex first) {
  RequireNonNegative(t);
  if (t == 0) return 1.0;
  Complex prev = 1.0;
  Complex cur = first;
  for (int k = 1; k < t; ++k) {
    const Complex next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Principal square root of a real number, as a complex value.
Complex SqrtReal(double x) {
  return x >= 0.0 ? Complex(std::sqrt(x), 0.0) : Complex(0.0, std::sqrt(-x));
}

}  // namespace

void Hyperparams::Validate() const {
  if (!std::isfinite(h) || !std::isfinite(gamma) || !std::isfinite(m)) {
    throw std::invalid_argument("hyperparameters must be finite");
  }
  if (!(h > 0.0)) throw std::invalid_argument("step size h must be > 0");
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
  if (!(m >= 0.0 && m < 1.0)) throw std::invalid_argument("momentum m must be in [0, 1)");
}

Complex ChebyshevT(int t, Complex z) { return ChebyshevRecurrence(t, z, z); }

Complex ChebyshevU(int t, Complex z) { return ChebyshevRecurrence(t, z, 2.0 * z); }

Complex LinkSigma(const Hyperparams& p, Complex lambda) {
  RequirePositiveMomentum(p);
  RequireFinite(lambda, "lambda");
  return (1.0 + p.m - p.h * lambda * (1.0 - p.gamma * lambda)) /
         (2.0 * std::sqrt(p.m));
}

Complex LinkXi(const Hyperparams& p, Complex lambda) {
  RequirePositiveMomentum(p);
  RequireFinite(lambda, "lambda");
  return (1.0 + p.m - p.h * lambda) / (2.0 * std::sqrt(p.m));
}

Complex MomentumChebyshevCombination(double m, int t, Complex z) {
  RequireNonNegative(t);
  const double scale = std::pow(m, 0.5 * t);
  return scale * ((2.0 * m / (1.0 + m)) * ChebyshevT(t, z) +
                  ((1.0 - m) / (1.0 + m)) * ChebyshevU(t, z));
}

Complex ResidualEgmRecurrence(const Hyperparams& p, Complex lambda, int t) {
  p.Validate();
  RequireFinite(lambda, "lambda");
  RequireNonNegative(t);
  const Complex q = p.h * lambda * (1.0 - p.gamma * lambda);
  if (t == 0) return 1.0;
  Complex prev = 1.0;
  Complex cur = 1.0 - q / (1.0 + p.m);
  const Complex coeff = 1.0 + p.m - q;
  for (int k = 1; k < t; ++k) {
    const Complex next = coeff * cur - p.m * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex ResidualEgmChebyshev(const Hyperparams& p, Complex lambda, int t) {
  return MomentumChebyshevCombination(p.m, t, LinkSigma(p, lambda));
}

Complex ResidualGdm(const Hyperparams& p, Complex lambda, int t) {
  return MomentumChebyshevCombination(p.m, t, LinkXi(p, lambda));
}

std::string ModeName(Mode mode) {
  switch (mode) {
    case Mode::kAllReal:
      return "case1_all_real";
    case Mode::kComplexAndReal:
      return "case2_complex_and_real";
    case Mode::kAllComplex:
      return "case3_all_complex";
  }
  return "unknown";
}

ModeClass ClassifyMode(const Hyperparams& p) {
  p.Validate();
  if (!(p.gamma > 0.0)) throw std::invalid_argument("classify_mode: gamma must be > 0");
  const double root_m = std::sqrt(p.m);
  const double ratio = p.h / (4.0 * p.gamma);
  const double upper = (1.0 + root_m) * (1.0 + root_m);
  const double lower = (1.0 - root_m) * (1.0 - root_m);

  ModeClass out;
  if (ratio >= upper) {
    out.mode = Mode::kAllReal;
  } else if (lower <= ratio) {
    out.mode = Mode::kComplexAndReal;
  } else {
    out.mode = Mode::kAllComplex;
  }

  // 1/(4 gamma^2) - k/(h gamma) rewritten as (1 - k/ratio) / (4 gamma^2), so
  // its sign agrees with the comparisons above.
  const double center = 1.0 / (2.0 * p.gamma);
  const double inv_four_gamma_sq = center * center;
  const Complex r_minus = SqrtReal((1.0 - upper / ratio) * inv_four_gamma_sq);
  const Complex r_plus = SqrtReal((1.0 - lower / ratio) * inv_four_gamma_sq);
  out.preimage_minus_one = {center + r_minus, center - r_minus};
  out.preimage_plus_one = {center + r_plus, center - r_plus};
  return out;
}

RobustRegion RobustRegionCase2(const Hyperparams& p) {
  if (ClassifyMode(p).mode != Mode::kComplexAndReal) {
    throw std::invalid_argument("robust_region_case2: hyperparameters are not in Case 2");
  }
  const double root_m = std::sqrt(p.m);
  const double center = 1.0 / (2.0 * p.gamma);
  const double hg = p.h * p.gamma;
  const double lower_product = (1.0 - root_m) * (1.0 - root_m) / hg;
  const double upper_term = (1.0 + root_m) * (1.0 + root_m) / hg;

  RobustRegion r;
  // The interval endpoints are the roots of x^2 - x/gamma + lower_product;
  // the small root is taken from the product to avoid cancellation.
  r.real_hi = center + std::sqrt(std::max(0.0, center * center - lower_product));
  r.real_lo = lower_product / r.real_hi;
  r.complex_re = center;
  r.complex_b_max = std::sqrt(std::max(0.0, upper_term - center * center));
  return r;
}

double WorstCaseRateBound(double m, int t) {
  if (!(m > 0.0 && m < 1.0)) throw std::invalid_argument("rate bound needs m in (0, 1)");
  RequireNonNegative(t);
  return std::pow(m, 0.5 * t) * (t + 2);
}

double AsymptoticRate(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw std::invalid_argument("asymptotic rate needs m in [0, 1)");
  return std::pow(m, 0.25);
}

}  // namespace crossgame
