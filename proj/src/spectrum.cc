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

#include "crossgame/spectrum.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace crossgame {

void SpectrumModel::Validate() const {
  if (!std::isfinite(mu) || !std::isfinite(L) || !std::isfinite(c) ||
      !std::isfinite(c_prime)) {
    throw std::invalid_argument("spectrum model parameters must be finite");
  }
  if (!(mu > 0.0)) throw std::invalid_argument("spectrum model: mu must be > 0");
  if (!(mu <= L)) throw std::invalid_argument("spectrum model: mu must be <= L");
  if (!(c >= 0.0)) throw std::invalid_argument("spectrum model: c must be >= 0");
  if (!(c_prime > 0.0)) {
    throw std::invalid_argument("spectrum model: c_prime must be > 0");
  }
}

SpectrumModel EqualLengthCross(double mu, double L) {
  SpectrumModel m{mu, L, (L - mu) / 2.0, (mu + L) / 2.0};
  m.Validate();
  return m;
}

Spectrum::Spectrum(std::vector<Complex> eigenvalues)
    : eigenvalues_(std::move(eigenvalues)) {
  if (eigenvalues_.empty()) throw std::invalid_argument("spectrum is empty");
  for (Complex z : eigenvalues_) {
    RequireFinite(z, "eigenvalue");
    if (!(z.real() > 0.0)) {
      throw std::invalid_argument("eigenvalue with non-positive real part");
    }
  }
  // Multiset conjugation closure: every non-real value must be matched by a
  // distinct conjugate partner.
  std::vector<bool> used(eigenvalues_.size(), false);
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
    if (used[i] || eigenvalues_[i].imag() == 0.0) continue;
    const Complex want = std::conj(eigenvalues_[i]);
    bool found = false;
    for (std::size_t j = 0; j < eigenvalues_.size(); ++j) {
      if (j != i && !used[j] && eigenvalues_[j] == want) {
        used[i] = used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("spectrum is not closed under conjugation");
  }
}

bool Contains(const SpectrumModel& model, Complex lambda, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("contains: tol must be >= 0");
  if (!IsFinite(lambda)) return false;
  const double re = lambda.real();
  const double im = lambda.imag();
  const double to_real =
      std::hypot(re - std::clamp(re, model.mu, model.L), im);
  const double to_vertical =
      std::hypot(re - model.c_prime, im - std::clamp(im, -model.c, model.c));
  return std::min(to_real, to_vertical) <= tol;
}

Spectrum SampleCross(const SpectrumModel& model, int n_real, int n_pairs) {
  model.Validate();
  if (n_real < 2) throw std::invalid_argument("sample_cross: n_real must be >= 2");
  if (n_pairs < 1) throw std::invalid_argument("sample_cross: n_pairs must be >= 1");
  if (model.c == 0.0) {
    throw std::invalid_argument("sample_cross: c = 0 leaves no room for conjugate pairs");
  }
  std::vector<Complex> eig;
  eig.reserve(n_real + 2 * n_pairs);
  const double span = model.L - model.mu;
  for (int k = 0; k < n_real; ++k) {
    double x = model.mu + span * k / (n_real - 1);
    if (k == n_real - 1) x = model.L;
    eig.emplace_back(x, 0.0);
  }
  for (int k = 1; k <= n_pairs; ++k) {
    double b = model.c * k / n_pairs;
    if (k == n_pairs) b = model.c;
    eig.emplace_back(model.c_prime, b);
    eig.emplace_back(model.c_prime, -b);
  }
  return Spectrum(std::move(eig));
}

Spectrum CrossExtremePoints(const SpectrumModel& model) {
  model.Validate();
  std::vector<Complex> eig{{model.mu, 0.0}};
  if (model.L != model.mu) eig.emplace_back(model.L, 0.0);
  if (model.c > 0.0) {
    eig.emplace_back(model.c_prime, model.c);
    eig.emplace_back(model.c_prime, -model.c);
  } else {
    eig.emplace_back(model.c_prime, 0.0);
  }
  return Spectrum(std::move(eig));
}

SpectralExtremes Extremes(const Spectrum& s) {
  SpectralExtremes e;
  e.min_re = std::numeric_limits<double>::infinity();
  e.min_abs_sq = std::numeric_limits<double>::infinity();
  e.min_re_inv = std::numeric_limits<double>::infinity();
  e.max_abs = 0.0;
  for (Complex z : s.eigenvalues()) {
    if (!(z.real() > 0.0)) {
      throw std::invalid_argument("extremes: non-positive real part");
    }
    const double abs_sq = std::norm(z);
    e.min_re = std::min(e.min_re, z.real());
    e.max_abs = std::max(e.max_abs, std::abs(z));
    e.min_abs_sq = std::min(e.min_abs_sq, abs_sq);
    e.min_re_inv = std::min(e.min_re_inv, z.real() / abs_sq);
  }
  e.tau = e.min_re / e.max_abs;
  return e;
}

}  // namespace crossgame
