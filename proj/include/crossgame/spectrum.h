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

#ifndef CROSSGAME_SPECTRUM_H_
#define CROSSGAME_SPECTRUM_H_

#include <cstddef>
#include <vector>

#include "crossgame/core.h"

namespace crossgame {

// Cross-shaped eigenvalue set [mu, L] U {c_prime + b i : |b| <= c}.
struct SpectrumModel {
  double mu = 1.0;
  double L = 200.0;
  double c = 99.5;
  double c_prime = 100.5;

  // Requires 0 < mu <= L, c >= 0, c_prime > 0, all finite.
  void Validate() const;
};

// Equal-length cross: c = (L - mu) / 2 and c_prime = (mu + L) / 2.
SpectrumModel EqualLengthCross(double mu, double L);

// A finite eigenvalue set, closed under conjugation, with positive real parts.
class Spectrum {
 public:
  // Throws std::invalid_argument if the set is empty, has a non-finite or
  // non-positive-real-part entry, or is not closed under conjugation.
  explicit Spectrum(std::vector<Complex> eigenvalues);

  const std::vector<Complex>& eigenvalues() const { return eigenvalues_; }
  std::size_t size() const { return eigenvalues_.size(); }

 private:
  std::vector<Complex> eigenvalues_;
};

struct SpectralExtremes {
  double min_re = 0.0;
  double max_abs = 0.0;
  double min_abs_sq = 0.0;
  double min_re_inv = 0.0;  // min over eigenvalues of Re(1 / lambda)
  double tau = 0.0;         // min_re / max_abs; equals mu / L on a cross
};

// True iff lambda lies within Euclidean distance `tol` of the cross.
bool Contains(const SpectrumModel& model, Complex lambda, double tol);

// n_real points evenly spaced on [mu, L] (both endpoints exact) followed by
// n_pairs conjugate pairs c_prime +- b_k i with b_k = c k / n_pairs, so the
// largest imaginary part is exactly c. Pairs are stored as (a + bi, a - bi).
// Throws std::invalid_argument for n_real < 2, n_pairs < 1 or c == 0.
Spectrum SampleCross(const SpectrumModel& model, int n_real, int n_pairs);

// The extreme points of the cross: mu, L and c_prime +- c i (or the real
// point c_prime when c == 0). Duplicates of mu == L are collapsed.
Spectrum CrossExtremePoints(const SpectrumModel& model);

SpectralExtremes Extremes(const Spectrum& s);

}  // namespace crossgame

#endif  // CROSSGAME_SPECTRUM_H_
