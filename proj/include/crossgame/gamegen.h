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

#ifndef CROSSGAME_GAMEGEN_H_
#define CROSSGAME_GAMEGEN_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "crossgame/core.h"
#include "crossgame/spectrum.h"

namespace crossgame {

// 2x2 block [[a, -b], [b, a]] with eigenvalues a +- b i.
struct RotationBlock {
  double a = 0.0;
  double b = 0.0;
};
// 1x1 block holding a real eigenvalue.
struct ScalarBlock {
  double r = 0.0;
};
using BlockSpec = std::variant<RotationBlock, ScalarBlock>;

// Two-player quadratic game with vector field v(w) = A w + b, where
//   A = [[S1, M12], [M21, S2]],  w = (x, y),  x in R^d1, y in R^d2.
struct QuadraticGame {
  Matrix A;
  Vector b;
  Vector w_star;
  int d1 = 0;
  int d2 = 0;
  Matrix S1, S2, M12, M21;
  SpectrumModel model;
  Spectrum declared{std::vector<Complex>{{1.0, 0.0}}};
  // Orthogonal W with A = W blockdiag(blocks) W^T. Empty for games loaded
  // from file, which carry no basis.
  Matrix basis;
  std::vector<BlockSpec> blocks;
  std::uint64_t seed = 0;

  int dim() const { return d1 + d2; }
};

struct GameOptions {
  int n_real = 100;
  int n_pairs = 50;
  // Literal b = 0 setup: forces w_star = 0 as well.
  bool b_zero = false;
};

// Builds a game whose Jacobian has exactly the spectrum
// SampleCross(model, n_real, n_pairs). With d = n_real + 2 n_pairs and
// d2 = n_pairs, pair k occupies coordinates (x_k, y_k); real eigenvalues sit
// on the remaining x coordinates. The structured matrix is rotated by
// diag(U, V) with U, V drawn from RandomOrthogonal (U first, then V), then
// w_star is drawn standard-normal and b = -A w_star.
QuadraticGame BuildCrossGame(const SpectrumModel& model,
                             const GameOptions& options, Rng& rng);

// Reassembles A from the four partition blocks.
Matrix AssembleJacobian(const Matrix& s1, const Matrix& m12, const Matrix& m21,
                        const Matrix& s2);

// v(w) = A w + b.
Vector EvalVectorField(const QuadraticGame& g, const Vector& w);

struct VerificationReport {
  bool basis_available = false;
  bool blocks_ok = false;
  double max_block_residual = 0.0;
  bool symmetry_ok = false;       // S1 = S1^T and S2 = S2^T exactly
  bool antisymmetry_ok = false;   // M12 = -M21^T exactly
  bool partition_ok = false;      // A equals the assembled partition exactly
  bool positive_definite_ok = false;
  bool stationarity_ok = false;
  double stationarity_residual = 0.0;  // max_i |(A w_star + b)_i|
  double stationarity_bound = 0.0;

  bool passed() const {
    return (!basis_available || blocks_ok) && symmetry_ok && antisymmetry_ok &&
           partition_ok && positive_definite_ok && stationarity_ok;
  }
};

inline constexpr double kBlockResidualTol = 1e-10;
inline constexpr double kStationarityTol = 1e-10;

VerificationReport VerifyGame(const QuadraticGame& g);

}  // namespace crossgame

#endif  // CROSSGAME_GAMEGEN_H_
