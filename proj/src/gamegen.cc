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

#include "crossgame/gamegen.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crossgame {
namespace {

// U diag(d) U^T, built from the upper triangle and mirrored so the result is
// exactly symmetric.
Matrix SymmetricConjugate(const Matrix& u, const std::vector<double>& diag) {
  const std::size_t n = u.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += u(i, k) * diag[k] * u(j, k);
      out(i, j) = s;
      out(j, i) = s;
    }
  }
  return out;
}

}  // namespace

Matrix AssembleJacobian(const Matrix& s1, const Matrix& m12, const Matrix& m21,
                        const Matrix& s2) {
  const std::size_t d1 = s1.rows();
  const std::size_t d2 = s2.rows();
  if (s1.cols() != d1 || s2.cols() != d2 || m12.rows() != d1 ||
      m12.cols() != d2 || m21.rows() != d2 || m21.cols() != d1) {
    throw std::invalid_argument("assemble: inconsistent partition shapes");
  }
  const std::size_t d = d1 + d2;
  Matrix a(d, d);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) a(i, j) = s1(i, j);
    for (std::size_t j = 0; j < d2; ++j) a(i, d1 + j) = m12(i, j);
  }
  for (std::size_t i = 0; i < d2; ++i) {
    for (std::size_t j = 0; j < d1; ++j) a(d1 + i, j) = m21(i, j);
    for (std::size_t j = 0; j < d2; ++j) a(d1 + i, d1 + j) = s2(i, j);
  }
  return a;
}

QuadraticGame BuildCrossGame(const SpectrumModel& model,
                             const GameOptions& options, Rng& rng) {
  if (options.n_pairs < 1) {
    throw std::invalid_argument("build_cross_game: n_pairs must be >= 1");
  }
  Spectrum declared = SampleCross(model, options.n_real, options.n_pairs);

  const int n_pairs = options.n_pairs;
  const int n_real = options.n_real;
  QuadraticGame g;
  g.model = model;
  g.seed = rng.seed();
  g.d2 = n_pairs;
  g.d1 = n_real + n_pairs;
  const std::size_t d1 = g.d1;
  const std::size_t d2 = g.d2;
  const std::size_t d = d1 + d2;

  // Diagonal of the structured x-block: pair values a first, then reals.
  std::vector<double> diag1(d1);
  std::vector<double> diag2(d2);
  std::vector<double> coupling(n_pairs);
  const auto& eig = declared.eigenvalues();
  for (int k = 0; k < n_pairs; ++k) {
    const Complex z = eig[n_real + 2 * k];
    diag1[k] = z.real();
    diag2[k] = z.real();
    coupling[k] = z.imag();
    g.blocks.push_back(RotationBlock{z.real(), z.imag()});
  }
  for (int j = 0; j < n_real; ++j) {
    diag1[n_pairs + j] = eig[j].real();
    g.blocks.push_back(ScalarBlock{eig[j].real()});
  }

  const Matrix u = RandomOrthogonal(d1, rng);
  const Matrix v = RandomOrthogonal(d2, rng);

  g.S1 = SymmetricConjugate(u, diag1);
  g.S2 = SymmetricConjugate(v, diag2);
  // M12 = U D12 V^T with D12(k, k) = -b_k; M21 is its exact negated transpose.
  g.M12 = Matrix(d1, d2);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      double s = 0.0;
      for (int k = 0; k < n_pairs; ++k) s += u(i, k) * (-coupling[k]) * v(j, k);
      g.M12(i, j) = s;
    }
  }
  g.M21 = Matrix(d2, d1);
  for (std::size_t i = 0; i < d2; ++i) {
    for (std::size_t j = 0; j < d1; ++j) g.M21(i, j) = -g.M12(j, i);
  }
  g.A = AssembleJacobian(g.S1, g.M12, g.M21, g.S2);

  g.basis = Matrix(d, d);
  for (int k = 0; k < n_pairs; ++k) {
    for (std::size_t r = 0; r < d1; ++r) g.basis(r, 2 * k) = u(r, k);
    for (std::size_t r = 0; r < d2; ++r) g.basis(d1 + r, 2 * k + 1) = v(r, k);
  }
  for (int j = 0; j < n_real; ++j) {
    for (std::size_t r = 0; r < d1; ++r) {
      g.basis(r, 2 * n_pairs + j) = u(r, n_pairs + j);
    }
  }

  if (options.b_zero) {
    g.w_star = Vector(d);
    g.b = Vector(d);
  } else {
    g.w_star = Vector(d);
    for (std::size_t i = 0; i < d; ++i) g.w_star[i] = rng.Normal();
    g.b = -1.0 * MatVec(g.A, g.w_star);
  }
  g.declared = std::move(declared);
  return g;
}

Vector EvalVectorField(const QuadraticGame& g, const Vector& w) {
  Vector out = MatVec(g.A, w);
  out += g.b;
  return out;
}

VerificationReport VerifyGame(const QuadraticGame& g) {
  VerificationReport rep;
  const std::size_t d1 = g.d1;
  const std::size_t d2 = g.d2;
  const std::size_t d = d1 + d2;

  rep.basis_available = !g.basis.empty();
  if (rep.basis_available) {
    const Matrix aw = MatMul(g.A, g.basis);
    double worst = 0.0;
    std::size_t col = 0;
    for (const BlockSpec& block : g.blocks) {
      if (const auto* rot = std::get_if<RotationBlock>(&block)) {
        for (std::size_t r = 0; r < d; ++r) {
          const double p = g.basis(r, col);
          const double q = g.basis(r, col + 1);
          worst = std::max(worst, std::abs(aw(r, col) - (rot->a * p + rot->b * q)));
          worst = std::max(worst,
                           std::abs(aw(r, col + 1) - (-rot->b * p + rot->a * q)));
        }
        col += 2;
      } else {
        const double s = std::get<ScalarBlock>(block).r;
        for (std::size_t r = 0; r < d; ++r) {
          worst = std::max(worst, std::abs(aw(r, col) - s * g.basis(r, col)));
        }
        col += 1;
      }
    }
    rep.max_block_residual = worst;
    rep.blocks_ok = col == d && worst <= kBlockResidualTol;
  }

  rep.symmetry_ok = g.S1.rows() == d1 && g.S2.rows() == d2 &&
                    g.S1 == g.S1.Transposed() && g.S2 == g.S2.Transposed();

  rep.antisymmetry_ok = g.M12.rows() == d1 && g.M12.cols() == d2 &&
                        g.M21.rows() == d2 && g.M21.cols() == d1;
  for (std::size_t i = 0; rep.antisymmetry_ok && i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      if (g.M12(i, j) != -g.M21(j, i)) {
        rep.antisymmetry_ok = false;
        break;
      }
    }
  }

  rep.partition_ok = g.A.rows() == d && g.A.cols() == d && rep.symmetry_ok &&
                     rep.antisymmetry_ok &&
                     g.A == AssembleJacobian(g.S1, g.M12, g.M21, g.S2);

  // S1 and S2 are orthogonal conjugates of the construction diagonals, which
  // are exactly the real parts of the declared eigenvalues.
  rep.positive_definite_ok = g.declared.size() == d;
  for (Complex z : g.declared.eigenvalues()) {
    if (!(z.real() > 0.0)) rep.positive_definite_ok = false;
  }
  for (const BlockSpec& block : g.blocks) {
    if (const auto* rot = std::get_if<RotationBlock>(&block)) {
      if (!(rot->a > 0.0)) rep.positive_definite_ok = false;
    } else if (!(std::get<ScalarBlock>(block).r > 0.0)) {
      rep.positive_definite_ok = false;
    }
  }

  if (g.w_star.size() == d && g.b.size() == d && g.A.cols() == d) {
    rep.stationarity_residual = MaxAbs(EvalVectorField(g, g.w_star));
    rep.stationarity_bound =
        kStationarityTol * g.A.MaxAbs() * EuclideanNorm(g.w_star);
    rep.stationarity_ok = rep.stationarity_residual <= rep.stationarity_bound;
  }
  return rep;
}

}  // namespace crossgame
