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

#include "crossgame/core.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace crossgame {

bool IsFinite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void RequireFinite(Complex z, const char* what) {
  if (!IsFinite(z)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.size() != size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (other.size() != size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(double s, Vector a) { return a *= s; }

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows_ * cols_ != data_.size()) {
    throw std::invalid_argument("matrix shape does not match entry count");
  }
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

double Matrix::MaxAbs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  // Four partial sums, combined in a fixed order.
  const std::size_t n = a.size();
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

void MatVecInto(const Matrix& a, std::span<const double> x, Vector& out) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("matvec: cols(A) = " + std::to_string(a.cols()) +
                                " but len(x) = " + std::to_string(x.size()));
  }
  if (out.size() != a.rows()) out = Vector(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out[r] = Dot(a.row(r), x);
}

Vector MatVec(const Matrix& a, const Vector& x) {
  Vector out(a.rows());
  MatVecInto(a, x.values(), out);
  return out;
}

Matrix MatMul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
  Matrix bt = b.Transposed();
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = Dot(a.row(r), bt.row(c));
  }
  return out;
}

double EuclideanNorm(const Vector& x) {
  // Scaled to avoid overflow for large iterates.
  const double scale = MaxAbs(x);
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (double v : x.values()) {
    const double s = v / scale;
    sum += s * s;
  }
  return scale * std::sqrt(sum);
}

double MaxAbs(const Vector& x) {
  double m = 0.0;
  for (double v : x.values()) {
    if (std::isnan(v)) return v;
    m = std::max(m, std::abs(v));
  }
  return m;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::NextU64() { return engine_(); }

double Rng::Uniform() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

double Rng::Normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * Uniform() - 1.0;
    v = 2.0 * Uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

Matrix RandomOrthogonal(std::size_t d, Rng& rng) {
  if (d == 0) throw std::invalid_argument("random_orthogonal: d must be >= 1");
  // Columns are stored as rows of `q` while orthonormalizing.
  Matrix g(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) g(r, c) = rng.Normal();
  }
  std::vector<std::vector<double>> cols(d, std::vector<double>(d));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) cols[c][r] = g(r, c);
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double>& v = cols[j];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const double proj = Dot(cols[k], v);
        for (std::size_t r = 0; r < d; ++r) v[r] -= proj * cols[k][r];
      }
    }
    double norm = std::sqrt(Dot(v, v));
    if (!(norm > 0.0)) throw std::runtime_error("random_orthogonal: rank-deficient draw");
    for (double& x : v) x /= norm;
  }
  Matrix q(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) q(r, c) = cols[c][r];
  }
  return q;
}

double OrthogonalityDefect(const Matrix& q) {
  Matrix qtq = MatMul(q.Transposed(), q);
  double worst = 0.0;
  for (std::size_t r = 0; r < qtq.rows(); ++r) {
    for (std::size_t c = 0; c < qtq.cols(); ++c) {
      const double target = r == c ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(qtq(r, c) - target));
    }
  }
  return worst;
}

}  // namespace crossgame
