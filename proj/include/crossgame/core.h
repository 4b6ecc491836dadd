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

#ifndef CROSSGAME_CORE_H_
#define CROSSGAME_CORE_H_

// Dense numerics used throughout the library: complex scalars, small real
// vectors and row-major matrices, orthonormalization and a seeded generator.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace crossgame {

using Complex = std::complex<double>;

// Throws std::invalid_argument if either component is NaN or infinite.
void RequireFinite(Complex z, const char* what);
bool IsFinite(Complex z);

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, double fill = 0.0) : data_(n, fill) {}
  Vector(std::initializer_list<double> values) : data_(values) {}
  explicit Vector(std::vector<double> values) : data_(std::move(values)) {}

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }
  const std::vector<double>& raw() const { return data_; }

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double s);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> data_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(double s, Vector a);

// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  // Throws std::invalid_argument unless rows * cols == entries.size().
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> entries() const { return data_; }

  Matrix Transposed() const;
  double MaxAbs() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Dense product A * x. Throws std::invalid_argument on dimension mismatch.
Vector MatVec(const Matrix& a, const Vector& x);
// Writes A * x into `out` (resized as needed); no allocation when sizes match.
void MatVecInto(const Matrix& a, std::span<const double> x, Vector& out);
Matrix MatMul(const Matrix& a, const Matrix& b);

double Dot(std::span<const double> a, std::span<const double> b);
double EuclideanNorm(const Vector& x);
double MaxAbs(const Vector& x);

// Deterministic generator: 64-bit Mersenne Twister (std::mt19937_64, whose
// output sequence is fixed by the C++ standard). Uniforms take the top 53
// bits; normals use the Marsaglia polar method. Neither relies on the
// implementation-defined std:: distributions, so streams are identical across
// standard libraries for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t NextU64();
  // Uniform on [0, 1).
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  double Normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Random d x d orthogonal matrix: Gram-Schmidt (modified, with one
// reorthogonalization pass) applied to the columns of a matrix with
// independent standard-normal entries drawn row by row.
// Throws std::invalid_argument when d == 0.
Matrix RandomOrthogonal(std::size_t d, Rng& rng);

// max_ij |(Q^T Q - I)_ij|.
double OrthogonalityDefect(const Matrix& q);

}  // namespace crossgame

#endif  // CROSSGAME_CORE_H_
