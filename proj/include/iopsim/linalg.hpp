// Copyright 2026 The iopsim Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace iopsim {

using cplx = std::complex<double>;

/// Largest row or column count a CMatrix may have.
inline constexpr std::size_t kMaxDim = 4096;

/// Dense complex matrix, row-major. Both dimensions are positive and at most
/// kMaxDim, and every entry is finite; the constructors enforce this.
class CMatrix {
 public:
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  /// Row-wise literal, e.g. CMatrix{{0, 1}, {1, 0}}.
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix diagonal(std::span<const double> diag);
  static CMatrix diagonal(std::span<const cplx> diag);
  static CMatrix diagonal(std::initializer_list<double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }

  CMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  bool all_finite() const noexcept;

  /// Column c as a vector.
  std::vector<cplx> column(std::size_t c) const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx scalar);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(CMatrix a, cplx s);
CMatrix operator*(cplx s, CMatrix a);
/// Matrix product. Large products run on the OpenMP kernel, small ones on the
/// serial kernel; both give identical results up to summation order.
CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// Matrix-vector product.
std::vector<cplx> apply(const CMatrix& a, std::span<const cplx> v);

/// |a><b|
CMatrix outer(std::span<const cplx> a, std::span<const cplx> b);

/// k * rho * k^dagger
CMatrix sandwich(const CMatrix& k, const CMatrix& rho);

/// Eigen-decomposition of a Hermitian matrix: eigenvalues ascending, columns
/// of `eigenvectors` orthonormal and matched to `eigenvalues`.
struct HermEigen {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;
};

/// Relative tolerance applied to the Hermiticity precondition:
/// ||a - a^dagger||_F <= kHermitianTol * max(1, ||a||_F).
inline constexpr double kHermitianTol = 1e-10;

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagTol = 1e-12;

double hermiticity_residual(const CMatrix& a);
bool is_hermitian(const CMatrix& a, double rel_tol = kHermitianTol);

/// Cyclic complex Jacobi. Throws NotHermitian when `a` fails the Hermiticity
/// precondition and NoConvergence when the sweep budget runs out.
HermEigen herm_eig(const CMatrix& a);

/// V diag(f(lambda)) V^dagger
CMatrix reconstruct(const HermEigen& eig);
CMatrix reconstruct(const HermEigen& eig, std::span<const cplx> diag);

/// exp(-i t h / hbar), computed through the eigenbasis of h.
CMatrix mat_exp_herm_generator(const CMatrix& h, double t, double hbar = 1.0);

CMatrix kron(const CMatrix& a, const CMatrix& b);

enum class Subsystem { A, B };

/// Traces the `over` factor out of a (dim_a*dim_b)-square matrix.
CMatrix partial_trace(const CMatrix& ab, std::size_t dim_a, std::size_t dim_b, Subsystem over);

double frobenius_dist(const CMatrix& a, const CMatrix& b);

}  // namespace iopsim
