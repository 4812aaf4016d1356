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

#include "iopsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iopsim/error.hpp"
#include "iopsim/kernels.hpp"

namespace iopsim {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
  }
  if (rows > kMaxDim || cols > kMaxDim) {
    throw Error(ErrorCode::DimensionTooLarge,
                std::to_string(rows) + "x" + std::to_string(cols) + " exceeds the dense cap of " +
                    std::to_string(kMaxDim));
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

bool use_parallel(std::size_t work) { return work >= kernels::kParallelWorkThreshold; }

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::ResultNotIOperator: return "ResultNotIOperator";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::BadMixture: return "BadMixture";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::BadTrajectory: return "BadTrajectory";
    case ErrorCode::BadStructure: return "BadStructure";
    case ErrorCode::ZeroProbabilityLabel: return "ZeroProbabilityLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case ErrorCode::NotDefinitive: return "NotDefinitive";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::BadSlitGeometry: return "BadSlitGeometry";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.assign(rows * cols, cplx{});
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_dims(rows, cols);
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                                  " does not match " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
  }
  if (!all_finite()) throw Error(ErrorCode::NonFinite, "matrix has NaN or Inf entries");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  check_dims(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw Error(ErrorCode::NonFinite, "matrix has NaN or Inf entries");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  if (!m.all_finite()) throw Error(ErrorCode::NonFinite, "non-finite diagonal");
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  if (!m.all_finite()) throw Error(ErrorCode::NonFinite, "non-finite diagonal");
  return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

cplx CMatrix::trace() const {
  cplx acc{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
  return acc;
}

double CMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const cplx& z : data_) acc += std::norm(z);
  return std::sqrt(acc);
}

bool CMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

std::vector<cplx> CMatrix::column(std::size_t c) const {
  std::vector<cplx> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx scalar) {
  for (cplx& z : data_) z *= scalar;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matmul: inner dimensions " +
                                                  std::to_string(a.cols()) + " vs " +
                                                  std::to_string(b.rows()));
  }
  CMatrix c(a.rows(), b.cols());
  if (use_parallel(a.rows() * a.cols() * b.cols())) {
    kernels::omp::matmul(a.entries(), b.entries(), c.entries(), a.rows(), a.cols(), b.cols());
  } else {
    kernels::serial::matmul(a.entries(), b.entries(), c.entries(), a.rows(), a.cols(), b.cols());
  }
  return c;
}

std::vector<cplx> apply(const CMatrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "apply: vector length");
  std::vector<cplx> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    cplx acc{};
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

CMatrix outer(std::span<const cplx> a, std::span<const cplx> b) {
  CMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  }
  return m;
}

CMatrix sandwich(const CMatrix& k, const CMatrix& rho) { return k * rho * k.adjoint(); }

// ---------------------------------------------------------------------------
// Hermitian eigenproblem

double hermiticity_residual(const CMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "hermiticity of non-square matrix");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) acc += std::norm(a(i, j) - std::conj(a(j, i)));
  }
  return std::sqrt(acc);
}

bool is_hermitian(const CMatrix& a, double rel_tol) {
  return a.is_square() && hermiticity_residual(a) <= rel_tol * std::max(1.0, a.frobenius_norm());
}

HermEigen herm_eig(const CMatrix& input) {
  if (!input.is_square()) throw Error(ErrorCode::DimensionMismatch, "herm_eig: matrix not square");
  const double norm = input.frobenius_norm();
  const double herm = hermiticity_residual(input);
  if (herm > kHermitianTol * std::max(1.0, norm)) {
    throw Error(ErrorCode::NotHermitian,
                "herm_eig: ||A - A^dagger||_F = " + std::to_string(herm));
  }

  const std::size_t n = input.rows();
  // Work on the Hermitian part so roundoff asymmetry never accumulates.
  CMatrix a = (input + input.adjoint()) * cplx{0.5};
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  CMatrix v = CMatrix::identity(n);

  const double threshold = kJacobiOffDiagTol * norm;
  auto off_norm = [&] {
    double acc = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q) acc += std::norm(a(p, q));
      }
    }
    return std::sqrt(acc);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (off_norm() <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const cplx phase = a(p, q) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J acts on (p, q): [[c, s e^{i phi}], [-s e^{-i phi}, c]].
        const cplx jpq = s * phase;
        const cplx jqp = -s * std::conj(phase);

        for (std::size_t r = 0; r < n; ++r) {  // A <- A J
          const cplx arp = a(r, p);
          const cplx arq = a(r, q);
          a(r, p) = arp * c + arq * jqp;
          a(r, q) = arp * jpq + arq * c;
        }
        for (std::size_t col = 0; col < n; ++col) {  // A <- J^dagger A
          const cplx apc = a(p, col);
          const cplx aqc = a(q, col);
          a(p, col) = c * apc + std::conj(jqp) * aqc;
          a(q, col) = std::conj(jpq) * apc + c * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t r = 0; r < n; ++r) {  // V <- V J
          const cplx vrp = v(r, p);
          const cplx vrq = v(r, q);
          v(r, p) = vrp * c + vrq * jqp;
          v(r, q) = vrp * jpq + vrq * c;
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "herm_eig: off-diagonal norm above threshold after " +
                    std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermEigen out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

CMatrix reconstruct(const HermEigen& eig, std::span<const cplx> diag) {
  const CMatrix& v = eig.eigenvectors;
  const std::size_t n = v.rows();
  if (diag.size() != v.cols()) throw Error(ErrorCode::DimensionMismatch, "reconstruct: diag length");
  CMatrix scaled = v;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < v.cols(); ++k) scaled(r, k) *= diag[k];
  }
  return scaled * v.adjoint();
}

CMatrix reconstruct(const HermEigen& eig) {
  std::vector<cplx> diag(eig.eigenvalues.begin(), eig.eigenvalues.end());
  return reconstruct(eig, diag);
}

CMatrix mat_exp_herm_generator(const CMatrix& h, double t, double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar) || !std::isfinite(t)) {
    throw Error(ErrorCode::BadParameter, "mat_exp: hbar must be positive and t finite");
  }
  const HermEigen eig = herm_eig(h);
  std::vector<cplx> phases(eig.eigenvalues.size());
  for (std::size_t k = 0; k < phases.size(); ++k) {
    phases[k] = std::polar(1.0, -t * eig.eigenvalues[k] / hbar);
  }
  return reconstruct(eig, phases);
}

// ---------------------------------------------------------------------------
// Composite-space primitives

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  if (use_parallel(c.rows() * c.cols())) {
    kernels::omp::kron(a.entries(), b.entries(), c.entries(), a.rows(), a.cols(), b.rows(), b.cols());
  } else {
    kernels::serial::kron(a.entries(), b.entries(), c.entries(), a.rows(), a.cols(), b.rows(),
                          b.cols());
  }
  return c;
}

CMatrix partial_trace(const CMatrix& ab, std::size_t dim_a, std::size_t dim_b, Subsystem over) {
  if (dim_a == 0 || dim_b == 0 || !ab.is_square() || ab.rows() != dim_a * dim_b) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial_trace: " + std::to_string(ab.rows()) + "x" + std::to_string(ab.cols()) +
                    " is not " + std::to_string(dim_a) + "*" + std::to_string(dim_b) + " square");
  }
  const bool trace_b = over == Subsystem::B;
  const std::size_t keep = trace_b ? dim_a : dim_b;
  CMatrix out(keep, keep);
  if (use_parallel(ab.rows() * ab.rows())) {
    kernels::omp::partial_trace(ab.entries(), out.entries(), dim_a, dim_b, trace_b);
  } else {
    kernels::serial::partial_trace(ab.entries(), out.entries(), dim_a, dim_b, trace_b);
  }
  return out;
}

double frobenius_dist(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "frobenius_dist");
  double acc = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) acc += std::norm(ea[i] - eb[i]);
  return std::sqrt(acc);
}

}  // namespace iopsim
