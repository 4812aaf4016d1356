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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "iopsim/linalg.hpp"

namespace iopsim {

inline constexpr double kTraceTol = 1e-10;
/// Eigenvalues in [-kPositivityTol, 0) are clamped to zero; anything lower is
/// rejected as NotPositive.
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kPurityTol = 1e-9;

/// Residuals of a candidate matrix against the information-operator
/// conditions, reported without throwing.
struct ValidationReport {
  bool square = false;
  double hermiticity_residual = 0.0;  // ||m - m^dagger||_F
  double trace_residual = 0.0;        // |tr(m) - 1|
  double min_eigenvalue = 0.0;
  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;

  bool valid() const noexcept { return square && hermitian && unit_trace && positive; }
};

ValidationReport inspect(const CMatrix& m);

/// A Hermitian, unit-trace, positive-semidefinite matrix. Only obtainable
/// through validate(), so holding one is proof the invariants hold.
class InfoOperator {
 public:
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const CMatrix& matrix() const noexcept { return matrix_; }

  /// Checks Hermiticity, then trace, then positivity. Slightly negative
  /// eigenvalues are clamped and the trace renormalized.
  friend InfoOperator validate(const CMatrix& m);

 private:
  explicit InfoOperator(CMatrix m) : matrix_(std::move(m)) {}
  CMatrix matrix_;
};

InfoOperator validate(const CMatrix& m);

/// (1/d) I_d
InfoOperator max_iop(std::size_t d);

/// -sum lambda log lambda with 0 log 0 = 0 (natural log).
double entropy(const InfoOperator& rho);

/// |tr(rho^2) - 1| <= kPurityTol
bool is_pure(const InfoOperator& rho);
double purity(const InfoOperator& rho);

/// Contracting operator K taking a source-space i-operator to K rho K^dagger.
struct Contraction {
  CMatrix k;
  std::size_t source_dim;
  std::size_t target_dim;

  explicit Contraction(CMatrix op);
};

/// validate(K rho K^dagger); ResultNotIOperator if that fails.
InfoOperator contract(const InfoOperator& rho, const Contraction& k);

/// K = V diag(sqrt(lambda_i d)) V^dagger in the eigenbasis of `target`, so
/// that K max_iop(d) K^dagger = target.
Contraction contraction_from_max(const InfoOperator& target);

/// Eigenvalue threshold separating support from kernel.
inline constexpr double kSupportTol = 1e-10;
/// Allowed residual of a support vector of `part` outside support(whole).
inline constexpr double kSupportResidualTol = 1e-8;

/// K = sum_i sqrt(a_i) |part_i><whole_i| with both spectra ascending and
/// a_i = lambda_part_i / lambda_whole_i (zero on the kernel of `whole`).
/// Throws SupportViolation unless support(part) is inside support(whole).
Contraction contraction_from_mixture(const InfoOperator& whole, const InfoOperator& part);

/// Largest distance of a support eigenvector of `part` from support(whole).
double support_excess(const InfoOperator& whole, const InfoOperator& part);

/// Convex combination sum_i p_i rho_i with p_i > 0 summing to one.
class Mixture {
 public:
  Mixture(std::vector<double> weights, std::vector<InfoOperator> components);

  /// Weights are read off as p_i = tr(sigma_i) and components as
  /// sigma_i / p_i. Each sigma_i must be positive with positive trace.
  static Mixture from_unnormalized(std::span<const CMatrix> parts);

  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<InfoOperator>& components() const noexcept { return components_; }
  std::size_t dim() const noexcept { return components_.front().dim(); }

  /// sum_i p_i rho_i
  InfoOperator combined() const;

 private:
  std::vector<double> weights_;
  std::vector<InfoOperator> components_;
};

inline constexpr double kWeightSumTol = 1e-10;

std::vector<std::pair<double, InfoOperator>> decompose(const Mixture& mixture);

}  // namespace iopsim
