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
#include <string>
#include <utility>
#include <vector>

#include "iopsim/dynamics.hpp"
#include "iopsim/iop.hpp"
#include "iopsim/linalg.hpp"

namespace iopsim {

using Label = std::string;

inline constexpr double kProjectorTol = 1e-10;
inline constexpr double kCondensedFormTol = 1e-9;
inline constexpr double kBlockLeakTol = 1e-9;
inline constexpr double kZeroProbability = 1e-12;

/// A labeled family of mutually orthogonal projectors summing to the
/// identity, declared to hold over the period (tau1, tau2).
///
/// Each projector is checked idempotent and Hermitian, pairs are checked
/// orthogonal, and the family complete, all within kProjectorTol.
class CondensationStructure {
 public:
  CondensationStructure(std::vector<Label> labels, std::vector<CMatrix> projectors,
                        std::pair<double, double> period = {0.0, 1.0});

  /// Projectors onto groups of computational basis indices.
  static CondensationStructure from_basis_partition(std::size_t dim, std::vector<Label> labels,
                                                    const std::vector<std::vector<std::size_t>>& groups,
                                                    std::pair<double, double> period = {0.0, 1.0});

  std::size_t dim() const noexcept { return projectors_.front().rows(); }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<CMatrix>& projectors() const noexcept { return projectors_; }
  std::pair<double, double> period() const noexcept { return period_; }

  /// Index of `label`; UnknownLabel if absent.
  std::size_t index_of(const Label& label) const;
  const CMatrix& projector(const Label& label) const { return projectors_[index_of(label)]; }

  /// The same structure on a composite space: I_S (x) P^m.
  CondensationStructure lifted(std::size_t dim_s) const;

 private:
  std::vector<Label> labels_;
  std::vector<CMatrix> projectors_;
  std::pair<double, double> period_;
};

using LabelProbabilities = std::vector<std::pair<Label, double>>;

/// tr(P^m rho P^m) for every label, in structure order.
LabelProbabilities label_probabilities(const InfoOperator& rho, const CondensationStructure& c);

/// P^m rho P^m / tr(P^m rho P^m). ZeroProbabilityLabel below kZeroProbability.
InfoOperator condition_on_label(const InfoOperator& rho, const CondensationStructure& c,
                                const Label& m);

/// sum_m P^m rho P^m
InfoOperator block_project(const InfoOperator& rho, const CondensationStructure& c);

/// ||rho - sum_m P^m rho P^m||_F
double condensed_form_residual(const InfoOperator& rho, const CondensationStructure& c);
bool is_condensed_form(const InfoOperator& rho, const CondensationStructure& c);

/// max over m != n of ||P^m U P^n||_F
double block_leak(const UnitaryOp& u, const CondensationStructure& c);
/// True iff U never carries weight between distinct subspaces.
bool respects_condensation(const UnitaryOp& u, const CondensationStructure& c);

/// Finest coarsening of `candidate` that U respects: blocks m and n merge when
/// ||P^m U P^n|| or ||P^n U P^m|| exceeds `threshold` (transitively). Merged
/// labels are joined with '|'.
CondensationStructure finest_respected_structure(const UnitaryOp& u,
                                                 const CondensationStructure& candidate,
                                                 double threshold = kBlockLeakTol);

}  // namespace iopsim
