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
#include <vector>

#include "iopsim/condensation.hpp"
#include "iopsim/iop.hpp"

namespace iopsim {

/// rho_S (x) rho_T
InfoOperator compose(const InfoOperator& rho_s, const InfoOperator& rho_t);

/// Object S of dimension dim_s coupled to apparatus T whose condensation
/// structure lives on the T factor.
struct CompositeSpec {
  std::size_t dim_s;
  CondensationStructure t_structure;

  CompositeSpec(std::size_t dim_s, CondensationStructure t_structure);
  std::size_t dim_t() const noexcept { return t_structure.dim(); }
  std::size_t dim() const noexcept { return dim_s * dim_t(); }
};

struct Branch {
  Label label;
  double weight;
  InfoOperator rho_s;
  InfoOperator rho_t;
  /// ||(I (x) P^m) rho (I (x) P^m) - p^m rho_S^m (x) rho_T^m||_F; zero iff the
  /// projected block is exactly separable.
  double residual;
};

struct BranchDecomposition {
  std::vector<Branch> branches;

  double total_weight() const;
  double total_residual() const;
  const Branch& at(const Label& label) const;
};

/// Expands rho over the apparatus subspaces: one branch per label with
/// p^m > kZeroProbability, each carrying the normalized partial traces of the
/// projected block and its separability residual.
BranchDecomposition branch_decompose(const InfoOperator& rho_st, const CompositeSpec& spec);

/// sum_m p^m rho_S^m
InfoOperator unconditional_object(const BranchDecomposition& b);

/// Recovers sigma_S from rho_ST = sigma_S (x) rho_T by tracing out T.
/// Returns the recovered operator and ||sigma_S (x) rho_T - rho_ST||_F.
std::pair<InfoOperator, double> recover_object(const InfoOperator& rho_st, const InfoOperator& rho_t);

}  // namespace iopsim
