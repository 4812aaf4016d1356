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

#include "iopsim/composite.hpp"

#include <cstdint>
#include <optional>
#include <string>

#include "iopsim/error.hpp"

namespace iopsim {

InfoOperator compose(const InfoOperator& rho_s, const InfoOperator& rho_t) {
  return validate(kron(rho_s.matrix(), rho_t.matrix()));
}

CompositeSpec::CompositeSpec(std::size_t dim_s_, CondensationStructure t_structure_)
    : dim_s(dim_s_), t_structure(std::move(t_structure_)) {
  if (dim_s == 0) throw Error(ErrorCode::DimensionMismatch, "dim_s must be positive");
}

double BranchDecomposition::total_weight() const {
  double acc = 0.0;
  for (const Branch& b : branches) acc += b.weight;
  return acc;
}

double BranchDecomposition::total_residual() const {
  double acc = 0.0;
  for (const Branch& b : branches) acc += b.residual;
  return acc;
}

const Branch& BranchDecomposition::at(const Label& label) const {
  for (const Branch& b : branches) {
    if (b.label == label) return b;
  }
  throw Error(ErrorCode::UnknownLabel, "no branch '" + label + "'");
}

BranchDecomposition branch_decompose(const InfoOperator& rho_st, const CompositeSpec& spec) {
  if (rho_st.dim() != spec.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "branch_decompose: rho dim " +
                                                  std::to_string(rho_st.dim()) + " vs " +
                                                  std::to_string(spec.dim_s) + "*" +
                                                  std::to_string(spec.dim_t()));
  }
  const CondensationStructure& ts = spec.t_structure;
  const CMatrix id_s = CMatrix::identity(spec.dim_s);

  // Labels are independent; each slot is filled by exactly one iteration.
  std::vector<std::optional<Branch>> slots(ts.size());
  std::vector<std::optional<Error>> failures(ts.size());
  const auto count = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto m = static_cast<std::size_t>(i);
    try {
      const CMatrix lifted = kron(id_s, ts.projectors()[m]);
      const CMatrix block = sandwich(lifted, rho_st.matrix());
      const double p = block.trace().real();
      if (!(p > kZeroProbability)) continue;
      const CMatrix normalized = block * cplx{1.0 / p};
      InfoOperator rho_s = validate(partial_trace(normalized, spec.dim_s, spec.dim_t(), Subsystem::B));
      InfoOperator rho_t = validate(partial_trace(normalized, spec.dim_s, spec.dim_t(), Subsystem::A));
      const double residual =
          frobenius_dist(block, kron(rho_s.matrix(), rho_t.matrix()) * cplx{p});
      slots[m] = Branch{ts.labels()[m], p, std::move(rho_s), std::move(rho_t), residual};
    } catch (const Error& e) {
      failures[m] = e;
    }
  }
  for (auto& f : failures) {
    if (f) throw *f;
  }
  BranchDecomposition out;
  for (auto& s : slots) {
    if (s) out.branches.push_back(std::move(*s));
  }
  return out;
}

InfoOperator unconditional_object(const BranchDecomposition& b) {
  if (b.branches.empty()) throw Error(ErrorCode::BadMixture, "no branches to combine");
  const std::size_t n = b.branches.front().rho_s.dim();
  CMatrix acc(n, n);
  double total = 0.0;
  for (const Branch& br : b.branches) {
    acc += br.rho_s.matrix() * cplx{br.weight};
    total += br.weight;
  }
  // Weights of a decomposition sum to tr(rho) = 1 up to roundoff.
  return validate(acc * cplx{1.0 / total});
}

std::pair<InfoOperator, double> recover_object(const InfoOperator& rho_st, const InfoOperator& rho_t) {
  if (rho_st.dim() % rho_t.dim() != 0) {
    throw Error(ErrorCode::DimensionMismatch, "recover_object: dim_t does not divide dim");
  }
  const std::size_t dim_s = rho_st.dim() / rho_t.dim();
  InfoOperator sigma = validate(partial_trace(rho_st.matrix(), dim_s, rho_t.dim(), Subsystem::B));
  const double residual = frobenius_dist(kron(sigma.matrix(), rho_t.matrix()), rho_st.matrix());
  return {std::move(sigma), residual};
}

}  // namespace iopsim
