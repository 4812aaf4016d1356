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

#include "iopsim/ivec.hpp"

#include <cmath>
#include <string>

#include "iopsim/error.hpp"

namespace iopsim {

InfoVector::InfoVector(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty() || amplitudes_.size() > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch, "information vector dimension out of range");
  }
  double norm2 = 0.0;
  for (const cplx& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::NonFinite, "non-finite amplitude");
    }
    norm2 += std::norm(z);
  }
  const double norm = std::sqrt(norm2);
  if (norm < 1e-12) throw Error(ErrorCode::ZeroVector, "norm " + std::to_string(norm));
  cplx gauge{1.0 / norm};
  for (const cplx& z : amplitudes_) {
    if (std::abs(z) > kGaugeMagnitude * norm) {
      gauge = std::conj(z) / (std::abs(z) * norm);
      break;
    }
  }
  for (cplx& z : amplitudes_) z *= gauge;
  for (cplx& z : amplitudes_) {
    if (std::abs(z) > kGaugeMagnitude) {
      // Drop the imaginary roundoff left on the gauge component.
      z = cplx{std::abs(z), 0.0};
      break;
    }
  }
}

InfoVector InfoVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  std::vector<cplx> amps(dim);
  amps[index] = 1.0;
  return InfoVector(std::move(amps));
}

InfoOperator to_iop(const InfoVector& v) { return validate(outer(v.amplitudes(), v.amplitudes())); }

InfoVector from_iop(const InfoOperator& rho) {
  if (!is_pure(rho)) {
    throw Error(ErrorCode::NotPure, "tr(rho^2) = " + std::to_string(purity(rho)));
  }
  const HermEigen eig = herm_eig(rho.matrix());
  return InfoVector(eig.eigenvectors.column(rho.dim() - 1));
}

InfoVector superpose(std::span<const std::pair<cplx, InfoVector>> terms) {
  if (terms.empty()) throw Error(ErrorCode::ZeroVector, "empty superposition");
  const std::size_t n = terms.front().second.dim();
  std::vector<cplx> acc(n);
  for (const auto& [c, v] : terms) {
    if (v.dim() != n) throw Error(ErrorCode::DimensionMismatch, "superpose: dims differ");
    for (std::size_t i = 0; i < n; ++i) acc[i] += c * v[i];
  }
  return InfoVector(std::move(acc));
}

InfoVector evolve(const InfoVector& v, const UnitaryOp& u) {
  if (u.dim() != v.dim()) throw Error(ErrorCode::DimensionMismatch, "evolve: dims differ");
  return InfoVector(apply(u.matrix(), v.amplitudes()));
}

}  // namespace iopsim
