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

#include "iopsim/dynamics.hpp"
#include "iopsim/iop.hpp"

namespace iopsim {

inline constexpr double kVectorNormTol = 1e-10;
/// Magnitude above which a component can carry the gauge.
inline constexpr double kGaugeMagnitude = 1e-12;

/// Unit vector standing in for a pure i-operator. The global phase is fixed
/// so the first component with magnitude above kGaugeMagnitude is real and
/// positive.
class InfoVector {
 public:
  /// Normalizes and gauge-fixes `amplitudes`; ZeroVector if the norm is
  /// below 1e-12.
  explicit InfoVector(std::vector<cplx> amplitudes);

  static InfoVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  const cplx& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

 private:
  std::vector<cplx> amplitudes_;
};

/// |psi><psi|
InfoOperator to_iop(const InfoVector& v);

/// Gauge-fixed eigenvector of the unit eigenvalue; NotPure unless is_pure.
InfoVector from_iop(const InfoOperator& rho);

/// Normalized, gauge-fixed sum of c_i v_i.
InfoVector superpose(std::span<const std::pair<cplx, InfoVector>> terms);

/// U v, re-gauged.
InfoVector evolve(const InfoVector& v, const UnitaryOp& u);

}  // namespace iopsim
