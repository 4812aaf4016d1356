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

#include "iopsim/iop.hpp"
#include "iopsim/linalg.hpp"

namespace iopsim {

inline constexpr double kUnitaryTol = 1e-9;

/// Hermitian generator of time development (energy units).
class HamiltonianOp {
 public:
  explicit HamiltonianOp(CMatrix h);
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const CMatrix& matrix() const noexcept { return matrix_; }

 private:
  CMatrix matrix_;
};

/// ||U^dagger U - I||_F <= kUnitaryTol, checked at construction.
class UnitaryOp {
 public:
  explicit UnitaryOp(CMatrix u);
  static UnitaryOp identity(std::size_t n) { return UnitaryOp(CMatrix::identity(n)); }

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const CMatrix& matrix() const noexcept { return matrix_; }
  UnitaryOp adjoint() const { return UnitaryOp(matrix_.adjoint()); }

 private:
  CMatrix matrix_;
};

/// ||U^dagger U - I||_F
double unitarity_residual(const CMatrix& u);

/// Applies `second` after `first`.
UnitaryOp then(const UnitaryOp& first, const UnitaryOp& second);

/// U rho U^dagger
InfoOperator evolve(const InfoOperator& rho, const UnitaryOp& u);

/// exp(-i (t1 - t0) H / hbar). t1 < t0 gives reverse-time development.
UnitaryOp propagator(const HamiltonianOp& h, double t0, double t1, double hbar = 1.0);

/// Piecewise-constant Hamiltonian: segments applied in order, each for its
/// duration. Models interactions that switch on and off.
class HamiltonianSchedule {
 public:
  void add(double duration, HamiltonianOp h);
  std::size_t dim() const;
  bool empty() const noexcept { return segments_.empty(); }
  const std::vector<std::pair<double, HamiltonianOp>>& segments() const noexcept { return segments_; }

  /// Ordered product U_n ... U_1 over all segments.
  UnitaryOp propagator(double hbar = 1.0) const;

 private:
  std::vector<std::pair<double, HamiltonianOp>> segments_;
};

struct TrajectoryPoint {
  double time;
  InfoOperator rho;
};

/// rho(t0 + k dt) for k = 0..steps, generated by repeated application of the
/// one-step propagator.
std::vector<TrajectoryPoint> trajectory(const HamiltonianOp& h, const InfoOperator& rho0, double t0,
                                        double dt, std::size_t steps, double hbar = 1.0);

/// Trajectories for independent initial conditions, computed in parallel.
std::vector<std::vector<TrajectoryPoint>> trajectories(const HamiltonianOp& h,
                                                       std::span<const InfoOperator> initial,
                                                       double t0, double dt, std::size_t steps,
                                                       double hbar = 1.0);

/// max over interior points of || i hbar (rho_{k+1} - rho_{k-1}) / (2 dt) - [H, rho_k] ||_F.
/// Needs at least three strictly increasing, uniformly spaced times.
double motion_residual(const HamiltonianOp& h, std::span<const TrajectoryPoint> traj,
                       double hbar = 1.0);

}  // namespace iopsim
