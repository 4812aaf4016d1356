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

#include "iopsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "iopsim/error.hpp"

namespace iopsim {

HamiltonianOp::HamiltonianOp(CMatrix h) : matrix_(std::move(h)) {
  if (!matrix_.is_square()) throw Error(ErrorCode::DimensionMismatch, "Hamiltonian must be square");
  if (!is_hermitian(matrix_)) {
    throw Error(ErrorCode::NotHermitian,
                "Hamiltonian residual " + std::to_string(hermiticity_residual(matrix_)));
  }
}

double unitarity_residual(const CMatrix& u) {
  if (!u.is_square()) throw Error(ErrorCode::DimensionMismatch, "unitarity of non-square matrix");
  return frobenius_dist(u.adjoint() * u, CMatrix::identity(u.rows()));
}

UnitaryOp::UnitaryOp(CMatrix u) : matrix_(std::move(u)) {
  const double r = unitarity_residual(matrix_);
  if (r > kUnitaryTol) {
    throw Error(ErrorCode::NotUnitary, "||U^dagger U - I||_F = " + std::to_string(r));
  }
}

UnitaryOp then(const UnitaryOp& first, const UnitaryOp& second) {
  if (first.dim() != second.dim()) throw Error(ErrorCode::DimensionMismatch, "then: dims differ");
  return UnitaryOp(second.matrix() * first.matrix());
}

InfoOperator evolve(const InfoOperator& rho, const UnitaryOp& u) {
  if (rho.dim() != u.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "evolve: rho dim " + std::to_string(rho.dim()) +
                                                  ", U dim " + std::to_string(u.dim()));
  }
  return validate(sandwich(u.matrix(), rho.matrix()));
}

UnitaryOp propagator(const HamiltonianOp& h, double t0, double t1, double hbar) {
  return UnitaryOp(mat_exp_herm_generator(h.matrix(), t1 - t0, hbar));
}

void HamiltonianSchedule::add(double duration, HamiltonianOp h) {
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw Error(ErrorCode::BadParameter, "segment duration must be finite and non-negative");
  }
  if (!segments_.empty() && h.dim() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "schedule segments must share a dimension");
  }
  segments_.emplace_back(duration, std::move(h));
}

std::size_t HamiltonianSchedule::dim() const {
  if (segments_.empty()) throw Error(ErrorCode::BadParameter, "empty Hamiltonian schedule");
  return segments_.front().second.dim();
}

UnitaryOp HamiltonianSchedule::propagator(double hbar) const {
  CMatrix u = CMatrix::identity(dim());
  for (const auto& [duration, h] : segments_) {
    u = mat_exp_herm_generator(h.matrix(), duration, hbar) * u;
  }
  return UnitaryOp(std::move(u));
}

std::vector<TrajectoryPoint> trajectory(const HamiltonianOp& h, const InfoOperator& rho0, double t0,
                                        double dt, std::size_t steps, double hbar) {
  if (rho0.dim() != h.dim()) throw Error(ErrorCode::DimensionMismatch, "trajectory: dims differ");
  const UnitaryOp step = propagator(h, 0.0, dt, hbar);
  std::vector<TrajectoryPoint> out;
  out.reserve(steps + 1);
  out.push_back({t0, rho0});
  for (std::size_t k = 1; k <= steps; ++k) {
    out.push_back({t0 + static_cast<double>(k) * dt, evolve(out.back().rho, step)});
  }
  return out;
}

std::vector<std::vector<TrajectoryPoint>> trajectories(const HamiltonianOp& h,
                                                       std::span<const InfoOperator> initial,
                                                       double t0, double dt, std::size_t steps,
                                                       double hbar) {
  std::vector<std::vector<TrajectoryPoint>> out(initial.size());
  std::vector<std::optional<Error>> failures(initial.size());
  const auto count = static_cast<std::int64_t>(initial.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = trajectory(h, initial[idx], t0, dt, steps, hbar);
    } catch (const Error& e) {
      failures[idx] = e;
    }
  }
  for (auto& f : failures) {
    if (f) throw *f;
  }
  return out;
}

double motion_residual(const HamiltonianOp& h, std::span<const TrajectoryPoint> traj, double hbar) {
  if (traj.size() < 3) {
    throw Error(ErrorCode::InsufficientPoints,
                "motion_residual needs >= 3 points, got " + std::to_string(traj.size()));
  }
  const double dt = traj[1].time - traj[0].time;
  if (!(dt > 0.0)) throw Error(ErrorCode::BadTrajectory, "times must be strictly increasing");
  for (std::size_t k = 1; k < traj.size(); ++k) {
    const double step = traj[k].time - traj[k - 1].time;
    if (!(step > 0.0)) throw Error(ErrorCode::BadTrajectory, "times must be strictly increasing");
    if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt))) {
      throw Error(ErrorCode::BadTrajectory, "times must be uniformly spaced");
    }
    if (traj[k].rho.dim() != h.dim()) throw Error(ErrorCode::DimensionMismatch, "trajectory dim");
  }
  const CMatrix& hm = h.matrix();
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
    const CMatrix& rho = traj[k].rho.matrix();
    const CMatrix derivative =
        (traj[k + 1].rho.matrix() - traj[k - 1].rho.matrix()) * cplx{0.0, hbar / (2.0 * dt)};
    const CMatrix commutator = hm * rho - rho * hm;
    worst = std::max(worst, frobenius_dist(derivative, commutator));
  }
  return worst;
}

}  // namespace iopsim
