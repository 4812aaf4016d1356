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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iopsim/dynamics.hpp"
#include "iopsim/linalg.hpp"
#include "iopsim/report.hpp"

namespace iopsim {

/// Settings shared by every scenario run.
struct ScenarioConfig {
  double hbar = 1.0;
  std::uint64_t seed = 0;
  /// Per-check tolerance overrides, keyed by check name. Keys must be
  /// listed in default_tolerances() for the scenario.
  std::map<std::string, double> tolerances;
};

std::vector<std::string> scenario_names();

/// Default tolerance of every check a scenario emits. UnknownScenario for an
/// unknown name.
const std::map<std::string, double>& default_tolerances(std::string_view scenario);

/// Dispatches by name. `params` values are parsed per scenario; unknown keys
/// and malformed values raise BadParameter, unknown names UnknownScenario.
ScenarioReport run_scenario(std::string_view name, const std::map<std::string, std::string>& params,
                            const ScenarioConfig& cfg);

// --- Stern-Gerlach ---------------------------------------------------------
// Object S basis (up, down); apparatus T basis (psi+, psi0, psi-), i.e. the
// R_z eigenvalues +1, 0, -1 in that order.

CMatrix spin_half_sz();
CMatrix pseudo_spin_rz();
CMatrix pseudo_spin_rx();
/// sqrt(2)(R_z + s)R_x(R_z + s) + R_z(R_z - s) for s = +1 (plus) or -1.
CMatrix stern_r_tilde(bool plus);
/// (1/4)[(1 - 2 s_z) (x) R~+ + (1 + 2 s_z) (x) R~-]
CMatrix stern_gerlach_unitary();

struct SternGerlachParams {
  double p_up_prior = 0.5;
  std::size_t samples = 20000;
};

ScenarioReport stern_gerlach(const SternGerlachParams& params, const ScenarioConfig& cfg = {});

// --- Condensed two-outcome system ("cat") ----------------------------------

struct CatParams {
  double p_plus = 0.3;
  std::size_t steps = 100;
  double dt = 0.1;
};

ScenarioReport cat(const CatParams& params, const ScenarioConfig& cfg = {});

// --- Spin-1 multiple description --------------------------------------------

ScenarioReport spin_one_example(const ScenarioConfig& cfg = {});

// --- Slit screen -------------------------------------------------------------

/// Half-open site range [begin, end).
struct SlitRange {
  std::size_t begin;
  std::size_t end;
};

struct TwoSlitParams {
  std::size_t grid_n = 128;
  double p_pass = 0.5;
  std::vector<SlitRange> slits = {{40, 44}, {84, 88}};
  std::size_t steps = 80;
  double dt = 0.25;
  /// Standard deviation of the incoming packet in sites; 0 means grid_n / 4.
  double packet_width = 0.0;
};

/// "40:44,84:88" -> ranges. BadSlitGeometry on malformed text.
std::vector<SlitRange> parse_slits(std::string_view text);

/// BadSlitGeometry unless grid_n >= 16 and the ranges are non-empty,
/// disjoint and inside the grid.
void check_slit_geometry(const TwoSlitParams& params);

/// Nearest-neighbour hopping on a periodic ring of n sites, amplitude 1,
/// plus `extra` decoupled zero-energy dimensions.
CMatrix ring_hopping_hamiltonian(std::size_t n, std::size_t extra = 0);

/// max - min of intensity over [begin, end).
double interference_contrast(const std::vector<double>& intensity, std::size_t begin, std::size_t end);

ScenarioReport two_slit(const TwoSlitParams& params, const ScenarioConfig& cfg = {});

}  // namespace iopsim
