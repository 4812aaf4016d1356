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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "iopsim/iop.hpp"
#include "iopsim/scenarios.hpp"
#include "test_support.hpp"

namespace iopsim {
namespace {

using testing::code_of;

TEST(SternGerlach, BuildingBlocks) {
  // R~+/2 swaps psi+ and psi0; R~-/2 swaps psi0 and psi-.
  const CMatrix plus{{0, 2, 0}, {2, 0, 0}, {0, 0, 2}};
  const CMatrix minus{{2, 0, 0}, {0, 0, 2}, {0, 2, 0}};
  EXPECT_LT(frobenius_dist(stern_r_tilde(true), plus), 1e-14);
  EXPECT_LT(frobenius_dist(stern_r_tilde(false), minus), 1e-14);
  const CMatrix u = stern_gerlach_unitary();
  EXPECT_LT(frobenius_dist(u.adjoint() * u, CMatrix::identity(6)), 1e-12);
  EXPECT_LT(frobenius_dist(pseudo_spin_rz(), CMatrix::diagonal({1.0, 0.0, -1.0})), 1e-15);
}

TEST(SternGerlach, FinalStateAndBranches) {
  const ScenarioReport r = stern_gerlach({});
  EXPECT_TRUE(r.all_passed());
  // 1/2 (up (x) psi-  +  down (x) psi+): indices 0*3+2 and 1*3+0.
  CMatrix expected(6, 6);
  expected(2, 2) = expected(3, 3) = 0.5;
  EXPECT_EQ(r.outputs().at("rho_t2").at("entries").size(), 36u);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const auto& e = r.outputs().at("rho_t2").at("entries")[i * 6 + j];
      EXPECT_NEAR(e[0].get<double>(), expected(i, j).real(), 1e-12);
      EXPECT_NEAR(e[1].get<double>(), 0.0, 1e-12);
    }
  }
  const auto weights = r.outputs().at("branch_weights");
  ASSERT_EQ(weights.size(), 2u);
  EXPECT_NEAR(weights[0].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(weights[1].get<double>(), 0.5, 1e-12);
}

TEST(SternGerlach, UnequalPriorKeepsChecksGreen) {
  EXPECT_TRUE(stern_gerlach({0.8, 5000}).all_passed());
  EXPECT_TRUE(stern_gerlach({1.0, 5000}).all_passed());
}

TEST(Cat, DefaultAndEdgeWeights) {
  EXPECT_TRUE(cat({}).all_passed());
  EXPECT_TRUE(cat({0.9, 20, 0.3}).all_passed());
}

TEST(SpinOne, EntropiesAndTransposition) {
  const ScenarioReport r = spin_one_example();
  EXPECT_TRUE(r.all_passed());
  EXPECT_NEAR(r.outputs().at("entropies").at("rho_prime").get<double>(), std::log(2.0), 1e-12);
  EXPECT_NEAR(r.outputs().at("entropies").at("rho_max").get<double>(), std::log(3.0), 1e-12);
  EXPECT_TRUE(r.outputs().at("entropy_statement_check").at("suspected_transposition").get<bool>());
  EXPECT_EQ(r.outputs().at("decompose_weights"), Json::parse("[0.5, 0.5]"));
}

TEST(TwoSlit, CoherentContrastExceedsIncoherent) {
  const ScenarioReport r = two_slit({});
  EXPECT_TRUE(r.all_passed());
  EXPECT_GT(r.outputs().at("contrast_coherent").get<double>(), r.outputs().at("contrast_incoherent").get<double>());
}

TEST(TwoSlit, SingleSlitComputationsAgree) {
  TwoSlitParams p;
  p.slits = {{60, 68}};
  const ScenarioReport r = two_slit(p);
  EXPECT_TRUE(r.all_passed());
  EXPECT_LE(r.check("slit.one_slit_match").residual, 1e-9);
}

TEST(TwoSlit, Geometry) {
  const auto s = parse_slits("40:44,84:88");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].begin, 84u);
  EXPECT_EQ(s[1].end, 88u);
  EXPECT_EQ(code_of([] { parse_slits("40-44"); }), ErrorCode::BadSlitGeometry);
  EXPECT_EQ(code_of([] { parse_slits(""); }), ErrorCode::BadSlitGeometry);
  TwoSlitParams p;
  p.slits = {{40, 50}, {45, 60}};
  EXPECT_EQ(code_of([&] { check_slit_geometry(p); }), ErrorCode::BadSlitGeometry);
  p.slits = {{120, 130}};
  EXPECT_EQ(code_of([&] { check_slit_geometry(p); }), ErrorCode::BadSlitGeometry);
  p.slits = {{4, 4}};
  EXPECT_EQ(code_of([&] { check_slit_geometry(p); }), ErrorCode::BadSlitGeometry);
  p.grid_n = 8;
  p.slits = {{1, 2}};
  EXPECT_EQ(code_of([&] { check_slit_geometry(p); }), ErrorCode::BadSlitGeometry);
}

TEST(TwoSlit, RingSpectrum) {
  // Ring hopping eigenvalues: -2 cos(2 pi k / n), plus one zero per extra dim.
  const std::size_t n = 12;
  const auto eig = herm_eig(ring_hopping_hamiltonian(n, 1));
  std::vector<double> expected{0.0};
  for (std::size_t k = 0; k < n; ++k) expected.push_back(-2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  std::sort(expected.begin(), expected.end());
  ASSERT_EQ(eig.eigenvalues.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(eig.eigenvalues[i], expected[i], 1e-12);
  EXPECT_DOUBLE_EQ(interference_contrast({1.0, 5.0, 2.0, 9.0}, 1, 3), 3.0);
}

TEST(Dispatch, ParamsAndTolerances) {
  const ScenarioConfig cfg;
  EXPECT_EQ(code_of([&] { run_scenario("nope", {}, cfg); }), ErrorCode::UnknownScenario);
  EXPECT_EQ(code_of([&] { run_scenario("cat", {{"grid", "4"}}, cfg); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([&] { run_scenario("cat", {{"p-plus", "abc"}}, cfg); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([&] { run_scenario("cat", {{"p-plus", "1.5"}}, cfg); }), ErrorCode::BadParameter);
  ScenarioConfig bad;
  bad.tolerances["sg.not_a_check"] = 1e-3;
  EXPECT_EQ(code_of([&] { run_scenario("stern-gerlach", {}, bad); }), ErrorCode::BadParameter);
  ScenarioConfig loose;
  loose.tolerances["cat.condensed_form"] = 1e-3;
  const auto r = run_scenario("cat", {{"steps", "10"}}, loose);
  EXPECT_EQ(r.check("cat.condensed_form").tolerance, 1e-3);
  for (const auto& name : scenario_names()) EXPECT_FALSE(default_tolerances(name).empty()) << name;
}

TEST(Dispatch, ReportsAreDeterministic) {
  ScenarioConfig cfg;
  cfg.seed = 1234;
  for (const auto& name : scenario_names()) {
    const std::string a = run_scenario(name, {}, cfg).to_json().dump();
    const std::string b = run_scenario(name, {}, cfg).to_json().dump();
    EXPECT_EQ(a, b) << name;
  }
}

}  // namespace
}  // namespace iopsim
