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

#include "iopsim/condensation.hpp"
#include "iopsim/dynamics.hpp"
#include "iopsim/random.hpp"
#include "iopsim/rng.hpp"
#include "test_support.hpp"

namespace iopsim {
namespace {

using testing::code_of;

CondensationStructure three_blocks() {
  return CondensationStructure::from_basis_partition(4, {"a", "b", "c"}, {{0, 1}, {2}, {3}});
}

TEST(Structure, RejectsBrokenFamilies) {
  const CMatrix p0 = CMatrix::diagonal({1.0, 0.0});
  const CMatrix p1 = CMatrix::diagonal({0.0, 1.0});
  EXPECT_EQ(code_of([&] { CondensationStructure({"x"}, {p0}); }), ErrorCode::BadStructure);
  EXPECT_EQ(code_of([&] { CondensationStructure({"x", "y"}, {p0, p0}); }), ErrorCode::BadStructure);
  EXPECT_EQ(code_of([&] { CondensationStructure({"x", "x"}, {p0, p1}); }), ErrorCode::BadStructure);
  EXPECT_EQ(code_of([&] { CondensationStructure({"x", "y"}, {p0 * cplx(2.0), p1}); }), ErrorCode::BadStructure);
  EXPECT_EQ(code_of([&] { three_blocks().index_of("zz"); }), ErrorCode::UnknownLabel);
  EXPECT_NO_THROW(CondensationStructure({"x", "y"}, {p0, p1}));
}

TEST(Structure, LiftedActsOnTheSecondFactor) {
  const auto lifted = three_blocks().lifted(2);
  EXPECT_EQ(lifted.dim(), 8u);
  EXPECT_EQ(lifted.projector("b"), kron(CMatrix::identity(2), CMatrix::diagonal({0.0, 0.0, 1.0, 0.0})));
}

TEST(LabelProbabilities, MaxOperatorSplitsByBlockDimension) {
  const auto p = label_probabilities(max_iop(4), three_blocks());
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].first, "a");
  EXPECT_NEAR(p[0].second, 0.5, 1e-15);
  EXPECT_NEAR(p[1].second, 0.25, 1e-15);
  EXPECT_NEAR(p[2].second, 0.25, 1e-15);
  const auto inside = label_probabilities(validate(CMatrix::diagonal({0.0, 0.0, 1.0, 0.0})), three_blocks());
  EXPECT_EQ(inside[1].second, 1.0);
  EXPECT_EQ(inside[0].second, 0.0);
}

TEST(ConditionOnLabel, ProjectsAndRenormalizes) {
  const auto c = CondensationStructure::from_basis_partition(3, {"in", "out"}, {{0, 1}, {2}});
  const InfoOperator got = condition_on_label(max_iop(3), c, "in");
  EXPECT_LT(frobenius_dist(got.matrix(), CMatrix::diagonal({0.5, 0.5, 0.0})), 1e-15);
  const InfoOperator zero_out = validate(CMatrix::diagonal({0.5, 0.5, 0.0}));
  EXPECT_EQ(code_of([&] { condition_on_label(zero_out, c, "out"); }), ErrorCode::ZeroProbabilityLabel);
  EXPECT_EQ(code_of([&] { condition_on_label(max_iop(2), c, "in"); }), ErrorCode::DimensionMismatch);
}

TEST(CondensedForm, BlockDiagonalVersusSuperposition) {
  const auto c = three_blocks();
  EXPECT_TRUE(is_condensed_form(validate(CMatrix{{0.3, 0.1, 0, 0}, {0.1, 0.3, 0, 0}, {0, 0, 0.2, 0}, {0, 0, 0, 0.2}}), c));
  // (|1> + |2>)/sqrt(2) straddles blocks a and b.
  const InfoOperator cat = validate(CMatrix{{0, 0, 0, 0}, {0, 0.5, 0.5, 0}, {0, 0.5, 0.5, 0}, {0, 0, 0, 0}});
  EXPECT_FALSE(is_condensed_form(cat, c));
  EXPECT_NEAR(condensed_form_residual(cat, c), std::sqrt(0.5), 1e-15);
  const InfoOperator projected = block_project(cat, c);
  EXPECT_EQ(condensed_form_residual(projected, c), 0.0);
}

TEST(BlockLeak, IdentitySwapAndFinestStructure) {
  const auto c = three_blocks();
  EXPECT_TRUE(respects_condensation(UnitaryOp::identity(4), c));
  // Swap basis states 1 (block a) and 2 (block b).
  const UnitaryOp swap(CMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  EXPECT_FALSE(respects_condensation(swap, c));
  EXPECT_NEAR(block_leak(swap, c), 1.0, 1e-15);
  const auto merged = finest_respected_structure(swap, c);
  EXPECT_EQ(merged.labels(), (std::vector<Label>{"a|b", "c"}));
  EXPECT_TRUE(respects_condensation(swap, merged));
}

TEST(BlockLeak, RandomBlockUnitariesRespectTheirStructure) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    CMatrix basis(1, 1);
    const auto c = random::structure(6, 3, rng, &basis);
    const UnitaryOp u(random::block_unitary(c, basis, rng));
    EXPECT_LT(block_leak(u, c), 1e-12);
    const InfoOperator rho = random::info_operator(6, rng);
    const auto before = label_probabilities(rho, c);
    const auto after = label_probabilities(evolve(rho, u), c);
    for (std::size_t i = 0; i < before.size(); ++i) EXPECT_NEAR(before[i].second, after[i].second, 1e-12);
  }
}

}  // namespace
}  // namespace iopsim
