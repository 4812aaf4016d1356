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

#include "iopsim/ivec.hpp"
#include "iopsim/random.hpp"
#include "iopsim/rng.hpp"
#include "test_support.hpp"

namespace iopsim {
namespace {

using testing::code_of;

const cplx I{0.0, 1.0};

TEST(InfoVector, NormalizesAndFixesGauge) {
  const InfoVector v({0.0, -2.0});
  EXPECT_EQ(v[0], cplx(0.0));
  EXPECT_NEAR(std::abs(v[1] - 1.0), 0.0, 1e-15);
  const InfoVector w({I, 1.0});
  EXPECT_NEAR(std::abs(w[0] - 1 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w[1] + I / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_EQ(code_of([] { InfoVector({0.0, 1e-13}); }), ErrorCode::ZeroVector);
}

TEST(InfoVector, OperatorRoundTrip) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const InfoVector v(random::unit_vector(5, rng));
    const InfoVector back = from_iop(to_iop(v));
    for (std::size_t i = 0; i < 5; ++i) EXPECT_LT(std::abs(back[i] - v[i]), 1e-12);
  }
  EXPECT_EQ(code_of([] { from_iop(max_iop(2)); }), ErrorCode::NotPure);
}

TEST(InfoVector, SuperpositionIsCoherent) {
  const std::vector<std::pair<cplx, InfoVector>> terms{{1.0, InfoVector::basis(2, 0)}, {1.0, InfoVector::basis(2, 1)}};
  const InfoOperator rho = to_iop(superpose(terms));
  EXPECT_LT(frobenius_dist(rho.matrix(), CMatrix{{0.5, 0.5}, {0.5, 0.5}}), 1e-15);
  const std::vector<std::pair<cplx, InfoVector>> cancel{{1.0, InfoVector::basis(2, 0)}, {-1.0, InfoVector::basis(2, 0)}};
  EXPECT_EQ(code_of([&] { superpose(cancel); }), ErrorCode::ZeroVector);
}

TEST(InfoVector, EvolutionCommutesWithOperatorEvolution) {
  Rng rng(2);
  const UnitaryOp u(random::unitary(4, rng));
  const InfoVector v(random::unit_vector(4, rng));
  EXPECT_LT(frobenius_dist(to_iop(evolve(v, u)).matrix(), evolve(to_iop(v), u).matrix()), 1e-13);
  EXPECT_EQ(code_of([&] { evolve(InfoVector::basis(2, 0), u); }), ErrorCode::DimensionMismatch);
}

}  // namespace
}  // namespace iopsim
