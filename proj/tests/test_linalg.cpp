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

#include "iopsim/error.hpp"
#include "iopsim/linalg.hpp"
#include "iopsim/random.hpp"
#include "iopsim/rng.hpp"
#include "test_support.hpp"

namespace iopsim {
namespace {

const cplx I{0.0, 1.0};

using testing::code_of;

TEST(CMatrix, RejectsBadShapesAndNonFinite) {
  EXPECT_EQ(code_of([] { CMatrix(0, 2); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { CMatrix(kMaxDim + 1, 1); }), ErrorCode::DimensionTooLarge);
  EXPECT_EQ(code_of([] { CMatrix(1, 1, {cplx(NAN, 0)}); }), ErrorCode::NonFinite);
  EXPECT_EQ(code_of([] { CMatrix(2, 2, {1, 2, 3}); }), ErrorCode::DimensionMismatch);
}

TEST(CMatrix, ArithmeticAndAdjoint) {
  const CMatrix a{{1, I}, {2, 3}};
  const CMatrix b{{0, 1}, {1, 0}};
  const CMatrix ab = a * b;
  EXPECT_EQ(ab, (CMatrix{{I, 1}, {3, 2}}));
  EXPECT_EQ(a.adjoint(), (CMatrix{{1, 2}, {-I, 3}}));
  EXPECT_EQ(a.trace(), cplx(4, 0));
  EXPECT_DOUBLE_EQ(b.frobenius_norm(), std::sqrt(2.0));
  EXPECT_EQ(code_of([&] { (void)(a * CMatrix(3, 3)); }), ErrorCode::DimensionMismatch);
}

TEST(Eigen, PauliX) {
  const auto eig = herm_eig(CMatrix{{0, 1}, {1, 0}});
  ASSERT_EQ(eig.eigenvalues.size(), 2u);
  EXPECT_NEAR(eig.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues[1], 1.0, 1e-14);
  const auto v = eig.eigenvectors.column(1);
  EXPECT_NEAR(std::abs(v[0]), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(std::abs(v[1]), 1 / std::sqrt(2.0), 1e-14);
}

TEST(Eigen, PauliYHasComplexEigenvectors) {
  const CMatrix y{{0, -I}, {I, 0}};
  const auto eig = herm_eig(y);
  EXPECT_NEAR(eig.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues[1], 1.0, 1e-14);
  EXPECT_LT(frobenius_dist(reconstruct(eig), y), 1e-14);
}

TEST(Eigen, DegenerateAndDiagonalInputs) {
  const auto eig = herm_eig(CMatrix::diagonal({3.0, 1.0, 1.0, 2.0}));
  EXPECT_EQ(eig.eigenvalues, (std::vector<double>{1.0, 1.0, 2.0, 3.0}));
  const auto zero = herm_eig(CMatrix(3, 3));
  for (double l : zero.eigenvalues) EXPECT_EQ(l, 0.0);
}

TEST(Eigen, TridiagonalOracle) {
  // Eigenvalues of the n x n path-graph adjacency: 2 cos(k pi / (n + 1)).
  const std::size_t n = 7;
  CMatrix a(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1.0;
  const auto eig = herm_eig(a);
  for (std::size_t k = 1; k <= n; ++k) {
    const double expected = 2.0 * std::cos(static_cast<double>(n + 1 - k) * std::numbers::pi / (n + 1));
    EXPECT_NEAR(eig.eigenvalues[k - 1], expected, 1e-13);
  }
}

TEST(Eigen, RandomReconstructionAndOrthonormality) {
  Rng rng(11);
  for (std::size_t n : {2, 5, 16, 40}) {
    const CMatrix h = random::hermitian(n, rng);
    const auto eig = herm_eig(h);
    EXPECT_LT(frobenius_dist(reconstruct(eig), h), 1e-11 * h.frobenius_norm()) << n;
    const CMatrix vtv = eig.eigenvectors.adjoint() * eig.eigenvectors;
    EXPECT_LT(frobenius_dist(vtv, CMatrix::identity(n)), 1e-12) << n;
    for (std::size_t i = 1; i < n; ++i) EXPECT_LE(eig.eigenvalues[i - 1], eig.eigenvalues[i]);
  }
}

TEST(Eigen, RejectsNonHermitian) {
  EXPECT_EQ(code_of([] { herm_eig(CMatrix{{0, 1}, {0, 0}}); }), ErrorCode::NotHermitian);
  EXPECT_EQ(code_of([] { herm_eig(CMatrix(2, 3)); }), ErrorCode::DimensionMismatch);
}

TEST(MatExp, DiagonalPiGivesSignFlip) {
  const CMatrix u = mat_exp_herm_generator(CMatrix::diagonal({std::numbers::pi, 0.0}), 1.0);
  EXPECT_LT(frobenius_dist(u, CMatrix::diagonal({-1.0, 1.0})), 1e-14);
}

TEST(MatExp, PauliXRotationAndHbarScaling) {
  const CMatrix x{{0, 1}, {1, 0}};
  const double t = 0.37;
  const CMatrix expected{{std::cos(t), -I * std::sin(t)}, {-I * std::sin(t), std::cos(t)}};
  EXPECT_LT(frobenius_dist(mat_exp_herm_generator(x, t), expected), 1e-14);
  EXPECT_LT(frobenius_dist(mat_exp_herm_generator(x, 2 * t, 2.0), expected), 1e-14);
  EXPECT_EQ(code_of([&] { mat_exp_herm_generator(x, t, 0.0); }), ErrorCode::BadParameter);
}

TEST(Kron, SmallExample) {
  const CMatrix a{{1, 2}, {3, 4}};
  const CMatrix b{{0, 1}, {1, 0}};
  const CMatrix expected{{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}};
  EXPECT_EQ(kron(a, b), expected);
}

TEST(PartialTrace, RecoversFactors) {
  const CMatrix a{{0.25, 0.1}, {0.1, 0.75}};
  const CMatrix b = CMatrix::diagonal({0.5, 0.3, 0.2});
  const CMatrix ab = kron(a, b);
  EXPECT_LT(frobenius_dist(partial_trace(ab, 2, 3, Subsystem::B), a), 1e-15);
  EXPECT_LT(frobenius_dist(partial_trace(ab, 2, 3, Subsystem::A), b), 1e-15);
  EXPECT_EQ(code_of([&] { partial_trace(ab, 2, 2, Subsystem::A); }), ErrorCode::DimensionMismatch);
}

TEST(PartialTrace, BellStateGivesMaximallyMixed) {
  // |00> + |11>, normalized.
  CMatrix bell(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  EXPECT_LT(frobenius_dist(partial_trace(bell, 2, 2, Subsystem::A), CMatrix::diagonal({0.5, 0.5})), 1e-15);
}

}  // namespace
}  // namespace iopsim
