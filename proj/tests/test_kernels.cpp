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

// The OpenMP kernels must agree with the serial reference.

#include <gtest/gtest.h>

#include <vector>

#include "iopsim/kernels.hpp"
#include "iopsim/random.hpp"
#include "iopsim/rng.hpp"

namespace iopsim {
namespace {

std::vector<cplx> entries(std::size_t r, std::size_t c, std::uint64_t stream) {
  Rng rng(3, stream);
  const CMatrix m = random::ginibre(r, c, rng);
  return {m.entries().begin(), m.entries().end()};
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

TEST(Kernels, MatmulMatchesSerialExactly) {
  for (auto [n, k, m] : {std::tuple{1, 1, 1}, {3, 5, 2}, {33, 17, 40}, {64, 64, 64}}) {
    const auto a = entries(n, k, 1);
    const auto b = entries(k, m, 2);
    std::vector<cplx> c1(n * m), c2(n * m);
    kernels::serial::matmul(a, b, c1, n, k, m);
    kernels::omp::matmul(a, b, c2, n, k, m);
    EXPECT_EQ(c1, c2) << n << "x" << k << "x" << m;
  }
}

TEST(Kernels, KronMatchesSerial) {
  const auto a = entries(3, 2, 4);
  const auto b = entries(4, 5, 5);
  std::vector<cplx> c1(12 * 10), c2(12 * 10);
  kernels::serial::kron(a, b, c1, 3, 2, 4, 5);
  kernels::omp::kron(a, b, c2, 3, 2, 4, 5);
  EXPECT_EQ(c1, c2);
}

TEST(Kernels, PartialTraceMatchesSerial) {
  const auto ab = entries(24, 24, 6);
  for (bool trace_b : {true, false}) {
    const std::size_t out_dim = trace_b ? 4 : 6;
    std::vector<cplx> o1(out_dim * out_dim), o2(out_dim * out_dim);
    kernels::serial::partial_trace(ab, o1, 4, 6, trace_b);
    kernels::omp::partial_trace(ab, o2, 4, 6, trace_b);
    EXPECT_LT(max_diff(o1, o2), 1e-13);
  }
}

TEST(Kernels, LargeProductDispatchAgrees) {
  Rng rng(9);
  const CMatrix a = random::ginibre(48, 48, rng);
  const CMatrix b = random::ginibre(48, 48, rng);
  std::vector<cplx> ref(48 * 48);
  kernels::serial::matmul(a.entries(), b.entries(), ref, 48, 48, 48);
  const CMatrix c = a * b;
  EXPECT_EQ(std::vector<cplx>(c.entries().begin(), c.entries().end()), ref);
}

}  // namespace
}  // namespace iopsim
