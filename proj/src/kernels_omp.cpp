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

#include <omp.h>

#include <cstdint>

#include "iopsim/kernels.hpp"

namespace iopsim::kernels::omp {

// Row blocks are independent, so each thread owns whole output rows and the
// per-element summation order matches the serial kernel exactly.
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t n,
            std::size_t k, std::size_t m) {
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    cplx* crow = c.data() + i * m;
    for (std::size_t j = 0; j < m; ++j) crow[j] = cplx{};
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ail = a[i * k + l];
      if (ail == cplx{}) continue;
      const cplx* brow = b.data() + l * m;
      for (std::size_t j = 0; j < m; ++j) {
        crow[j] += ail * brow[j];
      }
    }
  }
}

void kron(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t ar,
          std::size_t ac, std::size_t br, std::size_t bc) {
  const std::size_t cols = ac * bc;
  const auto blocks = static_cast<std::int64_t>(ar * ac);
#pragma omp parallel for schedule(static)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const auto i = static_cast<std::size_t>(blk) / ac;
    const auto j = static_cast<std::size_t>(blk) % ac;
    const cplx aij = a[i * ac + j];
    for (std::size_t p = 0; p < br; ++p) {
      for (std::size_t q = 0; q < bc; ++q) {
        c[(i * br + p) * cols + (j * bc + q)] = aij * b[p * bc + q];
      }
    }
  }
}

void partial_trace(std::span<const cplx> ab, std::span<cplx> out, std::size_t dim_a,
                   std::size_t dim_b, bool trace_b) {
  const std::size_t n = dim_a * dim_b;
  const std::size_t keep = trace_b ? dim_a : dim_b;
  const auto cells = static_cast<std::int64_t>(keep * keep);
#pragma omp parallel for schedule(static)
  for (std::int64_t cell = 0; cell < cells; ++cell) {
    const auto i = static_cast<std::size_t>(cell) / keep;
    const auto j = static_cast<std::size_t>(cell) % keep;
    cplx acc{};
    if (trace_b) {
      for (std::size_t k = 0; k < dim_b; ++k) acc += ab[(i * dim_b + k) * n + (j * dim_b + k)];
    } else {
      for (std::size_t k = 0; k < dim_a; ++k) acc += ab[(k * dim_b + i) * n + (k * dim_b + j)];
    }
    out[i * keep + j] = acc;
  }
}

}  // namespace iopsim::kernels::omp
