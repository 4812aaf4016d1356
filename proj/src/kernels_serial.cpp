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

#include "iopsim/kernels.hpp"

#include <algorithm>

namespace iopsim::kernels::serial {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t n,
            std::size_t k, std::size_t m) {
  std::fill(c.begin(), c.end(), cplx{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ail = a[i * k + l];
      if (ail == cplx{}) continue;
      for (std::size_t j = 0; j < m; ++j) {
        c[i * m + j] += ail * b[l * m + j];
      }
    }
  }
}

void kron(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t ar,
          std::size_t ac, std::size_t br, std::size_t bc) {
  const std::size_t cols = ac * bc;
  for (std::size_t i = 0; i < ar; ++i) {
    for (std::size_t j = 0; j < ac; ++j) {
      const cplx aij = a[i * ac + j];
      for (std::size_t p = 0; p < br; ++p) {
        for (std::size_t q = 0; q < bc; ++q) {
          c[(i * br + p) * cols + (j * bc + q)] = aij * b[p * bc + q];
        }
      }
    }
  }
}

void partial_trace(std::span<const cplx> ab, std::span<cplx> out, std::size_t dim_a,
                   std::size_t dim_b, bool trace_b) {
  const std::size_t n = dim_a * dim_b;
  if (trace_b) {
    for (std::size_t i = 0; i < dim_a; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        cplx acc{};
        for (std::size_t k = 0; k < dim_b; ++k) {
          acc += ab[(i * dim_b + k) * n + (j * dim_b + k)];
        }
        out[i * dim_a + j] = acc;
      }
    }
  } else {
    for (std::size_t p = 0; p < dim_b; ++p) {
      for (std::size_t q = 0; q < dim_b; ++q) {
        cplx acc{};
        for (std::size_t k = 0; k < dim_a; ++k) {
          acc += ab[(k * dim_b + p) * n + (k * dim_b + q)];
        }
        out[p * dim_b + q] = acc;
      }
    }
  }
}

}  // namespace iopsim::kernels::serial
