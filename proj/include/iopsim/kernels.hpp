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

#include "iopsim/linalg.hpp"

// Raw dense kernels behind CMatrix. `serial` is the reference implementation
// the tests compare `omp` against; it is never removed or "optimized".
// All buffers are row-major; output buffers must not alias inputs.

namespace iopsim::kernels {

/// Work (rows*inner*cols) above which CMatrix dispatches to the OpenMP path.
inline constexpr std::size_t kParallelWorkThreshold = 32 * 32 * 32;

namespace serial {

// c[n x m] = a[n x k] * b[k x m]
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t n,
            std::size_t k, std::size_t m);

// c[(ar*br) x (ac*bc)] = a (x) b
void kron(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t ar,
          std::size_t ac, std::size_t br, std::size_t bc);

// out = tr_B(ab) when trace_b, else tr_A(ab).
void partial_trace(std::span<const cplx> ab, std::span<cplx> out, std::size_t dim_a,
                   std::size_t dim_b, bool trace_b);

}  // namespace serial

namespace omp {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t n,
            std::size_t k, std::size_t m);

void kron(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c, std::size_t ar,
          std::size_t ac, std::size_t br, std::size_t bc);

void partial_trace(std::span<const cplx> ab, std::span<cplx> out, std::size_t dim_a,
                   std::size_t dim_b, bool trace_b);

}  // namespace omp

}  // namespace iopsim::kernels
