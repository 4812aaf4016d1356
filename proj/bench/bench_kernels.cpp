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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "iopsim/kernels.hpp"
#include "iopsim/random.hpp"
#include "iopsim/rng.hpp"

namespace {

using iopsim::cplx;
namespace k = iopsim::kernels;

std::vector<cplx> random_entries(std::size_t rows, std::size_t cols, std::uint64_t stream) {
  iopsim::Rng rng(7, stream);
  const auto m = iopsim::random::ginibre(rows, cols, rng);
  return {m.entries().begin(), m.entries().end()};
}

template <auto Kernel>
void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n, n, 1);
  const auto b = random_entries(n, n, 2);
  std::vector<cplx> c(n * n);
  for (auto _ : state) {
    Kernel(a, b, c, n, n, n);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

template <auto Kernel>
void BM_Kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n, n, 3);
  const auto b = random_entries(n, n, 4);
  std::vector<cplx> c(n * n * n * n);
  for (auto _ : state) {
    Kernel(a, b, c, n, n, n, n);
    benchmark::DoNotOptimize(c.data());
  }
}

template <auto Kernel>
void BM_PartialTrace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ab = random_entries(n * n, n * n, 5);
  std::vector<cplx> out(n * n);
  for (auto _ : state) {
    Kernel(ab, out, n, n, true);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_Matmul<k::serial::matmul>)->Name("matmul/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_Matmul<k::omp::matmul>)->Name("matmul/omp")->RangeMultiplier(2)->Range(16, 256)->UseRealTime();
BENCHMARK(BM_Kron<k::serial::kron>)->Name("kron/serial")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_Kron<k::omp::kron>)->Name("kron/omp")->RangeMultiplier(2)->Range(4, 32)->UseRealTime();
BENCHMARK(BM_PartialTrace<k::serial::partial_trace>)->Name("partial_trace/serial")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_PartialTrace<k::omp::partial_trace>)->Name("partial_trace/omp")->RangeMultiplier(2)->Range(4, 32)->UseRealTime();

BENCHMARK_MAIN();
