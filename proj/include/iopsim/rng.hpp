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

#include <cstdint>
#include <random>

namespace iopsim {

/// Seedable 64-bit generator used for every stochastic path in the library
/// (Monte-Carlo estimation and random test operators).
///
/// Engine: std::mt19937_64. Streams: stream `k` of base seed `s` is seeded
/// with splitmix64(s ^ splitmix64(k + 1)), so parallel workers can each own a
/// stream whose sequence depends only on (s, k) and never on thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits; identical on every platform.
  double uniform();
  /// Standard normal via Box-Muller on uniform(); platform independent,
  /// unlike std::normal_distribution.
  double normal();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace iopsim
