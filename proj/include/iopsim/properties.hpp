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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

// Randomized invariant suites over the operator algebra. Each property runs
// `trials` independent draws; trial t of dimension d uses
// Rng(seed, d * 1'000'003 + t), so results do not depend on thread count.

namespace iopsim::properties {

struct PropertyResult {
  std::string name;
  std::size_t dim;  // 0 when trials mix dimensions
  std::size_t trials;
  double worst;      // largest residual seen over all trials
  double tolerance;
  bool passed;
  std::string failure;  // first exception message, if a trial threw
};

struct TheoremSuiteTolerances {
  double validity = 1e-10;
  double entropy_invariance = 1e-9;
  double contraction_from_max = 1e-9;
  double contraction_from_mixture = 1e-8;
  double probability_normalization = 1e-9;
  double expectation_identity = 1e-9;
  double born_oracle = 1e-10;
  double decompose_remix = 1e-10;
  double vector_round_trip = 1e-10;
  double vector_evolution = 1e-9;
};

/// Every property of the operator algebra at one dimension.
std::vector<PropertyResult> theorem_suite(std::size_t dim, std::size_t trials, std::uint64_t seed,
                                          const TheoremSuiteTolerances& tol = {});

/// Random block-diagonal unitaries (in a randomly rotated basis) applied for
/// `steps` steps to a random i-operator; worst drift of label probabilities.
/// Each trial draws its dimension from {4, 6, 8}, so the result has dim 0.
PropertyResult condensation_invariance(std::size_t trials, std::size_t steps, std::uint64_t seed,
                                       double tolerance = 1e-9);

}  // namespace iopsim::properties
