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

#include <string>
#include <vector>

#include "json.hpp"

namespace iopsim {

using Json = nlohmann::ordered_json;

/// How a check's residual is compared against its tolerance.
enum class Relation {
  AtMost,   // residual <= tolerance
  Exceeds,  // residual > tolerance (negative controls, strict orderings)
};

struct Check {
  std::string name;
  std::string description;
  double residual;
  double tolerance;
  Relation relation;
  bool passed;
};

/// Outcome of one scenario run: the inputs it was given, named outputs, and a
/// list of numeric checks. Key order is insertion order so the serialized
/// form is byte-stable.
class ScenarioReport {
 public:
  explicit ScenarioReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  Json& inputs() noexcept { return inputs_; }
  Json& outputs() noexcept { return outputs_; }
  const Json& inputs() const noexcept { return inputs_; }
  const Json& outputs() const noexcept { return outputs_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }

  const Check& at_most(std::string name, std::string description, double residual, double tol);
  const Check& exceeds(std::string name, std::string description, double residual, double tol);

  const Check& check(const std::string& name) const;
  bool all_passed() const noexcept;

  /// Appends the `outputs_finite` check (count of non-finite numbers in the
  /// outputs) and serializes.
  Json to_json() const;

 private:
  std::string name_;
  Json inputs_ = Json::object();
  Json outputs_ = Json::object();
  std::vector<Check> checks_;
};

/// Number of non-finite numbers anywhere in `j`.
std::size_t count_non_finite(const Json& j);

}  // namespace iopsim
