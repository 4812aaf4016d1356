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

#include "iopsim/report.hpp"

#include <algorithm>
#include <cmath>

#include "iopsim/error.hpp"

namespace iopsim {

const Check& ScenarioReport::at_most(std::string name, std::string description, double residual,
                                     double tol) {
  const bool ok = std::isfinite(residual) && residual <= tol;
  checks_.push_back({std::move(name), std::move(description), residual, tol, Relation::AtMost, ok});
  return checks_.back();
}

const Check& ScenarioReport::exceeds(std::string name, std::string description, double residual,
                                     double tol) {
  const bool ok = std::isfinite(residual) && residual > tol;
  checks_.push_back({std::move(name), std::move(description), residual, tol, Relation::Exceeds, ok});
  return checks_.back();
}

const Check& ScenarioReport::check(const std::string& name) const {
  const auto it = std::find_if(checks_.begin(), checks_.end(),
                               [&](const Check& c) { return c.name == name; });
  if (it == checks_.end()) throw Error(ErrorCode::UnknownLabel, "no check '" + name + "'");
  return *it;
}

bool ScenarioReport::all_passed() const noexcept {
  return count_non_finite(outputs_) == 0 &&
         std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t count_non_finite(const Json& j) {
  if (j.is_number_float()) return std::isfinite(j.get<double>()) ? 0 : 1;
  std::size_t n = 0;
  if (j.is_structured()) {
    for (const auto& item : j) n += count_non_finite(item);
  }
  return n;
}

namespace {

Json check_to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["description"] = c.description;
  j["relation"] = c.relation == Relation::AtMost ? "residual <= tolerance" : "residual > tolerance";
  j["residual"] = std::isfinite(c.residual) ? Json(c.residual) : Json(nullptr);
  j["tolerance"] = c.tolerance;
  j["passed"] = c.passed;
  return j;
}

}  // namespace

Json ScenarioReport::to_json() const {
  Json j;
  j["scenario"] = name_;
  j["inputs"] = inputs_;
  j["outputs"] = outputs_;
  Json checks = Json::array();
  for (const Check& c : checks_) checks.push_back(check_to_json(c));
  const auto bad = static_cast<double>(count_non_finite(outputs_));
  checks.push_back(check_to_json({"outputs_finite", "every numeric output is finite", bad, 0.0,
                                  Relation::AtMost, bad == 0.0}));
  j["checks"] = std::move(checks);
  j["all_passed"] = all_passed();
  return j;
}

}  // namespace iopsim
