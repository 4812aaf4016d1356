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

#include "iopsim/serialize.hpp"

#include <cmath>

#include "iopsim/error.hpp"

namespace iopsim {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    parse_fail(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json j;
  if (m.is_square()) {
    j["dim"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  Json entries = Json::array();
  for (const cplx& z : m.entries()) entries.push_back(Json::array({z.real(), z.imag()}));
  j["entries"] = std::move(entries);
  return j;
}

CMatrix matrix_from_json(const Json& j) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (j.is_object() && j.contains("dim")) {
    rows = cols = positive_int(j.at("dim"), "dim");
  } else {
    rows = positive_int(field(j, "rows"), "rows");
    cols = positive_int(field(j, "cols"), "cols");
  }
  if (rows > kMaxDim || cols > kMaxDim) parse_fail("dimension exceeds " + std::to_string(kMaxDim));
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    parse_fail("entries must be an array of " + std::to_string(rows * cols) + " [re, im] pairs");
  }
  std::vector<cplx> data;
  data.reserve(rows * cols);
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 2) parse_fail("each entry must be [re, im]");
    const double re = number(e[0], "entry real part");
    const double im = number(e[1], "entry imaginary part");
    if (!std::isfinite(re) || !std::isfinite(im)) parse_fail("entries must be finite");
    data.emplace_back(re, im);
  }
  return CMatrix(rows, cols, std::move(data));
}

std::vector<CMatrix> operators_from_json(const Json& j) {
  std::vector<CMatrix> out;
  if (j.is_array()) {
    for (const Json& item : j) out.push_back(matrix_from_json(item));
  } else if (j.is_object() && j.contains("operators")) {
    const Json& ops = j.at("operators");
    if (!ops.is_array()) parse_fail("'operators' must be an array");
    for (const Json& item : ops) out.push_back(matrix_from_json(item));
  } else {
    out.push_back(matrix_from_json(j));
  }
  if (out.empty()) parse_fail("no operators in document");
  return out;
}

Json real_vector_to_json(const std::vector<double>& v) {
  Json j = Json::array();
  for (double x : v) j.push_back(x);
  return j;
}

Json structure_to_json(const CondensationStructure& c) {
  Json j;
  j["dim"] = c.dim();
  j["period"] = Json::array({c.period().first, c.period().second});
  Json subspaces = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Json s;
    s["label"] = c.labels()[i];
    s["projector"] = matrix_to_json(c.projectors()[i]);
    subspaces.push_back(std::move(s));
  }
  j["subspaces"] = std::move(subspaces);
  return j;
}

CondensationStructure structure_from_json(const Json& j) {
  const std::size_t dim = positive_int(field(j, "dim"), "dim");
  std::pair<double, double> period{0.0, 1.0};
  if (j.contains("period")) {
    const Json& p = j.at("period");
    if (!p.is_array() || p.size() != 2) parse_fail("period must be [tau1, tau2]");
    period = {number(p[0], "tau1"), number(p[1], "tau2")};
  }
  const Json& subspaces = field(j, "subspaces");
  if (!subspaces.is_array()) parse_fail("subspaces must be an array");
  std::vector<Label> labels;
  std::vector<CMatrix> projectors;
  for (const Json& s : subspaces) {
    const Json& label = field(s, "label");
    if (!label.is_string()) parse_fail("label must be a string");
    labels.push_back(label.get<std::string>());
    projectors.push_back(matrix_from_json(field(s, "projector")));
    if (projectors.back().rows() != dim) parse_fail("projector dimension differs from dim");
  }
  return CondensationStructure(std::move(labels), std::move(projectors), period);
}

Json measurement_to_json(const MeasurementSystem& ms) {
  Json j;
  j["dim"] = ms.dim();
  Json outcomes = Json::array();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Json o;
    o["label"] = ms.labels()[i];
    o["f"] = ms.scale_values()[i];
    o["kraus"] = matrix_to_json(ms.kraus()[i]);
    outcomes.push_back(std::move(o));
  }
  j["outcomes"] = std::move(outcomes);
  return j;
}

MeasurementSystem measurement_from_json(const Json& j) {
  const std::size_t dim = positive_int(field(j, "dim"), "dim");
  const Json& outcomes = field(j, "outcomes");
  if (!outcomes.is_array()) parse_fail("outcomes must be an array");
  std::vector<Label> labels;
  std::vector<CMatrix> kraus;
  std::vector<double> f;
  for (const Json& o : outcomes) {
    const Json& label = field(o, "label");
    if (!label.is_string()) parse_fail("label must be a string");
    labels.push_back(label.get<std::string>());
    f.push_back(number(field(o, "f"), "f"));
    kraus.push_back(matrix_from_json(field(o, "kraus")));
    if (kraus.back().rows() != dim) parse_fail("Kraus dimension differs from dim");
  }
  return MeasurementSystem(std::move(labels), std::move(kraus), std::move(f));
}

Json branches_to_json(const BranchDecomposition& b) {
  Json branches = Json::array();
  for (const Branch& br : b.branches) {
    Json j;
    j["label"] = br.label;
    j["weight"] = br.weight;
    j["residual"] = br.residual;
    j["rho_s"] = matrix_to_json(br.rho_s.matrix());
    j["rho_t"] = matrix_to_json(br.rho_t.matrix());
    branches.push_back(std::move(j));
  }
  Json out;
  out["branches"] = std::move(branches);
  return out;
}

Json probabilities_to_json(const LabelProbabilities& p) {
  Json out = Json::array();
  for (const auto& [label, value] : p) {
    Json j;
    j["label"] = label;
    j["probability"] = value;
    out.push_back(std::move(j));
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
}

}  // namespace iopsim
