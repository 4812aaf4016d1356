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

#include "iopsim/composite.hpp"
#include "iopsim/condensation.hpp"
#include "iopsim/linalg.hpp"
#include "iopsim/measurement.hpp"
#include "iopsim/report.hpp"

// JSON wire formats. An operator is {"dim": n, "entries": [[re, im], ...]}
// with n*n entries in row-major order. Malformed input raises ParseError.

namespace iopsim {

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

/// A bare operator, an array of operators, or {"operators": [...]}.
std::vector<CMatrix> operators_from_json(const Json& j);

Json real_vector_to_json(const std::vector<double>& v);

/// {"dim", "period": [tau1, tau2], "subspaces": [{"label", "projector"}]}
Json structure_to_json(const CondensationStructure& c);
CondensationStructure structure_from_json(const Json& j);

/// {"dim", "outcomes": [{"label", "f", "kraus"}]}
Json measurement_to_json(const MeasurementSystem& ms);
MeasurementSystem measurement_from_json(const Json& j);

/// {"branches": [{"label", "weight", "residual", "rho_s", "rho_t"}]}
Json branches_to_json(const BranchDecomposition& b);

Json probabilities_to_json(const LabelProbabilities& p);

/// Parses a JSON document from text; ParseError on syntax errors.
Json parse_json(const std::string& text);

}  // namespace iopsim
