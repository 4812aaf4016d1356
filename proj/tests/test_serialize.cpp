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

#include <gtest/gtest.h>

#include "iopsim/random.hpp"
#include "iopsim/rng.hpp"
#include "iopsim/serialize.hpp"
#include "test_support.hpp"

namespace iopsim {
namespace {

using testing::code_of;

TEST(Serialize, MatrixRoundTrip) {
  Rng rng(1);
  const CMatrix m = random::ginibre(3, 3, rng);
  EXPECT_EQ(matrix_from_json(parse_json(matrix_to_json(m).dump())), m);
  const CMatrix rect = random::ginibre(2, 5, rng);
  const Json j = matrix_to_json(rect);
  EXPECT_EQ(j.at("rows"), 2);
  EXPECT_EQ(matrix_from_json(j), rect);
}

TEST(Serialize, WireFormat) {
  const Json j = matrix_to_json(CMatrix{{1, cplx(0, -1)}, {cplx(0, 1), 0}});
  EXPECT_EQ(j.dump(), R"({"dim":2,"entries":[[1.0,0.0],[0.0,-1.0],[0.0,1.0],[0.0,0.0]]})");
}

TEST(Serialize, RejectsMalformedOperators) {
  EXPECT_EQ(code_of([] { parse_json("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matrix_from_json(Json::parse(R"({"dim": 2, "entries": [[1,0]]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matrix_from_json(Json::parse(R"({"dim": 1, "entries": [[1]]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matrix_from_json(Json::parse(R"({"dim": 0, "entries": []})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matrix_from_json(Json::parse(R"({"dim": 1, "entries": [["a", 0]]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { operators_from_json(Json::parse(R"({"operators": []})")); }), ErrorCode::ParseError);
}

TEST(Serialize, OperatorDocumentShapes) {
  const Json one = matrix_to_json(CMatrix::identity(2));
  EXPECT_EQ(operators_from_json(one).size(), 1u);
  EXPECT_EQ(operators_from_json(Json::array({one, one})).size(), 2u);
  Json wrapped;
  wrapped["operators"] = Json::array({one, one, one});
  EXPECT_EQ(operators_from_json(wrapped).size(), 3u);
}

TEST(Serialize, StructureAndMeasurementRoundTrip) {
  const auto c = CondensationStructure::from_basis_partition(3, {"x", "y"}, {{0, 2}, {1}}, {0.5, 2.0});
  const auto c2 = structure_from_json(parse_json(structure_to_json(c).dump()));
  EXPECT_EQ(c2.labels(), c.labels());
  EXPECT_EQ(c2.projectors(), c.projectors());
  EXPECT_EQ(c2.period(), c.period());
  Rng rng(2);
  const auto ms = random::definitive_measurement(3, 2, rng);
  const auto ms2 = measurement_from_json(parse_json(measurement_to_json(ms).dump()));
  EXPECT_EQ(ms2.labels(), ms.labels());
  EXPECT_EQ(ms2.kraus(), ms.kraus());
  EXPECT_EQ(ms2.scale_values(), ms.scale_values());
}

}  // namespace
}  // namespace iopsim
