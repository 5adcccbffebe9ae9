// Copyright 2026 The ceqaoa Authors
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

#include "ceqaoa/instance_io.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ceqaoa {
namespace {

constexpr const char* kJson = R"({
  "name": "example4",
  "n": 4,
  "matrix": [
    [0, 10, 15, 20],
    [10, 0, 35, 25],
    [15, 35, 0, 30],
    [20, 25, 30, 0]
  ],
  "known_optimum": 80
})";

constexpr const char* kTriangle = R"(NAME: tri
TYPE: TSP
DIMENSION: 3
EDGE_WEIGHT_TYPE: EUC_2D
NODE_COORD_SECTION
1 0 0
2 3 0
3 3 4
EOF
)";

TEST(Json, ParsesMatrixAndOptimum) {
    const auto inst = parse_instance_text(kJson, "ex.json");
    EXPECT_EQ(inst.name, "example4");
    ASSERT_EQ(inst.n_cities(), 4u);
    EXPECT_DOUBLE_EQ(inst.distances[1][3], 25.0);
    EXPECT_EQ(inst.known_optimum, 80.0);
}

TEST(Json, NegativeEntryReportsLine) {
    const std::string bad = R"({
  "matrix": [
    [0, 1, 2],
    [1, 0, -1],
    [2, 1, 0]
  ]
})";
    try {
        parse_instance_text(bad, "bad.json");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_NE(std::string(e.what()).find("bad.json:4"), std::string::npos);
    }
}

TEST(Json, ShapeAndSyntaxErrors) {
    EXPECT_THROW(parse_instance_text(R"({"matrix": [[0, 1], [1, 0, 2]]})", "x"), ParseError);
    EXPECT_THROW(parse_instance_text(R"({"matrix": [[1, 1], [1, 0]]})", "x"), ParseError);
    EXPECT_THROW(parse_instance_text(R"({"n": 3, "matrix": [[0, 1], [1, 0]]})", "x"), ParseError);
    EXPECT_THROW(parse_instance_text(R"({"matrix": [[0, 1], [1, 0]] )", "x"), ParseError);
    EXPECT_THROW(parse_instance_text("", "x"), ParseError);
}

TEST(Tsplib, Euc2dThreeFourFive) {
    const auto inst = parse_instance_text(kTriangle, "tri.tsp");
    EXPECT_EQ(inst.name, "tri");
    EXPECT_DOUBLE_EQ(inst.distances[0][1], 3.0);
    EXPECT_DOUBLE_EQ(inst.distances[1][2], 4.0);
    EXPECT_DOUBLE_EQ(inst.distances[0][2], 5.0);
    EXPECT_DOUBLE_EQ(inst.distances[2][0], 5.0);
}

TEST(Tsplib, NearestIntegerRoundingAndExactMode) {
    const std::string text = "NAME: d\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
                             "1 0 0\n2 1 1\n3 2.5 0\nEOF\n";
    const auto rounded = parse_instance_text(text, "d");
    EXPECT_DOUBLE_EQ(rounded.distances[0][1], 1.0);  // nint(√2)
    EXPECT_DOUBLE_EQ(rounded.distances[0][2], 3.0);  // nint(2.5) rounds half up
    const auto exact = parse_instance_text(text, "d", ParseOptions{true});
    EXPECT_NEAR(exact.distances[0][1], std::sqrt(2.0), 1e-15);
    EXPECT_DOUBLE_EQ(exact.distances[0][2], 2.5);
}

TEST(Tsplib, ExplicitFullMatrix) {
    const std::string text = "NAME: e\nTYPE: ATSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n"
                             "EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n0 4 9\n2 0 7\n5 6 0\nEOF\n";
    const auto inst = parse_instance_text(text, "e");
    EXPECT_DOUBLE_EQ(inst.distances[0][2], 9.0);
    EXPECT_DOUBLE_EQ(inst.distances[2][0], 5.0);
}

TEST(Tsplib, ErrorsCarryLineNumbers) {
    const std::string neg = "NAME: e\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
                            "EDGE_WEIGHT_SECTION\n0 4 9\n2 0 -1\n5 6 0\nEOF\n";
    try {
        parse_instance_text(neg, "neg.tsp");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 7u);
    }
    const std::string short_matrix = "NAME: e\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n"
                                     "EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n0 4 9\n2 0 1\nEOF\n";
    EXPECT_THROW(parse_instance_text(short_matrix, "s"), ParseError);
    EXPECT_THROW(parse_instance_text("NAME: x\nNODE_COORD_SECTION\n1 0 0\nEOF\n", "x"), ParseError);
}

TEST(File, MissingFileIsRuntimeError) {
    EXPECT_THROW(parse_instance("/nonexistent/instance.json"), std::runtime_error);
}

}  // namespace
}  // namespace ceqaoa
