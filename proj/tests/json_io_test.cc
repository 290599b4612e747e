// Copyright 2026 The tableauxb Authors.
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

#include "tableauxb/json_io.h"

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "examples.h"
#include "tableauxb/enumerate.h"
#include "tableauxb/errors.h"

namespace tableauxb {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(TableauJson, LoadsExampleFiles) {
  EXPECT_EQ(tableau_from_json(slurp(testing::data_path("sample_tableau.json"))), testing::sample_tableau());
  EXPECT_EQ(tableau_from_json(slurp(testing::data_path("negdu_input.json"))),
            testing::negdu_input());
  EXPECT_EQ(tableau_from_json(slurp(testing::data_path("m7_input.json"))),
            testing::m7_input());
}

TEST(TableauJson, CompactSchema) {
  EXPECT_EQ(tableau_to_json(PermutationTableau(ShiftedDiagram(2, std::vector<int>{1}))),
            R"({"n":2,"columns":[1],"rows":[{"label":-1,"cells":[0]},{"label":2,"cells":[]}]})");
}

TEST(TableauJson, RoundTripsEveryTableauUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    for (const PermutationTableau& t : all_tableaux(n)) {
      ASSERT_EQ(tableau_from_json(tableau_to_json(t)), t);
    }
  }
}

TEST(TableauJson, RejectsGeometryMismatches) {
  const char* bad[] = {
      "[]",
      "{",
      R"({"n":2,"columns":[1]})",
      R"({"n":2,"columns":[1],"rows":[{"label":-1,"cells":[1]}]})",
      R"({"n":2,"columns":[1],"rows":[{"label":2,"cells":[]},{"label":-1,"cells":[1]}]})",
      R"({"n":2,"columns":[1],"rows":[{"label":-1,"cells":[1,0]},{"label":2,"cells":[]}]})",
      R"({"n":2,"columns":[1],"rows":[{"label":-1,"cells":[2]},{"label":2,"cells":[]}]})",
      R"({"n":2,"columns":[2,1],"rows":[]})",
      R"({"n":2,"columns":[3],"rows":[]})",
  };
  for (const char* text : bad) EXPECT_THROW(tableau_from_json(text), InvalidArgument) << text;
}

TEST(PermutationJson, RoundTripAndForms) {
  const SignedPermutation s(testing::kNegDuWindow);
  EXPECT_EQ(permutation_from_json(permutation_to_json(s)), s);
  EXPECT_EQ(permutation_to_json(SignedPermutation({-4, -5, 3, 2, 1})),
            R"({"n":5,"window":[-4,-5,3,2,1]})");
  EXPECT_EQ(parse_permutation(" {\"window\":[2,-1]}"), SignedPermutation({2, -1}));
  EXPECT_EQ(parse_permutation("2,-1\n"), SignedPermutation({2, -1}));
  EXPECT_THROW(permutation_from_json(R"({"n":3,"window":[2,-1]})"), InvalidArgument);
  EXPECT_THROW(parse_permutation("{\"window\":[1,1]}"), InvalidArgument);
}

}  // namespace
}  // namespace tableauxb
