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

// Worked-example tableaux, transcribed row by row (top to bottom, cells
// left to right over columns in decreasing label order).

#ifndef TABLEAUXB_TESTS_EXAMPLES_H_
#define TABLEAUXB_TESTS_EXAMPLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "tableauxb/tableau.h"

namespace tableauxb::testing {

inline PermutationTableau make_tableau(
    int n, std::vector<int> columns,
    const std::vector<std::vector<int>>& cells) {
  ShiftedDiagram d(n, columns);
  std::vector<std::uint64_t> rows;
  for (const auto& row : cells) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k]) bits |= std::uint64_t{1} << k;
    }
    rows.push_back(bits);
  }
  return PermutationTableau(d, rows);
}

// n = 8, columns {3,5,6,8}; image 2,7,-5,6,-4,1,8,-3.
inline PermutationTableau sample_tableau() {
  return make_tableau(8, {3, 5, 6, 8},
                      {{1}, {0, 0}, {1, 1, 1}, {1, 1, 1, 1},
                       {0, 0, 0, 1}, {1, 1, 1, 1}, {0, 1, 1}, {1}});
}

// -DU example input: m = 8, shape (2,2,1).
inline PermutationTableau negdu_input() {
  return make_tableau(8, {1, 2, 3, 6, 8},
                      {{0}, {1, 1}, {0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1, 1},
                       {1, 1}, {0, 1}, {1}});
}

inline PermutationTableau negdu_output() {
  return make_tableau(14, {1, 2, 4, 10, 14},
                      {{0}, {1, 1}, {0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1, 1},
                       {0, 0, 0}, {1, 1}, {0, 0}, {0, 1}, {0, 0}, {0, 0},
                       {1}, {0}, {0}});
}

// Shared input of the -UD, +DU and +UD examples: m = 7, shape (2,2,1).
inline PermutationTableau m7_input() {
  return make_tableau(7, {1, 2, 5, 7},
                      {{0}, {1, 1}, {0, 0, 0}, {0, 1, 1, 1},
                       {1, 1}, {0, 1}, {1}});
}

inline PermutationTableau negud_output() {
  return make_tableau(13, {1, 3, 9, 13},
                      {{0}, {1, 1}, {0, 0, 0}, {0, 1, 1, 1},
                       {0, 0, 0}, {1, 1}, {0, 0}, {0, 1}, {0, 0}, {0, 0},
                       {1}, {0}, {0}});
}

inline PermutationTableau posdu_output() {
  return make_tableau(14, {2, 4, 10, 14},
                      {{0}, {1, 1}, {0, 0, 0}, {0, 1, 1, 1},
                       {0, 0, 0, 0}, {0, 0, 0}, {1, 1}, {0, 0}, {0, 1},
                       {0, 0}, {0, 0}, {1}, {0}, {0}});
}

inline PermutationTableau posud_output() {
  return make_tableau(15, {3, 5, 11, 15},
                      {{0}, {1, 1}, {0, 0, 0}, {0, 1, 1, 1},
                       {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0}, {1, 1}, {0, 0},
                       {0, 1}, {0, 0}, {0, 0}, {1}, {0}, {0}});
}

inline const std::vector<int> kNegDuWindow{-4, -5, 3, 2, 11, 6, 10, 8, 9, -7, 14, 12, 13, 1};
inline const std::vector<int> kNegUdWindow{-4, 2, 1, 10, 5, 9, 7, 8, -6, 13, 11, 12, 3};
inline const std::vector<int> kPosDuWindow{1, -5, 3, 2, 11, 6, 10, 8, 9, -7, 14, 12, 13, 4};
inline const std::vector<int> kPosUdWindow{1, 2, -6, 4, 3, 12, 7, 11, 9, 10, -8, 15, 13, 14, 5};

inline std::string data_path(const std::string& name) {
  return std::string(TABLEAUXB_TEST_DATA_DIR) + "/" + name;
}

}  // namespace tableauxb::testing

#endif  // TABLEAUXB_TESTS_EXAMPLES_H_
