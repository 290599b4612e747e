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

#ifndef TABLEAUXB_ZIGZAG_H_
#define TABLEAUXB_ZIGZAG_H_

#include <string>
#include <vector>

#include "tableauxb/signed_permutation.h"
#include "tableauxb/tableau.h"

namespace tableauxb {

struct ZigzagStart {
  enum class Kind { kRow, kColumn };
  Kind kind;
  int label;

  static ZigzagStart from_row(int label) { return {Kind::kRow, label}; }
  static ZigzagStart from_column(int label) { return {Kind::kColumn, label}; }
};

enum class ExitSide { kEast, kSouth };

struct ZigzagTrace {
  ZigzagStart start{ZigzagStart::Kind::kRow, 0};
  // Boxes in visiting order.
  std::vector<Box> boxes;
  // turns[k] is true iff boxes[k] holds a 1 (the path changes direction).
  std::vector<bool> turns;
  ExitSide exit_side = ExitSide::kEast;
  // Label of the border edge the path leaves through.
  int exit_label = 0;
};

// Walks east from the left of a row (or south from the top of a column),
// turning at every 1, until it leaves through the southeast border. Throws
// InvalidArgument if the start does not exist, InternalError if the walk
// leaves through a stair row (impossible in a valid tableau).
ZigzagTrace zigzag_path(const PermutationTableau& tableau, ZigzagStart start);

// "row -5: col8→col6 [turn]" per straight segment, then "exit east row 2".
std::string format_trace(const ZigzagTrace& trace);

// The zigzag bijection from type-B permutation tableaux of length n to
// signed permutations of length n. Requires a valid tableau.
SignedPermutation zeta(const PermutationTableau& tableau);

inline constexpr int kDefaultZetaInverseBound = 8;

// The unique tableau with zeta(T) = sigma, found by a row-by-row search over
// fillings of the forced column set {i : sigma(i) < i}. Throws
// PreconditionError if sigma.n() exceeds max_n.
PermutationTableau zeta_inverse(const SignedPermutation& sigma,
                                int max_n = kDefaultZetaInverseBound);

}  // namespace tableauxb

#endif  // TABLEAUXB_ZIGZAG_H_
