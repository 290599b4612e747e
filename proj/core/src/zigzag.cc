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

#include "tableauxb/zigzag.h"

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>

#include "tableauxb/errors.h"

namespace tableauxb {
namespace {

std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

struct Exit {
  ExitSide side;
  int label;
};

// Walks from (row, col) in the given direction over `rows`, which only needs
// to be filled from `row` downward: paths never move north or west.
template <typename OnBox>
Exit walk(const ShiftedDiagram& d, std::span<const std::uint64_t> rows,
          int row, int col, bool east, OnBox&& on_box) {
  const std::size_t limit = d.box_count() + 1;
  for (std::size_t steps = 0; steps <= limit; ++steps) {
    if (east) {
      if (col + 1 >= d.row_length(row)) {
        const int label = d.row_label(row);
        if (label < 0) {
          throw InternalError("zigzag path left through the east end of row " +
                              std::to_string(label));
        }
        return {ExitSide::kEast, label};
      }
      ++col;
    } else {
      if (row + 1 >= d.column_bottom(col)) {
        return {ExitSide::kSouth, d.column_label(col)};
      }
      ++row;
    }
    const bool one = (rows[row] >> col) & 1u;
    on_box(row, col, one);
    if (one) east = !east;
  }
  throw InternalError("zigzag path did not terminate");
}

struct Start {
  int row;
  int col;
  bool east;
};

Start resolve(const ShiftedDiagram& d, ZigzagStart start) {
  if (start.kind == ZigzagStart::Kind::kRow) {
    const int r = d.row_index(start.label);
    if (r < 0) {
      throw InvalidArgument("zigzag: no row labeled " +
                            std::to_string(start.label));
    }
    return {r, -1, true};
  }
  const int k = d.column_index(start.label);
  if (k < 0) {
    throw InvalidArgument("zigzag: no column labeled " +
                          std::to_string(start.label));
  }
  return {d.column_top(k) - 1, k, false};
}

// sigma(i) for a tableau whose rows from the relevant start downward are
// filled.
int image_of(const ShiftedDiagram& d, std::span<const std::uint64_t> rows,
             int i) {
  const auto ignore = [](int, int, bool) {};
  if (!d.is_column(i)) {
    return walk(d, rows, d.row_index(i), -1, true, ignore).label;
  }
  const int k = d.column_index(i);
  const int stair = d.column_top(k);
  if ((rows[stair] >> k) & 1u) {
    return -walk(d, rows, stair, -1, true, ignore).label;
  }
  return walk(d, rows, stair - 1, k, false, ignore).label;
}

class InverseSearch {
 public:
  InverseSearch(const SignedPermutation& sigma, const ShiftedDiagram& d)
      : sigma_(sigma), d_(d), rows_(d.row_count(), 0) {}

  void run() { place(d_.row_count() - 1, 0, 0); }

  int solutions() const { return solutions_; }
  const std::vector<std::uint64_t>& solution() const { return solution_; }

 private:
  // `bad`: columns where some lower row has a 0 with a 1 to its left, so a
  // 1 placed above would break the LE-condition.
  void place(int r, std::uint64_t bad, std::uint64_t has_one) {
    if (solutions_ > 1) return;
    if (r < 0) {
      if (++solutions_ == 1) solution_ = rows_;
      return;
    }
    const int label = d_.row_label(r);
    const int len = d_.row_length(r);
    const int i = label < 0 ? -label : label;
    const int target = sigma_(i);

    std::uint64_t forced_on = 0;
    bool zero_only = false;
    if (label < 0) {
      if (target > 0) {
        zero_only = true;  // diagonal 0 forces an empty stair row
      } else {
        forced_on = std::uint64_t{1} << r;  // diagonal is column index r
      }
    } else if (target == i) {
      zero_only = true;
    }

    const std::uint64_t limit = zero_only ? 1 : (std::uint64_t{1} << len);
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      if ((bits & forced_on) != forced_on) continue;
      if ((bits & bad) != 0) continue;
      rows_[r] = bits;
      const std::uint64_t now_has_one = has_one | bits;
      if (label < 0 && ((now_has_one >> r) & 1u) == 0) continue;
      if (image_of(d_, rows_, i) != target) continue;
      std::uint64_t next_bad = bad;
      if (bits != 0) {
        const int first = std::countr_zero(bits);
        next_bad |= ~bits & low_bits(len) & ~low_bits(first + 1);
      }
      place(r - 1, next_bad, now_has_one);
      if (solutions_ > 1) return;
    }
    rows_[r] = 0;
  }

  const SignedPermutation& sigma_;
  const ShiftedDiagram& d_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> solution_;
  int solutions_ = 0;
};

}  // namespace

ZigzagTrace zigzag_path(const PermutationTableau& t, ZigzagStart start) {
  const ShiftedDiagram& d = t.diagram();
  const Start s = resolve(d, start);
  ZigzagTrace trace;
  trace.start = start;
  const Exit exit = walk(d, t.rows(), s.row, s.col, s.east,
                         [&](int r, int k, bool one) {
                           trace.boxes.push_back({d.row_label(r), d.column_label(k)});
                           trace.turns.push_back(one);
                         });
  trace.exit_side = exit.side;
  trace.exit_label = exit.label;
  return trace;
}

std::string format_trace(const ZigzagTrace& trace) {
  std::ostringstream out;
  bool east = trace.start.kind == ZigzagStart::Kind::kRow;
  std::size_t begin = 0;
  while (begin < trace.boxes.size()) {
    std::size_t end = begin;
    while (!trace.turns[end] && end + 1 < trace.boxes.size()) ++end;
    const Box& a = trace.boxes[begin];
    const Box& b = trace.boxes[end];
    if (east) {
      out << "row " << a.row << ": col" << a.column << "→col" << b.column;
    } else {
      out << "col " << a.column << ": row" << a.row << "→row" << b.row;
    }
    if (trace.turns[end]) out << " [turn]";
    out << '\n';
    if (trace.turns[end]) east = !east;
    begin = end + 1;
  }
  out << "exit "
      << (trace.exit_side == ExitSide::kEast ? "east row " : "south col ")
      << trace.exit_label << '\n';
  return out.str();
}

SignedPermutation zeta(const PermutationTableau& t) {
  const auto violations = validate(t);
  if (!violations.empty()) {
    throw PreconditionError("zeta: invalid tableau: " +
                            to_string(violations.front()));
  }
  const ShiftedDiagram& d = t.diagram();
  std::vector<int> window(d.n());
  for (int i = 1; i <= d.n(); ++i) window[i - 1] = image_of(d, t.rows(), i);
  try {
    return SignedPermutation(std::move(window));
  } catch (const InvalidArgument& e) {
    throw InternalError(std::string("zeta produced a non-permutation: ") +
                        e.what());
  }
}

PermutationTableau zeta_inverse(const SignedPermutation& sigma, int max_n) {
  if (sigma.n() > max_n) {
    throw PreconditionError("zeta_inverse: n = " + std::to_string(sigma.n()) +
                            " exceeds the search bound " +
                            std::to_string(max_n));
  }
  if (sigma.n() > kMaxTableauLength) {
    throw PreconditionError("zeta_inverse: n exceeds the supported length");
  }
  std::vector<int> columns;
  for (int i = 1; i <= sigma.n(); ++i) {
    if (sigma(i) < i) columns.push_back(i);
  }
  const ShiftedDiagram d(sigma.n(), columns);
  InverseSearch search(sigma, d);
  search.run();
  if (search.solutions() != 1) {
    throw InternalError("zeta_inverse: found " +
                        std::to_string(search.solutions()) +
                        " preimages of " + format_window(sigma));
  }
  PermutationTableau result(d, search.solution());
  if (!is_valid(result) || zeta(result) != sigma) {
    throw InternalError("zeta_inverse: search produced a wrong preimage");
  }
  return result;
}

}  // namespace tableauxb
