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

#include "tableauxb/tableau.h"

#include <bit>
#include <string>

#include "tableauxb/errors.h"

namespace tableauxb {
namespace {

std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

void check_length(int n) {
  if (n < 1 || n > kMaxTableauLength) {
    throw InvalidArgument("diagram length " + std::to_string(n) +
                          " outside [1, " + std::to_string(kMaxTableauLength) +
                          "]");
  }
}

std::uint64_t mask_from_labels(int n, std::span<const int> columns) {
  check_length(n);
  std::uint64_t mask = 0;
  for (int j : columns) {
    if (j < 1 || j > n) {
      throw InvalidArgument("column label " + std::to_string(j) +
                            " outside [1, " + std::to_string(n) + "]");
    }
    mask |= std::uint64_t{1} << (j - 1);
  }
  return mask;
}

}  // namespace

ShiftedDiagram::ShiftedDiagram(int n, std::span<const int> columns)
    : ShiftedDiagram(n, mask_from_labels(n, columns), 0) {}

ShiftedDiagram ShiftedDiagram::from_mask(int n, std::uint64_t column_mask) {
  check_length(n);
  if ((column_mask & ~low_bits(n)) != 0) {
    throw InvalidArgument("column mask has labels beyond n = " +
                          std::to_string(n));
  }
  return ShiftedDiagram(n, column_mask, 0);
}

ShiftedDiagram::ShiftedDiagram(int n, std::uint64_t column_mask, int)
    : n_(n), column_mask_(column_mask) {
  for (int j = n; j >= 1; --j) {
    if (is_column(j)) column_labels_.push_back(j);
  }
  const int c = static_cast<int>(column_labels_.size());
  row_labels_.reserve(n);
  row_lengths_.reserve(n);
  // Stair rows share the column order; row -j spans columns labeled >= j.
  for (int k = 0; k < c; ++k) {
    row_labels_.push_back(-column_labels_[k]);
    row_lengths_.push_back(k + 1);
  }
  // Positive rows in label order; row i spans columns labeled > i.
  int larger_columns = c;
  for (int i = 1; i <= n; ++i) {
    if (is_column(i)) {
      --larger_columns;
    } else {
      row_labels_.push_back(i);
      row_lengths_.push_back(larger_columns);
    }
  }
  column_top_.resize(c);
  column_bottom_.resize(c);
  for (int k = 0; k < c; ++k) {
    column_top_[k] = k;
    const int j = column_labels_[k];
    // Positive rows below j: labels < j that are rows.
    const int rows_below =
        (j - 1) - std::popcount(column_mask_ & low_bits(j - 1));
    column_bottom_[k] = c + rows_below;
  }
}

bool ShiftedDiagram::is_column(int label) const {
  return label >= 1 && label <= n_ && ((column_mask_ >> (label - 1)) & 1u);
}

std::vector<int> ShiftedDiagram::columns() const {
  return std::vector<int>(column_labels_.rbegin(), column_labels_.rend());
}

int ShiftedDiagram::row_index(int label) const {
  if (label > 0) {
    if (label > n_ || is_column(label)) return -1;
    // Preceding positive rows plus all stair rows.
    return column_count() + (label - 1) -
           std::popcount(column_mask_ & low_bits(label - 1));
  }
  if (label < 0) return column_index(-label);
  return -1;
}

int ShiftedDiagram::column_index(int label) const {
  if (!is_column(label)) return -1;
  // Columns with larger labels sit to the left.
  return std::popcount(column_mask_ & ~low_bits(label));
}

bool ShiftedDiagram::has_box(Box box) const {
  const int r = row_index(box.row);
  const int k = column_index(box.column);
  return r >= 0 && k >= 0 && k < row_lengths_[r];
}

std::size_t ShiftedDiagram::box_count() const {
  std::size_t total = 0;
  for (int len : row_lengths_) total += static_cast<std::size_t>(len);
  return total;
}

std::vector<int> ShiftedDiagram::positive_shape() const {
  return std::vector<int>(row_lengths_.begin() + column_count(),
                          row_lengths_.end());
}

PermutationTableau::PermutationTableau(ShiftedDiagram diagram,
                                       std::vector<std::uint64_t> rows)
    : diagram_(std::move(diagram)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != diagram_.row_count()) {
    throw InvalidArgument("tableau: expected " +
                          std::to_string(diagram_.row_count()) +
                          " rows, got " + std::to_string(rows_.size()));
  }
}

PermutationTableau::PermutationTableau(ShiftedDiagram diagram)
    : diagram_(std::move(diagram)), rows_(diagram_.row_count(), 0) {}

bool PermutationTableau::at(Box box) const {
  if (!diagram_.has_box(box)) {
    throw InvalidArgument("tableau: no box at row " + std::to_string(box.row) +
                          ", column " + std::to_string(box.column));
  }
  return cell(diagram_.row_index(box.row), diagram_.column_index(box.column));
}

PermutationTableau PermutationTableau::with_cell(Box box, bool value) const {
  if (!diagram_.has_box(box)) {
    throw InvalidArgument("tableau: no box at row " + std::to_string(box.row) +
                          ", column " + std::to_string(box.column));
  }
  PermutationTableau copy = *this;
  const int r = diagram_.row_index(box.row);
  const std::uint64_t bit = std::uint64_t{1} << diagram_.column_index(box.column);
  copy.rows_[r] = value ? (copy.rows_[r] | bit) : (copy.rows_[r] & ~bit);
  return copy;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kMissingOne: return "MissingOne";
    case Violation::Kind::kLeViolation: return "LEViolation";
    case Violation::Kind::kDiagonalZeroNonempty: return "DiagonalZeroNonempty";
    case Violation::Kind::kBoxOutOfShape: return "BoxOutOfShape";
  }
  return "?";
}

std::string to_string(const Violation& v) {
  return to_string(v.kind) + " at (row " + std::to_string(v.witness.row) +
         ", col " + std::to_string(v.witness.column) + ")";
}

std::vector<Violation> validate(const PermutationTableau& t) {
  const ShiftedDiagram& d = t.diagram();
  std::vector<Violation> out;
  const auto label_of_column = [&](int k) {
    return k < d.column_count() ? d.column_label(k) : 0;
  };

  for (int r = 0; r < d.row_count(); ++r) {
    const std::uint64_t stray = t.row_bits(r) & ~low_bits(d.row_length(r));
    if (stray != 0) {
      out.push_back({Violation::Kind::kBoxOutOfShape,
                     {d.row_label(r), label_of_column(std::countr_zero(stray))}});
    }
  }

  for (int k = 0; k < d.column_count(); ++k) {
    bool any = false;
    for (int r = d.column_top(k); r < d.column_bottom(k); ++r) {
      any = any || t.cell(r, k);
    }
    if (!any) {
      out.push_back({Violation::Kind::kMissingOne,
                     {-d.column_label(k), d.column_label(k)}});
    }
  }

  for (int k = 0; k < d.column_count(); ++k) {
    bool one_above = false;
    for (int r = d.column_top(k); r < d.column_bottom(k); ++r) {
      const bool one_left = (t.row_bits(r) & low_bits(k)) != 0;
      if (one_above && one_left && !t.cell(r, k)) {
        out.push_back(
            {Violation::Kind::kLeViolation, {d.row_label(r), d.column_label(k)}});
      }
      one_above = one_above || t.cell(r, k);
    }
  }

  for (int k = 0; k < d.column_count(); ++k) {
    // Stair row k has its diagonal at column index k.
    const std::uint64_t bits = t.row_bits(k) & low_bits(k + 1);
    if (!t.cell(k, k) && bits != 0) {
      out.push_back({Violation::Kind::kDiagonalZeroNonempty,
                     {d.row_label(k), d.column_label(std::countr_zero(bits))}});
    }
  }
  return out;
}

std::vector<int> empty_positive_rows(const PermutationTableau& t) {
  const ShiftedDiagram& d = t.diagram();
  std::vector<int> out;
  for (int r = d.first_positive_row(); r < d.row_count(); ++r) {
    if (t.row_is_empty(r)) out.push_back(d.row_label(r));
  }
  return out;
}

int leftmost_one(const PermutationTableau& t, int row) {
  const std::uint64_t bits = t.row_bits(row);
  return bits == 0 ? -1 : std::countr_zero(bits);
}

std::vector<BorderStep> border_path(const PermutationTableau& t) {
  const ShiftedDiagram& d = t.diagram();
  std::vector<BorderStep> path;
  path.reserve(d.n());
  for (int label = 1; label <= d.n(); ++label) {
    if (d.is_column(label)) {
      path.push_back({true, t.row_bits(d.row_index(-label))});
    } else {
      path.push_back({false, t.row_bits(d.row_index(label))});
    }
  }
  return path;
}

PermutationTableau from_border_path(std::span<const BorderStep> path) {
  const int n = static_cast<int>(path.size());
  check_length(n);
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    if (path[i].is_column) mask |= std::uint64_t{1} << i;
  }
  ShiftedDiagram diagram = ShiftedDiagram::from_mask(n, mask);
  std::vector<std::uint64_t> rows;
  rows.reserve(diagram.row_count());
  for (int i = n - 1; i >= 0; --i) {
    if (path[i].is_column) rows.push_back(path[i].bits);
  }
  for (int i = 0; i < n; ++i) {
    if (!path[i].is_column) rows.push_back(path[i].bits);
  }
  return PermutationTableau(std::move(diagram), std::move(rows));
}

}  // namespace tableauxb
