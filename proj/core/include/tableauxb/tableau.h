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

#ifndef TABLEAUXB_TABLEAU_H_
#define TABLEAUXB_TABLEAU_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tableauxb {

// Largest supported length. Column sets and row fillings are 64-bit masks.
inline constexpr int kMaxTableauLength = 64;

// A box addressed by its row label (signed) and column label (positive).
struct Box {
  int row = 0;
  int column = 0;

  friend bool operator==(const Box&, const Box&) = default;
};

// Shifted (r, n)-diagram of type B, fully determined by n and the set C of
// column labels. Labels 1..n run along the southeast border path; a label in
// C names a column (a horizontal border edge), every other label names a
// positive row. Each column j also owns the stair row -j whose rightmost box,
// (-j, j), is the diagonal of column j.
//
// Rows run top to bottom: negative rows by decreasing |label|, then positive
// rows by increasing label. Columns run left to right by decreasing label.
// Row indices and column indices below refer to those orders.
class ShiftedDiagram {
 public:
  // Throws InvalidArgument if n is out of [1, kMaxTableauLength] or a label
  // is outside [n].
  ShiftedDiagram(int n, std::span<const int> columns);
  static ShiftedDiagram from_mask(int n, std::uint64_t column_mask);

  int n() const { return n_; }
  // Bit (j - 1) set iff j is a column label.
  std::uint64_t column_mask() const { return column_mask_; }
  bool is_column(int label) const;

  // Ascending column labels.
  std::vector<int> columns() const;

  int column_count() const { return static_cast<int>(column_labels_.size()); }
  int row_count() const { return static_cast<int>(row_labels_.size()); }
  int positive_row_count() const { return n_ - column_count(); }
  // Index of the first positive row in top-to-bottom order.
  int first_positive_row() const { return column_count(); }

  // Left-to-right column labels (decreasing).
  std::span<const int> column_labels() const { return column_labels_; }
  // Top-to-bottom row labels.
  std::span<const int> row_labels() const { return row_labels_; }

  int row_label(int row) const { return row_labels_[row]; }
  int column_label(int col) const { return column_labels_[col]; }
  // Boxes of a row occupy column indices [0, row_length).
  int row_length(int row) const { return row_lengths_[row]; }

  // -1 when the label does not name a row / column.
  int row_index(int label) const;
  int column_index(int label) const;

  bool has_box(Box box) const;
  // Top-to-bottom rows containing column `col` form the contiguous index
  // range [top, bottom).
  int column_top(int col) const { return column_top_[col]; }
  int column_bottom(int col) const { return column_bottom_[col]; }

  std::size_t box_count() const;

  // Lengths of the positive rows, top to bottom (weakly decreasing).
  std::vector<int> positive_shape() const;

  friend bool operator==(const ShiftedDiagram& a, const ShiftedDiagram& b) {
    return a.n_ == b.n_ && a.column_mask_ == b.column_mask_;
  }

 private:
  ShiftedDiagram(int n, std::uint64_t column_mask, int /*tag*/);

  int n_;
  std::uint64_t column_mask_;
  std::vector<int> column_labels_;
  std::vector<int> row_labels_;
  std::vector<int> row_lengths_;
  std::vector<int> column_top_;
  std::vector<int> column_bottom_;
};

inline ShiftedDiagram make_diagram(int n, std::span<const int> columns) {
  return ShiftedDiagram(n, columns);
}

// A 0/1 filling of a shifted diagram. Row r is stored as a bit mask whose
// bit k is the box in column index k. Structural equality is equality of
// (n, C, filling).
class PermutationTableau {
 public:
  // Throws InvalidArgument if the row count does not match the diagram.
  // Bits outside a row's boxes are kept so validate() can report them.
  PermutationTableau(ShiftedDiagram diagram, std::vector<std::uint64_t> rows);
  // All-zero filling.
  explicit PermutationTableau(ShiftedDiagram diagram);

  const ShiftedDiagram& diagram() const { return diagram_; }
  int n() const { return diagram_.n(); }

  std::uint64_t row_bits(int row) const { return rows_[row]; }
  std::span<const std::uint64_t> rows() const { return rows_; }
  bool cell(int row, int col) const { return (rows_[row] >> col) & 1u; }
  // Throws InvalidArgument if the box is not in the diagram.
  bool at(Box box) const;

  bool row_is_empty(int row) const { return rows_[row] == 0; }

  PermutationTableau with_cell(Box box, bool value) const;

  friend bool operator==(const PermutationTableau&,
                         const PermutationTableau&) = default;

 private:
  ShiftedDiagram diagram_;
  std::vector<std::uint64_t> rows_;
};

struct Violation {
  enum class Kind {
    kMissingOne,            // a column without any 1; witness is its diagonal
    kLeViolation,           // a 0 with a 1 above and a 1 to the left
    kDiagonalZeroNonempty,  // 0 on the diagonal, 1 elsewhere in that row
    kBoxOutOfShape,         // filling bit set outside the diagram
  };
  Kind kind;
  Box witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind kind);
std::string to_string(const Violation& violation);

// Empty iff the filling is a permutation tableau of type B.
std::vector<Violation> validate(const PermutationTableau& tableau);
inline bool is_valid(const PermutationTableau& tableau) {
  return validate(tableau).empty();
}

inline std::vector<int> positive_shape(const PermutationTableau& tableau) {
  return tableau.diagram().positive_shape();
}

// Ascending labels of positive rows without a 1 (zero-length rows count).
std::vector<int> empty_positive_rows(const PermutationTableau& tableau);

// Column index of the leftmost 1 in a row, or -1.
int leftmost_one(const PermutationTableau& tableau, int row);

// The border path read from label 1 to label n. A column step carries the
// filling of its stair row -j; a row step carries the filling of positive
// row i. Inserting or deleting row steps leaves every other step's bits
// valid, since row lengths only count columns.
struct BorderStep {
  bool is_column = false;
  std::uint64_t bits = 0;

  friend bool operator==(const BorderStep&, const BorderStep&) = default;
};

std::vector<BorderStep> border_path(const PermutationTableau& tableau);
PermutationTableau from_border_path(std::span<const BorderStep> path);

// Grid with column labels on top and row labels on the left; diagonals are
// bracketed. Violations, if any, are listed below the grid.
std::string render_ascii(const PermutationTableau& tableau);

}  // namespace tableauxb

#endif  // TABLEAUXB_TABLEAU_H_
