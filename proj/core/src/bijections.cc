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

#include "tableauxb/bijections.h"

#include <string>

#include "tableauxb/errors.h"
#include "tableauxb/zigzag.h"

namespace tableauxb {
namespace {

std::string shape_string(std::span<const int> shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(shape[i]);
  }
  return s + ")";
}

// Border path of a length-m tableau with the given positive shape: row i
// (1-based) sits after column_count - shape[i-1] column steps.
class ShapePath {
 public:
  ShapePath(std::span<const int> shape, int m)
      : columns_(m - static_cast<int>(shape.size())) {
    int placed_columns = 0;
    for (int length : shape) {
      const int before = columns_ - length;
      while (placed_columns < before) {
        is_column_.push_back(true);
        ++placed_columns;
      }
      row_positions_.push_back(static_cast<int>(is_column_.size()));
      is_column_.push_back(false);
    }
    while (placed_columns < columns_) {
      is_column_.push_back(true);
      ++placed_columns;
    }
  }

  int column_count() const { return columns_; }

  // First slot after positive row `after_row` (0 = before everything) that
  // is preceded by exactly column_count - length column steps.
  int slot_for(int length, int after_row) const {
    const int wanted = columns_ - length;
    int slot = after_row == 0 ? 0 : row_positions_[after_row - 1] + 1;
    int cols = 0;
    for (int p = 0; p < slot; ++p) cols += is_column_[p];
    while (cols < wanted) cols += is_column_[slot++];
    if (cols != wanted) {
      throw InternalError("insertion_plan: no slot for length " +
                          std::to_string(length));
    }
    return slot;
  }

 private:
  int columns_;
  std::vector<bool> is_column_;
  std::vector<int> row_positions_;
};

void push_run(InsertionPlan& plan, const ShapePath& path, int after_row,
              int from, int down_to) {
  for (int len = from; len >= down_to; --len) {
    plan.push_back({path.slot_for(len, after_row), len});
  }
}

// a, a, a-1, ..., b+1 truncated to a - b + 1 entries (a single a when
// a == b), all placed after row `after_row`.
void push_pattern(InsertionPlan& plan, const ShapePath& path, int after_row,
                  int a, int b) {
  plan.push_back({path.slot_for(a, after_row), a});
  push_run(plan, path, after_row, a, b + 1);
}

int insertion_total(AlternatingType type, int m) {
  return alternating_length(type, m) - m;
}

}  // namespace

DerangementClass paired_derangement_class(AlternatingType type) {
  switch (type) {
    case AlternatingType::kNegDU: return DerangementClass::kMinusD;
    case AlternatingType::kNegUD: return DerangementClass::kMinus;
    case AlternatingType::kPosDU:
    case AlternatingType::kPosUD: return DerangementClass::kB;
  }
  return DerangementClass::kB;
}

int alternating_length(AlternatingType type, int m) {
  switch (type) {
    case AlternatingType::kNegDU: return 2 * m - 2;
    case AlternatingType::kNegUD: return 2 * m - 1;
    case AlternatingType::kPosDU: return 2 * m;
    case AlternatingType::kPosUD: return 2 * m + 1;
  }
  return 0;
}

bool has_bijection_parity(AlternatingType type, int n) {
  switch (type) {
    case AlternatingType::kNegDU: return n >= 2 && n % 2 == 0;
    case AlternatingType::kNegUD: return n >= 1 && n % 2 == 1;
    case AlternatingType::kPosDU: return n >= 2 && n % 2 == 0;
    case AlternatingType::kPosUD: return n >= 3 && n % 2 == 1;
  }
  return false;
}

InsertionPlan insertion_plan(std::span<const int> shape, int m,
                             AlternatingType type) {
  if (m < 1) throw InvalidArgument("insertion_plan: m must be positive");
  if (!shape.empty() && shape.front() == 0) {
    if (shape.size() != 1) {
      throw InvalidArgument("insertion_plan: shape " + shape_string(shape) +
                            " has zero-length rows");
    }
    shape = shape.first(0);
  }
  const int r = static_cast<int>(shape.size());
  const int c = m - r;
  for (int i = 0; i < r; ++i) {
    if (shape[i] < 1 || (i > 0 && shape[i] > shape[i - 1])) {
      throw InvalidArgument("insertion_plan: shape " + shape_string(shape) +
                            " is not a partition with positive parts");
    }
  }
  if (c < 0 || (r > 0 && shape[0] > c)) {
    throw InvalidArgument("insertion_plan: shape " + shape_string(shape) +
                          " does not fit a tableau of length " +
                          std::to_string(m));
  }

  const ShapePath path(shape, m);
  const int lambda1 = r > 0 ? shape[0] : 0;
  InsertionPlan plan;

  switch (type) {
    case AlternatingType::kNegDU:
    case AlternatingType::kNegUD: {
      // Columns 1 (and 2 for -DU) precede every positive row.
      const int top = type == AlternatingType::kNegDU ? c - 2 : c - 1;
      if (top < lambda1) {
        throw InvalidArgument("insertion_plan: shape " + shape_string(shape) +
                              " with m = " + std::to_string(m) +
                              " cannot come from class " +
                              std::string(to_string(paired_derangement_class(type))));
      }
      push_run(plan, path, 0, top, lambda1 + 1);
      break;
    }
    case AlternatingType::kPosDU:
      push_run(plan, path, 0, c, lambda1 + 1);
      break;
    case AlternatingType::kPosUD:
      // Applied also when label 1 is a row (lambda1 == c); that case
      // contributes one row of length c above the first row.
      push_pattern(plan, path, 0, c, lambda1);
      break;
  }
  for (int i = 1; i < r; ++i) push_pattern(plan, path, i, shape[i - 1], shape[i]);
  if (r > 0) push_pattern(plan, path, r, shape[r - 1], 0);

  if (static_cast<int>(plan.size()) != insertion_total(type, m)) {
    throw InternalError("insertion_plan: " + std::to_string(plan.size()) +
                        " insertions for " + std::string(to_string(type)) +
                        ", expected " +
                        std::to_string(insertion_total(type, m)));
  }
  return plan;
}

PermutationTableau theta(const PermutationTableau& tableau,
                         AlternatingType type) {
  const SignedPermutation sigma = zeta(tableau);
  const DerangementClass cls = paired_derangement_class(type);
  if (!in_derangement_class(sigma.window(), cls)) {
    throw PreconditionError(
        "theta(" + std::string(to_string(type)) + "): image " +
        format_window(sigma) + " is not in derangement class " +
        std::string(to_string(cls)));
  }
  const int m = tableau.n();
  const int n = alternating_length(type, m);
  if (n < 1 || n > kMaxTableauLength) {
    throw PreconditionError("theta: result length " + std::to_string(n) +
                            " is not supported");
  }

  const InsertionPlan plan =
      insertion_plan(positive_shape(tableau), m, type);
  const std::vector<BorderStep> source = border_path(tableau);
  std::vector<BorderStep> target;
  target.reserve(n);
  for (int slot = 0; slot <= m; ++slot) {
    for (const PlannedInsertion& ins : plan) {
      if (ins.slot == slot) target.push_back({false, 0});
    }
    if (slot < m) target.push_back(source[slot]);
  }
  PermutationTableau result = from_border_path(target);

  const auto violations = validate(result);
  if (!violations.empty()) {
    throw InternalError("theta produced an invalid tableau: " +
                        to_string(violations.front()));
  }
  const SignedPermutation image = zeta(result);
  if (!alternating_types(image).contains(type) ||
      count_fixed_points(image.window()) != max_fixed_points(type, n)) {
    throw InternalError("theta(" + std::string(to_string(type)) +
                        ") produced " + format_window(image) +
                        ", which is not maximal alternating of that type");
  }
  return result;
}

PermutationTableau psi(const PermutationTableau& tableau,
                       AlternatingType type) {
  const SignedPermutation sigma = zeta(tableau);
  const int n = tableau.n();
  const std::string name(to_string(type));
  if (!has_bijection_parity(type, n)) {
    throw PreconditionError("psi(" + name + "): length " + std::to_string(n) +
                            " is outside the bijection's parity class");
  }
  if (!alternating_types(sigma).contains(type)) {
    throw PreconditionError("psi(" + name + "): image " + format_window(sigma) +
                            " is not alternating of type " + name);
  }
  const int k = count_fixed_points(sigma.window());
  const int k_max = max_fixed_points(type, n);
  if (k != k_max) {
    throw PreconditionError("psi(" + name + "): image " + format_window(sigma) +
                            " has " + std::to_string(k) +
                            " fixed points, maximal is " +
                            std::to_string(k_max));
  }

  std::vector<BorderStep> path;
  for (const BorderStep& step : border_path(tableau)) {
    if (step.is_column || step.bits != 0) path.push_back(step);
  }
  if (static_cast<int>(path.size()) != n - k_max) {
    throw InternalError("psi: removed " + std::to_string(n - path.size()) +
                        " rows, expected " + std::to_string(k_max));
  }
  PermutationTableau result = from_border_path(path);
  const SignedPermutation image = zeta(result);
  const DerangementClass cls = paired_derangement_class(type);
  if (!in_derangement_class(image.window(), cls)) {
    throw InternalError("psi(" + name + ") produced " + format_window(image) +
                        ", outside class " + std::string(to_string(cls)));
  }
  return result;
}

}  // namespace tableauxb
