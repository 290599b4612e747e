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

#include <gtest/gtest.h>

#include "examples.h"
#include "tableauxb/enumerate.h"
#include "tableauxb/errors.h"
#include "tableauxb/zigzag.h"

namespace tableauxb {
namespace {

using AT = AlternatingType;

std::vector<int> lengths(const InsertionPlan& plan) {
  std::vector<int> out;
  for (const PlannedInsertion& p : plan) out.push_back(p.length);
  std::sort(out.rbegin(), out.rend());
  return out;
}

TEST(InsertionPlan, NegDuExampleShape) {
  const std::vector<int> shape{2, 2, 1};
  const InsertionPlan plan = insertion_plan(shape, 8, AT::kNegDU);
  EXPECT_EQ(plan.size(), 6u);
  EXPECT_EQ(lengths(plan), (std::vector<int>{3, 2, 2, 2, 1, 1}));
}

TEST(InsertionPlan, EmptyShapeForNegDu) {
  const std::vector<int> shape{0};
  EXPECT_TRUE(insertion_plan(shape, 2, AT::kNegDU).empty());
}

TEST(InsertionPlan, TotalsPerType) {
  const std::vector<int> shape{2, 2, 1};
  EXPECT_EQ(insertion_plan(shape, 7, AT::kPosUD).size(), 8u);
  EXPECT_EQ(insertion_plan(shape, 7, AT::kPosDU).size(), 7u);
  EXPECT_EQ(insertion_plan(shape, 7, AT::kNegUD).size(), 6u);
}

TEST(InsertionPlan, RejectsImpossibleShapes) {
  const std::vector<int> too_long{5};
  EXPECT_THROW(insertion_plan(too_long, 3, AT::kPosDU), InvalidArgument);
  const std::vector<int> zero_part{2, 0};
  EXPECT_THROW(insertion_plan(zero_part, 4, AT::kPosDU), InvalidArgument);
}

TEST(Parity, Lengths) {
  EXPECT_EQ(alternating_length(AT::kNegDU, 8), 14);
  EXPECT_EQ(alternating_length(AT::kNegUD, 7), 13);
  EXPECT_EQ(alternating_length(AT::kPosDU, 7), 14);
  EXPECT_EQ(alternating_length(AT::kPosUD, 7), 15);
  EXPECT_TRUE(has_bijection_parity(AT::kNegUD, 1));
  EXPECT_FALSE(has_bijection_parity(AT::kPosUD, 1));
  EXPECT_FALSE(has_bijection_parity(AT::kPosDU, 3));
}

TEST(Theta, WorkedExamples) {
  const PermutationTableau neg_du = theta(testing::negdu_input(), AT::kNegDU);
  EXPECT_EQ(neg_du, testing::negdu_output());
  EXPECT_EQ(zeta(neg_du), SignedPermutation(testing::kNegDuWindow));
  EXPECT_EQ(theta(testing::m7_input(), AT::kNegUD), testing::negud_output());
  EXPECT_EQ(theta(testing::m7_input(), AT::kPosDU), testing::posdu_output());
  EXPECT_EQ(theta(testing::m7_input(), AT::kPosUD), testing::posud_output());
}

TEST(Theta, RejectsWrongClass) {
  // Figure 1 maps to 2,7,... with sigma(1) > 0, outside the minus classes.
  EXPECT_THROW(theta(testing::sample_tableau(), AT::kNegUD), PreconditionError);
  EXPECT_THROW(theta(PermutationTableau(ShiftedDiagram(2, std::vector<int>{})), AT::kPosDU),
               PreconditionError);
}

TEST(Psi, WorkedExamples) {
  EXPECT_EQ(psi(testing::negdu_output(), AT::kNegDU), testing::negdu_input());
  EXPECT_EQ(psi(testing::negud_output(), AT::kNegUD), testing::m7_input());
  EXPECT_EQ(psi(testing::posdu_output(), AT::kPosDU), testing::m7_input());
  EXPECT_EQ(psi(testing::posud_output(), AT::kPosUD), testing::m7_input());
}

TEST(Psi, RejectsNonMaximalOrWrongType) {
  EXPECT_THROW(psi(testing::negdu_output(), AT::kPosDU), PreconditionError);
  // 1,2 with no columns is +UD at n = 2, off parity.
  EXPECT_THROW(psi(PermutationTableau(ShiftedDiagram(2, std::vector<int>{})), AT::kPosUD),
               PreconditionError);
}

// The +UD first batch also applies when row 1 already has full length;
// these two derangements of length 2 exercise exactly that case.
TEST(Theta, PosUdFullLengthFirstRow) {
  for (const std::vector<int>& w : {std::vector<int>{2, 1}, std::vector<int>{2, -1}}) {
    const PermutationTableau source = zeta_inverse(SignedPermutation(w));
    const PermutationTableau out = theta(source, AT::kPosUD);
    EXPECT_EQ(out.n(), 5);
    EXPECT_EQ(count_fixed_points(zeta(out).window()), 3);
    EXPECT_EQ(psi(out, AT::kPosUD), source);
  }
}

TEST(RoundTrip, PsiThetaOnAllDerangementTableaux) {
  for (int m = 1; m <= 5; ++m) {
    for (const PermutationTableau& t : all_tableaux(m)) {
      const SignedPermutation s = zeta(t);
      for (AT type : kAlternatingTypes) {
        if (!in_derangement_class(s.window(), paired_derangement_class(type))) continue;
        const PermutationTableau out = theta(t, type);
        ASSERT_EQ(psi(out, type), t) << to_string(type) << " " << format_window(s);
      }
    }
  }
}

TEST(RoundTrip, ThetaPsiOnAllMaximalTableaux) {
  for (int n = 1; n <= 6; ++n) {
    for (const PermutationTableau& t : all_tableaux(n)) {
      const SignedPermutation s = zeta(t);
      for (AT type : kAlternatingTypes) {
        if (!has_bijection_parity(type, n) || !alternating_types(s).contains(type) ||
            count_fixed_points(s.window()) != max_fixed_points(type, n)) {
          continue;
        }
        ASSERT_EQ(theta(psi(t, type), type), t) << to_string(type) << " " << format_window(s);
      }
    }
  }
}

}  // namespace
}  // namespace tableauxb
