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

#include <set>

#include <gtest/gtest.h>

#include "examples.h"
#include "tableauxb/enumerate.h"
#include "tableauxb/errors.h"

namespace tableauxb {
namespace {

using testing::sample_tableau;

TEST(ZigzagPath, SampleTableauRowOne) {
  const ZigzagTrace trace = zigzag_path(sample_tableau(), ZigzagStart::from_row(1));
  EXPECT_EQ(trace.exit_side, ExitSide::kEast);
  EXPECT_EQ(trace.exit_label, 2);
  EXPECT_EQ(format_trace(trace),
            "row 1: col8→col3 [turn]\n"
            "col 3: row2→row2 [turn]\n"
            "exit east row 2\n");
}

TEST(ZigzagPath, SampleTableauColumnSix) {
  const ZigzagTrace trace = zigzag_path(sample_tableau(), ZigzagStart::from_column(6));
  EXPECT_EQ(trace.exit_side, ExitSide::kEast);
  EXPECT_EQ(trace.exit_label, 1);
  ASSERT_FALSE(trace.boxes.empty());
  EXPECT_EQ(trace.boxes.front(), (Box{-6, 6}));
}

TEST(ZigzagPath, SampleTableauRowMinusEight) {
  const ZigzagTrace trace = zigzag_path(sample_tableau(), ZigzagStart::from_row(-8));
  EXPECT_EQ(trace.exit_side, ExitSide::kSouth);
  EXPECT_EQ(trace.exit_label, 3);
  EXPECT_EQ(trace.boxes.size(), trace.turns.size());
}

TEST(ZigzagPath, RejectsMissingStart) {
  EXPECT_THROW(zigzag_path(sample_tableau(), ZigzagStart::from_row(3)), InvalidArgument);
  EXPECT_THROW(zigzag_path(sample_tableau(), ZigzagStart::from_column(1)), InvalidArgument);
}

TEST(Zeta, SampleTableau) {
  const SignedPermutation s = zeta(sample_tableau());
  EXPECT_EQ(s(1), 2);
  EXPECT_EQ(s(6), 1);
  EXPECT_EQ(s(8), -3);
  EXPECT_EQ(format_window(s), "2,7,-5,6,-4,1,8,-3");
}

TEST(Zeta, NoColumnsGivesIdentity) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(zeta(PermutationTableau(ShiftedDiagram(n, std::vector<int>{}))),
              SignedPermutation::identity(n));
  }
}

TEST(Zeta, ExampleOutputs) {
  EXPECT_EQ(zeta(testing::negdu_output()), SignedPermutation(testing::kNegDuWindow));
  EXPECT_EQ(zeta(testing::negud_output()), SignedPermutation(testing::kNegUdWindow));
  EXPECT_EQ(zeta(testing::posdu_output()), SignedPermutation(testing::kPosDuWindow));
  EXPECT_EQ(zeta(testing::posud_output()), SignedPermutation(testing::kPosUdWindow));
}

TEST(Zeta, RejectsInvalidTableau) {
  EXPECT_THROW(zeta(PermutationTableau(ShiftedDiagram(2, std::vector<int>{1}))),
               PreconditionError);
}

TEST(Zeta, BijectiveForSmallLengths) {
  const std::uint64_t expected[] = {2, 8, 48, 384, 3840};
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> images;
    const auto all = all_tableaux(n);
    for (const PermutationTableau& t : all) {
      const SignedPermutation s = zeta(t);
      images.emplace(s.window().begin(), s.window().end());
    }
    EXPECT_EQ(all.size(), expected[n - 1]);
    EXPECT_EQ(images.size(), expected[n - 1]) << "n=" << n;
  }
}

TEST(ZetaInverse, SmallExamples) {
  const PermutationTableau id = zeta_inverse(SignedPermutation::identity(3));
  EXPECT_EQ(id.diagram().column_count(), 0);
  const PermutationTableau neg = zeta_inverse(SignedPermutation({-1}));
  EXPECT_EQ(neg.diagram().columns(), (std::vector<int>{1}));
  EXPECT_TRUE(neg.cell(0, 0));
}

TEST(ZetaInverse, InvertsZetaForSmallLengths) {
  for (int n = 1; n <= 5; ++n) {
    for (const PermutationTableau& t : all_tableaux(n)) {
      ASSERT_EQ(zeta_inverse(zeta(t)), t);
    }
  }
}

TEST(ZetaInverse, SampleTableauAndBound) {
  EXPECT_EQ(zeta_inverse(zeta(sample_tableau())), sample_tableau());
  EXPECT_THROW(zeta_inverse(SignedPermutation(testing::kNegUdWindow)), PreconditionError);
  EXPECT_EQ(zeta_inverse(SignedPermutation(testing::kNegUdWindow), 13), testing::negud_output());
}

}  // namespace
}  // namespace tableauxb
