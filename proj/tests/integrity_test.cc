// Copyright 2026 The wrpg Authors
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

#include "wrpg/integrity.h"

#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "wrpg/error.h"

namespace wrpg {
namespace {

using ::testing::Contains;
using ::testing::ElementsAre;

ReduciblePermutationGraph GraphOf(std::uint64_t w) {
  return EncodeSipToRpg(EncodeWatermarkToSip(Watermark(w)).sip);
}

SelfInvertingPermutation SipOf(std::uint64_t w) {
  return EncodeWatermarkToSip(Watermark(w)).sip;
}

TEST(ApplyEdgeEditsTest, FourRetargetingsTurnFiveIntoFour) {
  const std::vector<EdgeEdit> edits = {{6, 7}, {1, 6}, {5, 6}, {2, 3}};
  const EditOutcome out = ApplyEdgeEdits(GraphOf(5), edits);
  EXPECT_EQ(out.graph, GraphOf(4));
  EXPECT_EQ(out.applied, 4);
  EXPECT_EQ(out.effective, 4);
}

TEST(ApplyEdgeEditsTest, EmptyListIsIdentity) {
  const EditOutcome out = ApplyEdgeEdits(GraphOf(12), {});
  EXPECT_EQ(out.graph, GraphOf(12));
  EXPECT_EQ(out.effective, 0);
}

TEST(ApplyEdgeEditsTest, EffectiveCountIgnoresNoOpsAndOverrides) {
  const auto g = GraphOf(12);
  // 1 -> 8 is already the target; 3 -> 5 then 3 -> 4 restores the original.
  const std::vector<EdgeEdit> edits = {{1, 8}, {3, 5}, {3, 4}, {9, 0}};
  const EditOutcome out = ApplyEdgeEdits(g, edits);
  EXPECT_EQ(out.applied, 4);
  EXPECT_EQ(out.effective, 1);
  EXPECT_EQ(out.effective, GraphDistance(g, out.graph));
}

TEST(ApplyEdgeEditsTest, RejectsEditsOutsideTheModel) {
  const auto g = GraphOf(12);
  for (const EdgeEdit& edit :
       {EdgeEdit{0, 5}, EdgeEdit{10, 5}, EdgeEdit{-1, 5}, EdgeEdit{3, 11},
        EdgeEdit{3, -1}}) {
    const std::vector<EdgeEdit> edits = {edit};
    try {
      ApplyEdgeEdits(g, edits);
      ADD_FAILURE() << edit.source << ":" << edit.new_target;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnsupportedAttack);
    }
  }
}

TEST(ClassifyGraphTest, UntamperedGraphsAreValid) {
  for (std::uint64_t v = 4; v < (1u << 10); ++v) {
    const ValidityReport report = ClassifyGraph(GraphOf(v));
    ASSERT_TRUE(report.valid()) << v;
    ASSERT_EQ(report.watermark->value(), v);
    for (const NamedCheck& c : report.checks) {
      ASSERT_EQ(c.status, CheckStatus::kPass) << c.name;
    }
  }
}

TEST(ClassifyGraphTest, RewriteOfFiveIsTrueIncorrect) {
  const std::vector<EdgeEdit> edits = {{6, 7}, {1, 6}, {5, 6}, {2, 3}};
  const ValidityReport report =
      ClassifyGraph(ApplyEdgeEdits(GraphOf(5), edits).graph);
  ASSERT_TRUE(report.valid());
  EXPECT_EQ(report.watermark->value(), 4u);
}

TEST(ClassifyGraphTest, SingleRetargetIsFalseIncorrect) {
  const std::vector<EdgeEdit> edits = {{3, 5}};
  const ValidityReport report =
      ClassifyGraph(ApplyEdgeEdits(GraphOf(12), edits).graph);
  EXPECT_FALSE(report.valid());
  EXPECT_FALSE(report.failed_checks().empty());
  EXPECT_EQ(report.check("involution").status, CheckStatus::kFail);
}

TEST(ClassifyGraphTest, BrokenOrderSkipsPermutationChecks) {
  const std::vector<EdgeEdit> edits = {{5, 2}};
  const ValidityReport report =
      ClassifyGraph(ApplyEdgeEdits(GraphOf(12), edits).graph);
  EXPECT_FALSE(report.valid());
  EXPECT_THAT(report.failed_checks(), Contains("back_edge_order"));
  EXPECT_EQ(report.check("involution").status, CheckStatus::kSkipped);
  EXPECT_EQ(report.check("roundtrip").status, CheckStatus::kSkipped);
}

TEST(ClassifyGraphTest, EdgeToFooterFailsReducibility) {
  const std::vector<EdgeEdit> edits = {{4, 0}};
  const ValidityReport report =
      ClassifyGraph(ApplyEdgeEdits(GraphOf(12), edits).graph);
  EXPECT_THAT(report.failed_checks(), ElementsAre("back_edge_order", "reducible"));
}

TEST(ClassifyGraphTest, EvenLengthGraphFailsRange) {
  const ValidityReport report =
      ClassifyGraph(ReduciblePermutationGraph(BackEdgeMap({2, 3})));
  EXPECT_FALSE(report.valid());
  EXPECT_THAT(report.failed_checks(), Contains("range_odd_length"));
}

// No single retarget of a valid graph lands on another valid graph.
TEST(ClassifyGraphTest, EverySingleEditIsFalseIncorrect) {
  for (int n = 4; n <= 5; ++n) {
    for (std::uint64_t v = RangeBegin(n); v <= RangeEnd(n); ++v) {
      const auto g = GraphOf(v);
      for (int source = 1; source <= g.n_star(); ++source) {
        for (int target = 0; target <= g.header(); ++target) {
          if (target == g.back_edges().target(source)) continue;
          const std::vector<EdgeEdit> edits = {{source, target}};
          ASSERT_FALSE(ClassifyGraph(ApplyEdgeEdits(g, edits).graph).valid())
              << v << " " << source << ":" << target;
        }
      }
    }
  }
}

TEST(SwapConjugateTest, Examples) {
  EXPECT_EQ(SwapConjugate(SipOf(8), 9, 8), SipOf(9));
  EXPECT_EQ(SwapConjugate(SipOf(5), 7, 6), SipOf(4));
  const auto sip = SipOf(12);
  EXPECT_EQ(SwapConjugate(SwapConjugate(sip, 2, 7), 2, 7), sip);
}

TEST(SwapConjugateTest, PreservesInvolutionAndFixedPointCount) {
  const auto sip = SipOf(45);
  for (int x = 1; x <= sip.size(); ++x) {
    for (int y = 1; y <= sip.size(); ++y) {
      if (x == y) continue;
      const auto swapped = SwapConjugate(sip, x, y);
      ASSERT_TRUE(IsInvolution(swapped.elements()));
      ASSERT_EQ(CountFixedPoints(swapped.elements()), 1);
    }
  }
}

TEST(SwapConjugateTest, RejectsBadElements) {
  EXPECT_THROW(SwapConjugate(SipOf(5), 3, 3), Error);
  EXPECT_THROW(SwapConjugate(SipOf(5), 0, 3), Error);
  EXPECT_THROW(SwapConjugate(SipOf(5), 3, 8), Error);
}

}  // namespace
}  // namespace wrpg
