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

#include "wrpg/sip_codec.h"

#include <bit>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "wrpg/error.h"
#include "wrpg/watermark.h"

namespace wrpg {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

std::vector<int> Elements(const SelfInvertingPermutation& sip) {
  return {sip.elements().begin(), sip.elements().end()};
}

std::vector<int> Encode(std::uint64_t w) {
  return Elements(EncodeWatermarkToSip(Watermark(w)).sip);
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInternal;
}

TEST(WatermarkTest, BitLengthAndRange) {
  const Watermark w(27);
  EXPECT_EQ(w.bits(), 5);
  EXPECT_EQ(w.ToBinary(), "11011");
  EXPECT_EQ(w.bit(1), 1);
  EXPECT_EQ(w.bit(3), 0);
  EXPECT_EQ(RangeBegin(5), 16u);
  EXPECT_EQ(RangeEnd(5), 31u);
  EXPECT_EQ(Watermark::FromBinary("110110").value(), 54u);
}

TEST(WatermarkTest, RejectsValuesBelowTwo) {
  EXPECT_EQ(CodeOf([] { Watermark(0); }), ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([] { Watermark(1); }), ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([] { Watermark::FromBinary("011"); }), ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([] { Watermark::FromBinary("12"); }), ErrorCode::kDomain);
}

TEST(BitShapeTest, Examples) {
  EXPECT_EQ(BitShape(Watermark(8)).shape_case, ShapeCase::kCase1);
  EXPECT_EQ(BitShape(Watermark(27)),
            (WatermarkShape{ShapeCase::kCase2, 1, 1, 1}));
  EXPECT_EQ(BitShape(Watermark(15)),
            (WatermarkShape{ShapeCase::kCase3, 0, 0, 1}));
  EXPECT_EQ(BitShape(Watermark(54)),
            (WatermarkShape{ShapeCase::kCase2, 1, 2, 0}));
}

TEST(BitShapeTest, TwoBitWatermarksHaveEmptyInternalBlock) {
  EXPECT_EQ(BitShape(Watermark(2)),
            (WatermarkShape{ShapeCase::kCase3, 0, 0, 0}));
  EXPECT_EQ(BitShape(Watermark(3)),
            (WatermarkShape{ShapeCase::kCase3, 0, 0, 1}));
}

TEST(BitShapeTest, Case2DecompositionRebuildsWatermark) {
  for (std::uint64_t v = 4; v < 4096; ++v) {
    const Watermark w(v);
    const WatermarkShape shape = BitShape(w);
    if (shape.shape_case != ShapeCase::kCase2) continue;
    EXPECT_EQ(shape.ell + shape.r, w.bits() - 3) << v;
    const std::string rebuilt = "1" + std::string(shape.ell, '1') + "0" +
                                std::string(shape.r, '1') +
                                std::to_string(shape.last_bit);
    EXPECT_EQ(rebuilt, w.ToBinary());
  }
}

TEST(EncodeTest, Examples) {
  EXPECT_THAT(Encode(7), ElementsAre(4, 5, 6, 1, 2, 3, 7));
  EXPECT_THAT(Encode(5), ElementsAre(4, 6, 7, 1, 5, 2, 3));
  EXPECT_THAT(Encode(12), ElementsAre(5, 6, 9, 8, 1, 2, 7, 4, 3));
  EXPECT_THAT(Encode(4), ElementsAre(4, 7, 6, 1, 5, 3, 2));
}

TEST(EncodeTest, TraceForTwelve) {
  const EncodingTrace trace = EncodeWatermarkToSip(Watermark(12)).trace;
  EXPECT_EQ(trace.b_prime, "000011000");
  EXPECT_THAT(trace.x_positions, ElementsAre(1, 2, 3, 4, 7, 8, 9));
  EXPECT_THAT(trace.y_positions, ElementsAre(5, 6));
  EXPECT_THAT(trace.pi_b, ElementsAre(1, 2, 3, 4, 7, 8, 9, 6, 5));
  EXPECT_TRUE(IsBitonic(trace.pi_b));
}

TEST(EncodeTest, InvolutionWithSingleFixedPoint) {
  for (std::uint64_t v = 2; v < (1u << 12); ++v) {
    const SipEncoding enc = EncodeWatermarkToSip(Watermark(v));
    const int n = Watermark(v).bits();
    ASSERT_EQ(enc.sip.size(), 2 * n + 1);
    ASSERT_TRUE(IsInvolution(enc.sip.elements()));
    ASSERT_EQ(CountFixedPoints(enc.sip.elements()), 1);
    ASSERT_TRUE(IsBitonic(enc.trace.pi_b));
    const BlockDecomposition blocks = DecomposeBlocks(enc.sip);
    ASSERT_EQ(enc.sip.alpha(), n + blocks.k + 1);
    if (v == RangeEnd(n)) {
      ASSERT_EQ(enc.sip.alpha(), 2 * n + 1);
    }
  }
}

TEST(EncodeTest, InjectivePerRange) {
  for (int n = 2; n <= 12; ++n) {
    std::set<std::vector<int>> seen;
    for (std::uint64_t v = RangeBegin(n); v <= RangeEnd(n); ++v) {
      ASSERT_TRUE(seen.insert(Encode(v)).second) << v;
    }
  }
}

TEST(DecodeTest, Examples) {
  auto decode = [](std::vector<int> seq) {
    return DecodeSipToWatermark(
               SelfInvertingPermutation::FromSequence(std::move(seq)))
        .value();
  };
  EXPECT_EQ(decode({4, 5, 6, 1, 2, 3, 7}), 7u);
  EXPECT_EQ(decode({5, 6, 9, 8, 1, 2, 7, 4, 3}), 12u);
  EXPECT_EQ(decode({4, 7, 6, 1, 5, 3, 2}), 4u);
}

TEST(DecodeTest, RoundTripExhaustiveAndSampled) {
  for (std::uint64_t v = 2; v < (1u << 12); ++v) {
    ASSERT_EQ(DecodeSipToWatermark(EncodeWatermarkToSip(Watermark(v)).sip)
                  .value(),
              v);
  }
  for (int n = 13; n <= 16; ++n) {
    for (std::uint64_t v : testing::EvenSample(RangeBegin(n), RangeEnd(n), 64)) {
      ASSERT_EQ(DecodeSipToWatermark(EncodeWatermarkToSip(Watermark(v)).sip)
                    .value(),
                v);
    }
  }
}

TEST(DecodeTest, RejectsSipsThatAreNotEncodings) {
  // An involution with one fixed point, but not an encoding.
  const auto sip = SelfInvertingPermutation::FromSequence({2, 1, 3, 5, 4});
  EXPECT_EQ(CodeOf([&] { DecodeSipToWatermark(sip); }),
            ErrorCode::kNotAWatermark);
  // Prefix scan reads Y = {4, 5, 6}, i.e. w = 7, whose encoding differs.
  const auto scrambled =
      SelfInvertingPermutation::FromSequence({4, 6, 5, 1, 3, 2, 7});
  EXPECT_EQ(CodeOf([&] { DecodeSipToWatermark(scrambled); }),
            ErrorCode::kNotAWatermark);
  // Prefix scan reads Y = {5}: the most significant bit would be 0.
  const auto no_msb =
      SelfInvertingPermutation::FromSequence({5, 7, 6, 4, 1, 3, 2});
  EXPECT_EQ(CodeOf([&] { DecodeSipToWatermark(no_msb); }),
            ErrorCode::kNotAWatermark);
  const auto n1 = SelfInvertingPermutation::FromSequence({2, 1, 3});
  EXPECT_EQ(CodeOf([&] { DecodeSipToWatermark(n1); }),
            ErrorCode::kNotAWatermark);
}

TEST(SelfInvertingPermutationTest, RejectsNonSips) {
  EXPECT_EQ(CodeOf([] { SelfInvertingPermutation::FromSequence({1, 2}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { SelfInvertingPermutation::FromSequence({2, 3, 1}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { SelfInvertingPermutation::FromSequence({1, 2, 3}); }),
            ErrorCode::kInvalidArgument);
}

TEST(DecomposeBlocksTest, ZeroAndOneCase) {
  const BlockDecomposition b = DecomposeBlocks(EncodeWatermarkToSip(Watermark(12)).sip);
  EXPECT_THAT(b.pi1, ElementsAre(5, 6));
  EXPECT_THAT(b.pi2, ElementsAre(9, 8));
  EXPECT_THAT(b.pi3, ElementsAre(1, 2, 7));
  EXPECT_THAT(b.pi4, ElementsAre(4, 3));
  EXPECT_EQ(b.k, 2);
  EXPECT_EQ(b.alpha, 7);
  EXPECT_EQ(b.beta, 8);
  EXPECT_EQ(b.gamma, 3);
}

TEST(DecomposeBlocksTest, AllOneCase) {
  const BlockDecomposition b = DecomposeBlocks(EncodeWatermarkToSip(Watermark(7)).sip);
  EXPECT_THAT(b.pi1, ElementsAre(4, 5, 6));
  EXPECT_THAT(b.pi2, IsEmpty());
  EXPECT_THAT(b.pi3, ElementsAre(1, 2, 3, 7));
  EXPECT_THAT(b.pi4, IsEmpty());
  EXPECT_EQ(b.alpha, 7);
  EXPECT_FALSE(b.beta.has_value());
}

TEST(DecomposeBlocksTest, MalformedInputNamesClause) {
  auto clause = [](std::vector<int> seq) {
    try {
      DecomposeBlocks(seq);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kTemplateViolation);
      return e.check();
    }
    return std::string("none");
  };
  EXPECT_EQ(clause({2, 1, 3, 4, 5}), "pi1_start");
  EXPECT_EQ(clause({1, 2}), "range_odd_length");
  EXPECT_EQ(clause({3, 3, 1, 2, 5}), "permutation");
  EXPECT_EQ(clause({4, 1, 2, 3, 5, 6, 7}), "pi2_length");
  // n=3, k=1: pi2 must draw from {6, 7}.
  EXPECT_EQ(clause({4, 7, 5, 1, 6, 2, 3}), "pi2_range");
  // n=4, k=1: pi2 = (8, 7, 9).
  EXPECT_EQ(clause({5, 8, 7, 9, 1, 6, 2, 3, 4}), "pi2_bitonic");
  EXPECT_EQ(clause({4, 6, 7, 1, 5, 3, 2}), "pi4_positions");
  EXPECT_EQ(clause({4, 6, 7, 1, 2, 5, 3}), "pi3_template");
}

TEST(DecomposeBlocksTest, ClosingOrderRemarks) {
  for (std::uint64_t v = 2; v < (1u << 11); ++v) {
    const BlockDecomposition b = DecomposeBlocks(EncodeWatermarkToSip(Watermark(v)).sip);
    const int n = Watermark(v).bits();
    ASSERT_EQ(b.pi2.size(), b.pi4.size());
    ASSERT_EQ(static_cast<int>(b.pi2.size()), n - b.k);
    ASSERT_EQ(b.k, std::countl_one(v << (64 - n)));
    for (int x : b.pi2) {
      for (int y : b.pi1) ASSERT_GT(x, y);
    }
    if (b.beta) {
      for (int x : b.pi3) ASSERT_GT(*b.beta, x);
      for (int x : b.pi4) ASSERT_GT(*b.beta, x);
      ASSERT_EQ(b.pi4.back(), b.gamma);
    }
  }
}

TEST(PredicateTest, Bitonic) {
  EXPECT_TRUE(IsBitonic(std::vector<int>{}));
  EXPECT_TRUE(IsBitonic(std::vector<int>{3}));
  EXPECT_TRUE(IsBitonic(std::vector<int>{1, 4, 3}));
  EXPECT_TRUE(IsBitonic(std::vector<int>{4, 3, 1}));
  EXPECT_FALSE(IsBitonic(std::vector<int>{3, 1, 4}));
  EXPECT_FALSE(IsBitonic(std::vector<int>{1, 1}));
}

}  // namespace
}  // namespace wrpg
