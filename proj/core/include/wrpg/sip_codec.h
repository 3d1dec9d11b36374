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

// Codec between integer watermarks and self-inverting permutations (SiPs).
//
// All positions and values are 1-based. A watermark w of bit-length n is
// encoded as a SiP pi* of length n* = 2n+1 with exactly one fixed point.
// Every encoding splits as pi* = pi1 || pi2 || pi3 || pi4 where
//
//   pi1 = (n+1, ..., n+k)              k = number of leading 1 bits of w
//   pi2 = bitonic over {n+k+2..2n+1}   empty iff w = 2^n - 1
//   pi3 = (1, ..., k, alpha)           alpha = n+k+1, the fixed point
//   pi4 = positions of pi2's elements, in ascending element order

#ifndef WRPG_SIP_CODEC_H_
#define WRPG_SIP_CODEC_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wrpg/watermark.h"

namespace wrpg {

// Immutable involution on 1..n* with n* = 2n+1 odd and exactly one fixed
// point. Arbitrary sequences are checked with the free predicates below
// before they can become one of these.
class SelfInvertingPermutation {
 public:
  // Throws Error(kInvalidArgument) naming the first failed property.
  static SelfInvertingPermutation FromSequence(std::vector<int> elements);

  std::span<const int> elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int n() const { return (size() - 1) / 2; }
  int alpha() const { return alpha_; }

  // Element at 1-based position.
  int at(int position) const { return elements_[position - 1]; }

  // For an involution the position of v is pi(v).
  int PositionOf(int value) const { return at(value); }

  friend bool operator==(const SelfInvertingPermutation& a,
                         const SelfInvertingPermutation& b) {
    return a.elements_ == b.elements_;
  }

 private:
  SelfInvertingPermutation(std::vector<int> elements, int alpha)
      : elements_(std::move(elements)), alpha_(alpha) {}

  std::vector<int> elements_;
  int alpha_;
};

struct EncodingTrace {
  std::string b_prime;  // '0'/'1' string, 0^n || b(w) || 0.
  std::vector<int> x_positions;
  std::vector<int> y_positions;
  std::vector<int> pi_b;  // X || reverse(Y).
};

struct SipEncoding {
  SelfInvertingPermutation sip;
  EncodingTrace trace;
};

struct BlockDecomposition {
  std::vector<int> pi1;
  std::vector<int> pi2;
  std::vector<int> pi3;
  std::vector<int> pi4;
  int k = 0;
  int alpha = 0;
  std::optional<int> beta;  // Last element of pi2; absent in the all-one case.
  int gamma = 0;            // Position of the maximum element 2n+1.
};

SipEncoding EncodeWatermarkToSip(const Watermark& w);

// Decodes by a prefix scan for the 1-bit positions, then re-encodes and
// requires an exact match. Throws Error(kNotAWatermark) otherwise.
Watermark DecodeSipToWatermark(const SelfInvertingPermutation& sip);

// Splits a sequence into the four blocks. Throws Error(kTemplateViolation)
// whose check() names the first clause that failed.
BlockDecomposition DecomposeBlocks(std::span<const int> sequence);
BlockDecomposition DecomposeBlocks(const SelfInvertingPermutation& sip);

bool IsPermutation(std::span<const int> sequence);
bool IsInvolution(std::span<const int> sequence);
int CountFixedPoints(std::span<const int> sequence);

// Strictly increasing then strictly decreasing; either part may be empty.
bool IsBitonic(std::span<const int> sequence);

}  // namespace wrpg

#endif  // WRPG_SIP_CODEC_H_
