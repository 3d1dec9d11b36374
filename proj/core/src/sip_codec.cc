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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wrpg/error.h"

namespace wrpg {
namespace {

[[noreturn]] void Violation(const std::string& clause,
                            const std::string& message) {
  throw Error(ErrorCode::kTemplateViolation,
              "template violation (" + clause + "): " + message, clause);
}

}  // namespace

bool IsPermutation(std::span<const int> sequence) {
  const int size = static_cast<int>(sequence.size());
  std::vector<bool> seen(size + 1, false);
  for (int v : sequence) {
    if (v < 1 || v > size || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool IsInvolution(std::span<const int> sequence) {
  if (!IsPermutation(sequence)) return false;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[sequence[i] - 1] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

int CountFixedPoints(std::span<const int> sequence) {
  int count = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] == static_cast<int>(i) + 1) ++count;
  }
  return count;
}

bool IsBitonic(std::span<const int> sequence) {
  std::size_t i = 1;
  while (i < sequence.size() && sequence[i - 1] < sequence[i]) ++i;
  while (i < sequence.size() && sequence[i - 1] > sequence[i]) ++i;
  return i >= sequence.size();
}

SelfInvertingPermutation SelfInvertingPermutation::FromSequence(
    std::vector<int> elements) {
  if (elements.size() % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "self-inverting permutation must have odd length, got " +
                    std::to_string(elements.size()),
                "range_odd_length");
  }
  if (!IsInvolution(elements)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sequence is not an involution on 1..n*", "involution");
  }
  if (CountFixedPoints(elements) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "involution must have exactly one fixed point",
                "single_fixed_point");
  }
  int alpha = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == static_cast<int>(i) + 1) alpha = elements[i];
  }
  return SelfInvertingPermutation(std::move(elements), alpha);
}

SipEncoding EncodeWatermarkToSip(const Watermark& w) {
  const int n = w.bits();
  const int n_star = 2 * n + 1;

  EncodingTrace trace;
  trace.b_prime = std::string(n, '0') + w.ToBinary() + "0";
  for (int pos = 1; pos <= n_star; ++pos) {
    (trace.b_prime[pos - 1] == '1' ? trace.y_positions : trace.x_positions)
        .push_back(pos);
  }
  trace.pi_b = trace.x_positions;
  trace.pi_b.insert(trace.pi_b.end(), trace.y_positions.rbegin(),
                    trace.y_positions.rend());

  // Mirrored positions of pi^b form the 2-cycles; the middle is the 1-cycle.
  std::vector<int> elements(n_star, 0);
  for (int i = 1; i <= n; ++i) {
    const int a = trace.pi_b[i - 1];
    const int c = trace.pi_b[n_star - i];
    elements[a - 1] = c;
    elements[c - 1] = a;
  }
  const int middle = trace.pi_b[n];
  elements[middle - 1] = middle;

  return {SelfInvertingPermutation::FromSequence(std::move(elements)),
          std::move(trace)};
}

Watermark DecodeSipToWatermark(const SelfInvertingPermutation& sip) {
  const int n = sip.n();
  if (n < 2 || n > Watermark::kMaxBits) {
    throw Error(ErrorCode::kNotAWatermark,
                "permutation length " + std::to_string(sip.size()) +
                    " does not encode a watermark of 2.." +
                    std::to_string(Watermark::kMaxBits) + " bits");
  }
  // The leading run of values in [n+1, 2n] is exactly Y, the positions of
  // 1 bits in B'; it always ends at 2n+1.
  std::uint64_t value = 0;
  for (int m = 1; m <= sip.size(); ++m) {
    const int v = sip.at(m);
    if (v < n + 1 || v > 2 * n) break;
    value |= std::uint64_t{1} << (n - (v - n));
  }
  if (BitLength(value) != n) {
    throw Error(ErrorCode::kNotAWatermark,
                "reconstructed most significant bit is 0");
  }
  Watermark w(value);
  if (!(EncodeWatermarkToSip(w).sip == sip)) {
    throw Error(ErrorCode::kNotAWatermark,
                "permutation is not the encoding of w=" +
                    std::to_string(value));
  }
  return w;
}

BlockDecomposition DecomposeBlocks(std::span<const int> sequence) {
  const int n_star = static_cast<int>(sequence.size());
  if (n_star < 3 || n_star % 2 == 0) {
    Violation("range_odd_length",
              "length " + std::to_string(n_star) + " is not 2n+1 with n >= 1");
  }
  if (!IsPermutation(sequence)) {
    Violation("permutation", "sequence is not a permutation of 1..n*");
  }
  const int n = (n_star - 1) / 2;
  auto at = [&](int position) { return sequence[position - 1]; };

  BlockDecomposition blocks;
  int k = 0;
  while (k < n && at(k + 1) == n + k + 1) ++k;
  if (k == 0) {
    Violation("pi1_start", "first element must be n+1=" +
                               std::to_string(n + 1) + ", got " +
                               std::to_string(at(1)));
  }
  blocks.k = k;
  blocks.alpha = n + k + 1;
  blocks.pi1.assign(sequence.begin(), sequence.begin() + k);

  const auto one = std::find(sequence.begin(), sequence.end(), 1);
  const int pi3_start = static_cast<int>(one - sequence.begin()) + 1;
  blocks.pi2.assign(sequence.begin() + k, one);
  if (static_cast<int>(blocks.pi2.size()) != n - k) {
    Violation("pi2_length", "pi2 has " + std::to_string(blocks.pi2.size()) +
                                " elements, expected n-k=" +
                                std::to_string(n - k));
  }
  for (int v : blocks.pi2) {
    if (v < n + k + 2) {
      Violation("pi2_range", "pi2 element " + std::to_string(v) +
                                 " below n+k+2=" + std::to_string(n + k + 2));
    }
  }
  if (!IsBitonic(blocks.pi2)) {
    Violation("pi2_bitonic", "pi2 is not bitonic");
  }

  // pi3 occupies k+1 positions starting at the element 1.
  blocks.pi3.assign(one, one + (k + 1));
  for (int i = 1; i <= k; ++i) {
    if (blocks.pi3[i - 1] != i) {
      Violation("pi3_template", "pi3 must start with 1.." + std::to_string(k));
    }
  }
  if (blocks.pi3.back() != blocks.alpha) {
    Violation("pi3_template", "pi3 must end with alpha=n+k+1=" +
                                  std::to_string(blocks.alpha));
  }

  blocks.pi4.assign(sequence.begin() + (pi3_start - 1) + (k + 1),
                    sequence.end());
  // The i-th element of pi4 is the position of the i-th smallest of pi2.
  std::vector<std::pair<int, int>> by_value;
  for (int i = 0; i < static_cast<int>(blocks.pi2.size()); ++i) {
    by_value.emplace_back(blocks.pi2[i], k + 1 + i);
  }
  std::sort(by_value.begin(), by_value.end());
  for (std::size_t i = 0; i < by_value.size(); ++i) {
    if (blocks.pi4[i] != by_value[i].second) {
      Violation("pi4_positions",
                "pi4[" + std::to_string(i + 1) + "]=" +
                    std::to_string(blocks.pi4[i]) + " but element " +
                    std::to_string(by_value[i].first) + " sits at position " +
                    std::to_string(by_value[i].second));
    }
  }

  if (!blocks.pi2.empty()) blocks.beta = blocks.pi2.back();
  blocks.gamma = static_cast<int>(
      std::find(sequence.begin(), sequence.end(), n_star) - sequence.begin() +
      1);
  return blocks;
}

BlockDecomposition DecomposeBlocks(const SelfInvertingPermutation& sip) {
  return DecomposeBlocks(sip.elements());
}

}  // namespace wrpg
