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

#ifndef WRPG_WATERMARK_H_
#define WRPG_WATERMARK_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace wrpg {

// An integer watermark w together with its bit-length n, so that
// 2^(n-1) <= w <= 2^n - 1. Bits are numbered b_1 (MSB) ... b_n (LSB).
class Watermark {
 public:
  // Permutations have 2n+1 <= 125 elements, which keeps every node index
  // inside a byte.
  static constexpr int kMaxBits = 62;

  // Throws Error(kDomain) when value < 2 or value needs more than kMaxBits.
  explicit Watermark(std::uint64_t value);

  // Parses a binary string such as "11011". Throws Error(kDomain) on a
  // leading zero, a non-binary digit, or fewer than two digits.
  static Watermark FromBinary(std::string_view digits);

  std::uint64_t value() const { return value_; }
  int bits() const { return bits_; }

  // 1-based, b_1 is the most significant bit.
  int bit(int j) const;

  std::string ToBinary() const;

  friend bool operator==(const Watermark&, const Watermark&) = default;
  friend auto operator<=>(const Watermark& a, const Watermark& b) {
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_;
  int bits_;
};

// Bit-length of value (number of binary digits). BitLength(0) == 0.
int BitLength(std::uint64_t value);

// First and last member of R_n = [2^(n-1), 2^n - 1].
std::uint64_t RangeBegin(int bits);
std::uint64_t RangeEnd(int bits);

// Case split on the internal block b_2 ... b_{n-1}:
//   kCase1: at least two zeros.
//   kCase2: exactly one zero, w = 1 1^ell 0 1^r b_n.
//   kCase3: no zeros.
enum class ShapeCase { kCase1 = 1, kCase2 = 2, kCase3 = 3 };

struct WatermarkShape {
  ShapeCase shape_case = ShapeCase::kCase1;
  int ell = 0;       // Case2 only.
  int r = 0;         // Case2 only.
  int last_bit = 0;  // Case2 and Case3.

  friend bool operator==(const WatermarkShape&,
                         const WatermarkShape&) = default;
};

WatermarkShape BitShape(const Watermark& w);

std::string_view ShapeCaseName(ShapeCase c);

}  // namespace wrpg

#endif  // WRPG_WATERMARK_H_
