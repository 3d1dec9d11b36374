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

#include "wrpg/watermark.h"

#include <bit>
#include <string>

#include "wrpg/error.h"

namespace wrpg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kDomain:
      return "DomainError";
    case ErrorCode::kNotAWatermark:
      return "NotAWatermark";
    case ErrorCode::kTemplateViolation:
      return "TemplateViolation";
    case ErrorCode::kFalseIncorrectGraph:
      return "FalseIncorrectGraph";
    case ErrorCode::kOutOfTheoremRange:
      return "OutOfTheoremRange";
    case ErrorCode::kResourceBound:
      return "ResourceBound";
    case ErrorCode::kUnsupportedAttack:
      return "UnsupportedAttack";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kInternal:
      return "InternalError";
  }
  return "Unknown";
}

int BitLength(std::uint64_t value) { return std::bit_width(value); }

std::uint64_t RangeBegin(int bits) { return std::uint64_t{1} << (bits - 1); }

std::uint64_t RangeEnd(int bits) {
  return (std::uint64_t{1} << bits) - 1;
}

Watermark::Watermark(std::uint64_t value)
    : value_(value), bits_(BitLength(value)) {
  if (value < 2) {
    throw Error(ErrorCode::kDomain,
                "watermark must be >= 2, got " + std::to_string(value));
  }
  if (bits_ > kMaxBits) {
    throw Error(ErrorCode::kDomain, "watermark exceeds " +
                                        std::to_string(kMaxBits) + " bits");
  }
}

Watermark Watermark::FromBinary(std::string_view digits) {
  if (digits.size() < 2 || digits.size() > kMaxBits || digits.front() != '1') {
    throw Error(ErrorCode::kDomain,
                "not a watermark bit string: '" + std::string(digits) + "'");
  }
  std::uint64_t value = 0;
  for (char c : digits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kDomain,
                  "not a watermark bit string: '" + std::string(digits) + "'");
    }
    value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Watermark(value);
}

int Watermark::bit(int j) const {
  if (j < 1 || j > bits_) {
    throw Error(ErrorCode::kInvalidArgument,
                "bit index " + std::to_string(j) + " out of range");
  }
  return static_cast<int>((value_ >> (bits_ - j)) & 1U);
}

std::string Watermark::ToBinary() const {
  std::string out(bits_, '0');
  for (int j = 1; j <= bits_; ++j) {
    if (bit(j) == 1) out[j - 1] = '1';
  }
  return out;
}

WatermarkShape BitShape(const Watermark& w) {
  const int n = w.bits();
  int zeros = 0;
  int zero_at = 0;
  for (int j = 2; j <= n - 1; ++j) {
    if (w.bit(j) == 0) {
      ++zeros;
      zero_at = j;
    }
  }
  WatermarkShape shape;
  if (zeros >= 2) {
    shape.shape_case = ShapeCase::kCase1;
    return shape;
  }
  shape.last_bit = w.bit(n);
  if (zeros == 1) {
    shape.shape_case = ShapeCase::kCase2;
    shape.ell = zero_at - 2;
    shape.r = n - 1 - zero_at;
  } else {
    shape.shape_case = ShapeCase::kCase3;
  }
  return shape;
}

std::string_view ShapeCaseName(ShapeCase c) {
  switch (c) {
    case ShapeCase::kCase1:
      return "Case1";
    case ShapeCase::kCase2:
      return "Case2";
    case ShapeCase::kCase3:
      return "Case3";
  }
  return "Unknown";
}

}  // namespace wrpg
