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

#ifndef WRPG_ERROR_H_
#define WRPG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace wrpg {

enum class ErrorCode {
  kInvalidArgument,
  // Value outside the watermark domain (w < 2, mismatched graph sizes, ...).
  kDomain,
  kNotAWatermark,
  kTemplateViolation,
  kFalseIncorrectGraph,
  kOutOfTheoremRange,
  kResourceBound,
  kUnsupportedAttack,
  kParse,
  // A proven invariant failed at runtime. Always an implementation bug.
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string check = {})
      : std::runtime_error(message), code_(code), check_(std::move(check)) {}

  ErrorCode code() const { return code_; }

  // Name of the first failed check, for kFalseIncorrectGraph and
  // kTemplateViolation. Empty otherwise.
  const std::string& check() const { return check_; }

 private:
  ErrorCode code_;
  std::string check_;
};

}  // namespace wrpg

#endif  // WRPG_ERROR_H_
