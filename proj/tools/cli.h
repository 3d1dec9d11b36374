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

#ifndef WRPG_TOOLS_CLI_H_
#define WRPG_TOOLS_CLI_H_

#include <string>
#include <vector>

namespace wrpg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitFalseIncorrect = 2,
  kExitInvalidInput = 3,
  kExitMismatch = 4,
};

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// args excludes the program name, e.g. {"encode", "12", "--show-sip"}.
// Files named by the arguments are written directly; everything meant for
// stdout/stderr is returned.
CommandOutcome Run(const std::vector<std::string>& args);

}  // namespace wrpg::cli

#endif  // WRPG_TOOLS_CLI_H_
