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

// Edge-modification attacks and validation of (possibly tampered) graphs.

#ifndef WRPG_INTEGRITY_H_
#define WRPG_INTEGRITY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrpg/rpg_codec.h"
#include "wrpg/sip_codec.h"
#include "wrpg/watermark.h"

namespace wrpg {

// Retargets the back edge of u_source.
struct EdgeEdit {
  int source = 0;
  int new_target = 0;

  friend bool operator==(const EdgeEdit&, const EdgeEdit&) = default;
};

struct EditOutcome {
  ReduciblePermutationGraph graph;
  int applied = 0;    // Edits in the input list.
  int effective = 0;  // Elements whose final target differs from the input.
};

// Applies edits in order; a later edit on the same source wins. Legality of
// the result is not judged here. Throws Error(kUnsupportedAttack) when a
// source is not an interior node (the s/t out-edges and the spine are
// outside the attack model) or a target is not a node.
EditOutcome ApplyEdgeEdits(const ReduciblePermutationGraph& g,
                           std::span<const EdgeEdit> edits);

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view CheckStatusName(CheckStatus status);

struct NamedCheck {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::string detail;
};

// Check names, in evaluation order. The structural checks come first; the
// last six are the 4-Chain checks on the decoded permutation.
inline constexpr std::string_view kCheckNames[] = {
    "back_edge_order",  "reducible",      "dmax_consistent",
    "range_odd_length", "involution",     "single_fixed_point",
    "block_template",   "bitonic_pi2",    "roundtrip",
};

struct ValidityReport {
  std::vector<NamedCheck> checks;
  // Set iff the verdict is Valid.
  std::optional<Watermark> watermark;

  bool valid() const { return watermark.has_value(); }
  std::vector<std::string> failed_checks() const;
  const NamedCheck& check(std::string_view name) const;
};

// Never throws on graph content: every outcome is a report.
ValidityReport ClassifyGraph(const ReduciblePermutationGraph& g);

// tau . pi . tau for the transposition tau = (x y). Throws
// Error(kInvalidArgument) unless x != y and both lie in 1..n*.
SelfInvertingPermutation SwapConjugate(const SelfInvertingPermutation& sip,
                                       int x, int y);

}  // namespace wrpg

#endif  // WRPG_INTEGRITY_H_
