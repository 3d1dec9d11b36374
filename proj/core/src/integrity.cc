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

#include <algorithm>
#include <string>
#include <vector>

#include "wrpg/error.h"

namespace wrpg {

std::string_view CheckStatusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

EditOutcome ApplyEdgeEdits(const ReduciblePermutationGraph& g,
                           std::span<const EdgeEdit> edits) {
  BackEdgeMap targets = g.back_edges();
  for (const EdgeEdit& edit : edits) {
    if (edit.source < 1 || edit.source > g.n_star()) {
      throw Error(ErrorCode::kUnsupportedAttack,
                  "edit source " + std::to_string(edit.source) +
                      " is not an interior node 1.." +
                      std::to_string(g.n_star()));
    }
    if (edit.new_target < 0 || edit.new_target > g.header()) {
      throw Error(ErrorCode::kUnsupportedAttack,
                  "edit target " + std::to_string(edit.new_target) +
                      " is not a node 0.." + std::to_string(g.header()));
    }
    targets.set_target(edit.source, edit.new_target);
  }
  ReduciblePermutationGraph attacked(std::move(targets));
  const int effective = GraphDistance(g, attacked);
  return {std::move(attacked), static_cast<int>(edits.size()), effective};
}

std::vector<std::string> ValidityReport::failed_checks() const {
  std::vector<std::string> failed;
  for (const NamedCheck& c : checks) {
    if (c.status == CheckStatus::kFail) failed.push_back(c.name);
  }
  return failed;
}

const NamedCheck& ValidityReport::check(std::string_view name) const {
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const NamedCheck& c) { return c.name == name; });
  if (it == checks.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown check '" + std::string(name) + "'");
  }
  return *it;
}

ValidityReport ClassifyGraph(const ReduciblePermutationGraph& g) {
  ValidityReport report;
  for (std::string_view name : kCheckNames) {
    report.checks.push_back({std::string(name), CheckStatus::kSkipped, {}});
  }
  auto set = [&](std::string_view name, bool pass, std::string detail = {}) {
    for (NamedCheck& c : report.checks) {
      if (c.name == name) {
        c.status = pass ? CheckStatus::kPass : CheckStatus::kFail;
        if (!pass) c.detail = std::move(detail);
      }
    }
  };

  const BackEdgeMap& edges = g.back_edges();
  const int n_star = g.n_star();

  int misordered = 0;
  for (int i = 1; i <= n_star && misordered == 0; ++i) {
    if (edges.target(i) <= i) misordered = i;
  }
  set("back_edge_order", misordered == 0,
      "u" + std::to_string(misordered) + " -> " +
          NodeLabel(g, misordered == 0 ? 0 : edges.target(misordered)));

  const ReducibilityReport reducibility = CheckReducibility(g);
  if (reducibility.offending_edge) {
    const auto [source, target] = *reducibility.offending_edge;
    set("reducible", false,
        NodeLabel(g, target) + " does not dominate " + NodeLabel(g, source));
  } else {
    set("reducible", true);
  }

  set("range_odd_length", n_star % 2 == 1 && n_star >= 5,
      "n*=" + std::to_string(n_star) + " is not 2n+1 with n >= 2");

  const auto sequence = ReconstructSequence(edges);
  if (sequence) {
    const bool consistent = DmaxMap(*sequence) == edges;
    set("dmax_consistent", consistent,
        "no permutation produces these back edges");
    if (consistent) {
      const bool involution = IsInvolution(*sequence);
      set("involution", involution, "decoded permutation is not its own inverse");
      const int fixed = CountFixedPoints(*sequence);
      set("single_fixed_point", fixed == 1,
          std::to_string(fixed) + " fixed points");

      try {
        DecomposeBlocks(*sequence);
        set("block_template", true);
      } catch (const Error& e) {
        set("block_template", false, e.what());
      }

      // pi2 read leniently: whatever lies between the leading run of
      // n+1, n+2, ... and the element 1.
      const int n = (n_star - 1) / 2;
      int k = 0;
      while (k < n && (*sequence)[k] == n + k + 1) ++k;
      const auto one = std::find(sequence->begin(), sequence->end(), 1);
      const bool has_pi2 = k > 0 && one - sequence->begin() >= k;
      set("bitonic_pi2",
          has_pi2 && IsBitonic(std::span<const int>(sequence->begin() + k, one)),
          has_pi2 ? "pi2 is not bitonic" : "pi2 cannot be located");

      if (involution && fixed == 1 && n_star % 2 == 1) {
        try {
          const SelfInvertingPermutation sip =
              SelfInvertingPermutation::FromSequence(*sequence);
          const Watermark w = DecodeSipToWatermark(sip);
          if (EncodeSipToRpg(EncodeWatermarkToSip(w).sip) == g) {
            set("roundtrip", true);
            report.watermark = w;
          } else {
            set("roundtrip", false, "re-encoding differs from the input");
          }
        } catch (const Error& e) {
          set("roundtrip", false, e.what());
        }
      }
    }
  }

  if (std::any_of(report.checks.begin(), report.checks.end(),
                  [](const NamedCheck& c) {
                    return c.status != CheckStatus::kPass;
                  })) {
    report.watermark.reset();
  }
  return report;
}

SelfInvertingPermutation SwapConjugate(const SelfInvertingPermutation& sip,
                                       int x, int y) {
  const int n_star = sip.size();
  if (x == y || x < 1 || y < 1 || x > n_star || y > n_star) {
    throw Error(ErrorCode::kInvalidArgument,
                "swap needs two distinct elements in 1.." +
                    std::to_string(n_star));
  }
  auto tau = [&](int v) { return v == x ? y : (v == y ? x : v); };
  std::vector<int> conjugated(n_star);
  for (int position = 1; position <= n_star; ++position) {
    conjugated[tau(position) - 1] = tau(sip.at(position));
  }
  return SelfInvertingPermutation::FromSequence(std::move(conjugated));
}

}  // namespace wrpg
