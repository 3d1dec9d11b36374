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

#include "wrpg/rpg_codec.h"

#include <string>
#include <utility>
#include <vector>

#include "wrpg/error.h"

namespace wrpg {
namespace {

[[noreturn]] void FalseIncorrect(const std::string& check,
                                 const std::string& message) {
  throw Error(ErrorCode::kFalseIncorrectGraph,
              "false-incorrect graph (" + check + "): " + message, check);
}

}  // namespace

ReduciblePermutationGraph::ReduciblePermutationGraph(BackEdgeMap back_edges)
    : back_edges_(std::move(back_edges)) {
  if (back_edges_.size() < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph needs at least one interior node");
  }
  for (int i = 1; i <= n_star(); ++i) {
    const int m = back_edges_.target(i);
    if (m < 0 || m > header()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "back edge of u" + std::to_string(i) + " targets node " +
                      std::to_string(m) + " outside 0.." +
                      std::to_string(header()));
    }
  }
}

std::vector<int> ReduciblePermutationGraph::Successors(int node) const {
  if (node == footer()) return {};
  if (node == header()) return {n_star()};
  return {node - 1, back_edges_.target(node)};
}

std::string NodeLabel(const ReduciblePermutationGraph& g, int node) {
  if (node == g.header()) return "s";
  if (node == g.footer()) return "t";
  return "u" + std::to_string(node);
}

BackEdgeMap DmaxMap(std::span<const int> permutation) {
  const int n_star = static_cast<int>(permutation.size());
  std::vector<int> targets(n_star, 0);
  // Decreasing stack of the elements seen so far that are not yet shadowed
  // by a larger element to their right.
  std::vector<int> stack;
  stack.reserve(n_star);
  for (int v : permutation) {
    while (!stack.empty() && stack.back() < v) stack.pop_back();
    targets[v - 1] = stack.empty() ? n_star + 1 : stack.back();
    stack.push_back(v);
  }
  return BackEdgeMap(std::move(targets));
}

ReduciblePermutationGraph EncodeSipToRpg(const SelfInvertingPermutation& sip) {
  return ReduciblePermutationGraph(DmaxMap(sip.elements()));
}

std::optional<std::vector<int>> ReconstructSequence(
    const BackEdgeMap& back_edges) {
  const int n_star = back_edges.size();
  const int root = n_star + 1;
  std::vector<std::vector<int>> children(n_star + 2);
  for (int i = 1; i <= n_star; ++i) {
    const int parent = back_edges.target(i);
    if (parent <= i || parent > root) return std::nullopt;
    children[parent].push_back(i);  // Ascending by construction.
  }

  std::vector<int> sequence;
  sequence.reserve(n_star);
  std::vector<std::pair<int, std::size_t>> stack = {{root, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next == children[node].size()) {
      stack.pop_back();
      continue;
    }
    const int child = children[node][next++];
    sequence.push_back(child);
    stack.emplace_back(child, 0);
  }
  return sequence;
}

SelfInvertingPermutation DecodeRpgToSip(const ReduciblePermutationGraph& g) {
  const auto sequence = ReconstructSequence(g.back_edges());
  if (!sequence) {
    FalseIncorrect("back_edge_order",
                   "some back edge does not target a larger node");
  }
  if (!(DmaxMap(*sequence) == g.back_edges())) {
    FalseIncorrect("dmax_consistent",
                   "no permutation has these back edges");
  }
  if (sequence->size() % 2 == 0) {
    FalseIncorrect("range_odd_length", "n* is even");
  }
  if (!IsInvolution(*sequence)) {
    FalseIncorrect("involution", "decoded permutation is not an involution");
  }
  if (CountFixedPoints(*sequence) != 1) {
    FalseIncorrect("single_fixed_point",
                   "decoded permutation has " +
                       std::to_string(CountFixedPoints(*sequence)) +
                       " fixed points");
  }
  return SelfInvertingPermutation::FromSequence(*sequence);
}

int GraphDistance(const ReduciblePermutationGraph& a,
                  const ReduciblePermutationGraph& b) {
  if (a.n_star() != b.n_star()) {
    throw Error(ErrorCode::kDomain,
                "cannot compare graphs with n*=" + std::to_string(a.n_star()) +
                    " and n*=" + std::to_string(b.n_star()));
  }
  const auto ta = a.back_edges().targets();
  const auto tb = b.back_edges().targets();
  int distance = 0;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i] != tb[i]) ++distance;
  }
  return distance;
}

std::vector<int> ImmediateDominators(const ReduciblePermutationGraph& g) {
  // Cooper, Harvey and Kennedy's iterative scheme over reverse postorder.
  const int node_count = g.node_count();
  const int root = g.header();

  std::vector<int> postorder;
  std::vector<int> post_number(node_count, -1);
  {
    std::vector<bool> visited(node_count, false);
    std::vector<std::pair<int, std::size_t>> stack = {{root, 0}};
    std::vector<std::vector<int>> successors(node_count);
    for (int v = 0; v < node_count; ++v) successors[v] = g.Successors(v);
    visited[root] = true;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == successors[node].size()) {
        post_number[node] = static_cast<int>(postorder.size());
        postorder.push_back(node);
        stack.pop_back();
        continue;
      }
      const int succ = successors[node][next++];
      if (!visited[succ]) {
        visited[succ] = true;
        stack.emplace_back(succ, 0);
      }
    }
  }

  std::vector<std::vector<int>> predecessors(node_count);
  for (int v = 0; v < node_count; ++v) {
    for (int succ : g.Successors(v)) predecessors[succ].push_back(v);
  }

  std::vector<int> idom(node_count, -1);
  idom[root] = root;
  auto intersect = [&](int a, int b) {
    while (a != b) {
      while (post_number[a] < post_number[b]) a = idom[a];
      while (post_number[b] < post_number[a]) b = idom[b];
    }
    return a;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
      const int node = *it;
      if (node == root) continue;
      int new_idom = -1;
      for (int p : predecessors[node]) {
        if (idom[p] == -1) continue;
        new_idom = new_idom == -1 ? p : intersect(p, new_idom);
      }
      if (new_idom != idom[node]) {
        idom[node] = new_idom;
        changed = true;
      }
    }
  }
  return idom;
}

ReducibilityReport CheckReducibility(const ReduciblePermutationGraph& g) {
  const std::vector<int> idom = ImmediateDominators(g);
  auto dominates = [&](int a, int b) {
    while (true) {
      if (a == b) return true;
      if (idom[b] == b || idom[b] == -1) return false;
      b = idom[b];
    }
  };
  ReducibilityReport report;
  for (int i = 1; i <= g.n_star(); ++i) {
    const int m = g.back_edges().target(i);
    if (!dominates(m, i)) {
      report.reducible = false;
      report.offending_edge = {i, m};
      break;
    }
  }
  return report;
}

}  // namespace wrpg
