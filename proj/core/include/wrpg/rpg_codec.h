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

// Codec between self-inverting permutations and reducible permutation
// flow-graphs.
//
// Node u_i is identified with element i of the permutation. The header s is
// node n*+1 and the footer t is node 0, so the forward spine is simply
// i -> i-1 for i = n*+1 ... 1. Each u_i has one more out-edge, its back edge,
// to the nearest larger element on its left (or to s when there is none).

#ifndef WRPG_RPG_CODEC_H_
#define WRPG_RPG_CODEC_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wrpg/sip_codec.h"

namespace wrpg {

// Back-edge target per element, 1-indexed by element.
class BackEdgeMap {
 public:
  BackEdgeMap() = default;
  explicit BackEdgeMap(std::vector<int> targets)
      : targets_(std::move(targets)) {}

  int size() const { return static_cast<int>(targets_.size()); }
  int target(int element) const { return targets_[element - 1]; }
  void set_target(int element, int node) { targets_[element - 1] = node; }
  std::span<const int> targets() const { return targets_; }

  friend bool operator==(const BackEdgeMap&, const BackEdgeMap&) = default;

 private:
  std::vector<int> targets_;
};

class ReduciblePermutationGraph {
 public:
  // Accepts any target in the node space [0, n*+1], so tampered graphs can
  // be represented and then judged by CheckReducibility / ClassifyGraph.
  // Throws Error(kInvalidArgument) for n* < 1 or a target outside that range.
  explicit ReduciblePermutationGraph(BackEdgeMap back_edges);

  int n_star() const { return back_edges_.size(); }
  int header() const { return n_star() + 1; }
  static constexpr int footer() { return 0; }

  int node_count() const { return n_star() + 2; }
  int forward_edge_count() const { return n_star() + 1; }
  int back_edge_count() const { return n_star(); }

  const BackEdgeMap& back_edges() const { return back_edges_; }

  // Out-neighbours in edge order: forward successor first, then back edge.
  std::vector<int> Successors(int node) const;

  friend bool operator==(const ReduciblePermutationGraph&,
                         const ReduciblePermutationGraph&) = default;

 private:
  BackEdgeMap back_edges_;
};

// "s", "t" or "u<i>".
std::string NodeLabel(const ReduciblePermutationGraph& g, int node);

// Nearest greater element to the left, n*+1 when none. Defined for any
// permutation, not only SiPs.
BackEdgeMap DmaxMap(std::span<const int> permutation);

ReduciblePermutationGraph EncodeSipToRpg(const SelfInvertingPermutation& sip);

// Rebuilds the sequence whose DmaxMap is `back_edges`: the forest
// parent(i) = target(i) rooted at s, read in preorder with children in
// ascending order. Returns nullopt when some target(i) <= i or > n*+1, since
// no forest exists then. Otherwise DmaxMap(result) == back_edges: everything
// between a node and its child in preorder is an earlier, smaller sibling
// or a descendant of one.
std::optional<std::vector<int>> ReconstructSequence(
    const BackEdgeMap& back_edges);

// Throws Error(kFalseIncorrectGraph) whose check() names the first failure:
// back_edge_order, dmax_consistent, range_odd_length, involution or
// single_fixed_point.
SelfInvertingPermutation DecodeRpgToSip(const ReduciblePermutationGraph& g);

// Number of elements whose back-edge targets differ. Throws Error(kDomain)
// when the graphs have different n*.
int GraphDistance(const ReduciblePermutationGraph& a,
                  const ReduciblePermutationGraph& b);

struct ReducibilityReport {
  bool reducible = true;
  // First (source, target) back edge whose target does not dominate its
  // source, by ascending source.
  std::optional<std::pair<int, int>> offending_edge;
};

ReducibilityReport CheckReducibility(const ReduciblePermutationGraph& g);

// Immediate dominators from s over the full edge set; idom[s] == s.
std::vector<int> ImmediateDominators(const ReduciblePermutationGraph& g);

}  // namespace wrpg

#endif  // WRPG_RPG_CODEC_H_
