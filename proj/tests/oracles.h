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

// Slow, obviously-correct reference implementations used only by tests.
// None of these call into the library's graph code.

#ifndef WRPG_TESTS_ORACLES_H_
#define WRPG_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <vector>

namespace wrpg::testing {

// targets[v-1] = nearest element greater than v to the left of v's
// position, or n*+1. Quadratic left scan.
inline std::vector<int> NaiveDmax(const std::vector<int>& perm) {
  const int n_star = static_cast<int>(perm.size());
  std::vector<int> targets(n_star, n_star + 1);
  for (int p = 0; p < n_star; ++p) {
    for (int q = p - 1; q >= 0; --q) {
      if (perm[q] > perm[p]) {
        targets[perm[p] - 1] = perm[q];
        break;
      }
    }
  }
  return targets;
}

inline int NaiveDistance(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// Graph with s = n*+1, t = 0, spine i -> i-1 and back edge i -> targets[i-1].
// `dominator` dominates `node` iff node is unreachable from s once
// dominator is removed.
inline bool NaiveDominates(const std::vector<int>& targets, int dominator,
                           int node) {
  if (dominator == node) return true;
  const int n_star = static_cast<int>(targets.size());
  const int s = n_star + 1;
  if (dominator == s) return true;
  std::vector<bool> seen(n_star + 2, false);
  std::deque<int> queue = {s};
  seen[s] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    std::vector<int> next;
    if (v == s) next = {n_star};
    else if (v != 0) next = {v - 1, targets[v - 1]};
    for (int u : next) {
      if (u == dominator || seen[u]) continue;
      seen[u] = true;
      queue.push_back(u);
    }
  }
  return !seen[node];
}

// Every permutation of 1..n* whose NaiveDmax equals targets.
inline std::vector<std::vector<int>> PermutationsWithDmax(
    const std::vector<int>& targets) {
  std::vector<int> perm(targets.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> found;
  do {
    if (NaiveDmax(perm) == targets) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

// Evenly spaced members of [first, last], both ends included.
inline std::vector<std::uint64_t> EvenSample(std::uint64_t first,
                                             std::uint64_t last, int count) {
  std::vector<std::uint64_t> out;
  const std::uint64_t span = last - first;
  for (int i = 0; i < count; ++i) {
    out.push_back(first + span * static_cast<std::uint64_t>(i) /
                              static_cast<std::uint64_t>(count - 1));
  }
  return out;
}

}  // namespace wrpg::testing

#endif  // WRPG_TESTS_ORACLES_H_
