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

// Resilience of watermark graphs against back-edge retargeting.
//
// minVM(w) is the least number of back edges that must be retargeted to turn
// the graph of w into the graph of another watermark w' of the same
// bit-length. This header offers three views of it:
//
//   * MinVmClosedForm: the case formula on the bit shape (n >= 4).
//   * MinVmOracle / RangeTable: exhaustive search over R_n.
//   * ProofNeighbors: explicit w' with their predicted retarget counts,
//     i.e. constructive upper bounds.
//
// VerifyTheorem cross-checks all three over a range of bit-lengths.

#ifndef WRPG_RESILIENCE_H_
#define WRPG_RESILIENCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrpg/watermark.h"

namespace wrpg {

inline constexpr int kTheoremMinBits = 4;
inline constexpr int kDefaultBitCap = 14;

// Throws Error(kOutOfTheoremRange) for n < 4.
int MinVmClosedForm(const Watermark& w);

struct OracleOptions {
  int bit_cap = kDefaultBitCap;
  bool cap_override = false;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
};

struct OracleResult {
  int minvm = 0;
  std::vector<std::uint64_t> nearest;  // Ascending.

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

// Back-edge maps of every watermark in R_n, packed one byte per target.
class RangeTable {
 public:
  // Throws Error(kDomain) for bits < 2 and Error(kResourceBound) for
  // bits > options.bit_cap unless options.cap_override is set.
  explicit RangeTable(int bits, const OracleOptions& options = {});

  int bits() const { return bits_; }
  int n_star() const { return 2 * bits_ + 1; }
  std::uint64_t first() const { return RangeBegin(bits_); }
  std::uint64_t last() const { return RangeEnd(bits_); }
  std::size_t size() const { return static_cast<std::size_t>(last() - first() + 1); }

  std::span<const std::uint8_t> Targets(std::uint64_t w) const;
  int Distance(std::uint64_t a, std::uint64_t b) const;

  OracleResult Oracle(std::uint64_t w) const;

  // Oracle for every member of R_n, in ascending w. Work is split across
  // threads; the result does not depend on the thread count.
  std::vector<OracleResult> OracleAll() const;

 private:
  int bits_;
  int threads_;
  std::vector<std::uint8_t> targets_;
};

OracleResult MinVmOracle(const Watermark& w, const OracleOptions& options = {});

enum class NeighborRule { kSwap, kMoveOutFirst, kMoveOutSecond };

// A watermark reachable by one of the explicit constructions, with the number
// of retargeted back edges the construction predicts.
struct ProofNeighbor {
  Watermark neighbor;
  int predicted_cost;
  NeighborRule rule;
  int moved = 0;  // i for kMoveOutFirst, j for kMoveOutSecond.

  std::string Tag() const;
};

// Throws Error(kOutOfTheoremRange) for n < 4.
std::vector<ProofNeighbor> ProofNeighbors(const Watermark& w);

// 1 1^l 0 1^l 1 for odd n, 1 1^l 0 1^(l+1) 1 for even n. Throws
// Error(kOutOfTheoremRange) for n < 4.
Watermark StrongWatermarkOf(int bits);

enum class Strength { kWeak, kStrong, kOrdinary };

std::string_view StrengthName(Strength s);

// Throws Error(kOutOfTheoremRange) for n < 4.
Strength ClassifyStrength(const Watermark& w);

struct ResilienceReport {
  Watermark w;
  WatermarkShape shape;
  std::optional<int> minvm_closed;  // Absent below n = 4.
  int minvm_oracle = 0;
  std::vector<std::uint64_t> nearest;
  std::optional<Strength> strength;  // Absent below n = 4.
  // True when the closed form is defined and equals the oracle.
  bool agreement = false;
};

ResilienceReport Analyze(const Watermark& w, const OracleOptions& options = {});

// One row per watermark of R_n, ascending.
struct SurveyRow {
  int n = 0;
  std::uint64_t w = 0;
  WatermarkShape shape;
  std::optional<int> minvm_closed;
  int minvm_oracle = 0;
  std::optional<bool> agree;
  int nearest_count = 0;
  std::optional<Strength> strength;
};

std::vector<SurveyRow> Survey(int bits, const OracleOptions& options = {});

// Per-range facts gathered by VerifyTheorem.
struct RangeSummary {
  int n = 0;
  int max_minvm = 0;
  std::vector<std::uint64_t> argmax;
  // Argmax members with the fewest nearest watermarks.
  std::vector<std::uint64_t> argmax_fewest_nearest;
  std::uint64_t strong = 0;
  int strong_nearest_count = 0;
  // Odd n: argmax == {strong}. Even n: strong is in argmax_fewest_nearest.
  bool strong_selected = false;
  int min_pair_distance = 0;
  // min_pair_distance == 3 and every w attaining it is Case 1.
  bool separation = false;
  int witnesses_checked = 0;
  // False for n = 2, 3. Such ranges only contribute mismatches; strong,
  // strong_selected and separation are left unset.
  bool in_theorem_range = true;
};

struct VerificationReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<SurveyRow> rows;
  std::vector<SurveyRow> mismatches;  // Closed form != oracle.
  std::vector<RangeSummary> ranges;

  bool ok() const;
};

struct VerifyOptions {
  OracleOptions oracle;
  // Admit n = 2 and n = 3. The case formula is applied there as written,
  // without witnesses or strength; its known failures show up as mismatches.
  bool below_theorem_range = false;
};

// Sweeps every w with n_min <= n <= n_max. A witness whose measured distance
// differs from its predicted cost, or an oracle value above the closed form,
// throws Error(kInternal); closed-form/oracle disagreements are collected in
// mismatches. n_min < 4 throws Error(kOutOfTheoremRange) unless
// below_theorem_range is set, and n_min < 2 always does.
VerificationReport VerifyTheorem(int n_min, int n_max,
                                 const VerifyOptions& options = {});

}  // namespace wrpg

#endif  // WRPG_RESILIENCE_H_
