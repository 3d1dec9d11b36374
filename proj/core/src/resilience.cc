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

#include "wrpg/resilience.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "wrpg/error.h"
#include "wrpg/integrity.h"
#include "wrpg/rpg_codec.h"
#include "wrpg/sip_codec.h"

namespace wrpg {
namespace {

// Hard ceiling even with cap_override: the table holds 2^(n-1) * (2n+1)
// bytes.
constexpr int kAbsoluteBitLimit = 24;

void RequireTheoremRange(int bits) {
  if (bits < kTheoremMinBits) {
    throw Error(ErrorCode::kOutOfTheoremRange,
                "closed-form analysis needs n >= 4, got n=" +
                    std::to_string(bits));
  }
}

std::string Ones(int count) { return std::string(count, '1'); }

// Runs fn(begin, end) over [0, count) split into contiguous chunks.
void ParallelFor(std::size_t count, int threads,
                 const std::function<void(std::size_t, std::size_t)>& fn) {
  std::size_t workers = threads > 0
                            ? static_cast<std::size_t>(threads)
                            : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, count / 64));
  if (workers <= 1) {
    fn(0, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    pool.emplace_back(fn, begin, std::min(count, begin + chunk));
  }
}

// The case formula without the n >= 4 guard.
int CaseFormula(const Watermark& w) {
  const WatermarkShape shape = BitShape(w);
  switch (shape.shape_case) {
    case ShapeCase::kCase1:
      return 3;
    case ShapeCase::kCase2:
      if (shape.last_bit == 1) return 4 + std::min(shape.ell, shape.r);
      if (shape.r > 0) return 4 + std::min(shape.ell, shape.r - 1);
      return 4;
    case ShapeCase::kCase3:
      return 4;
  }
  throw Error(ErrorCode::kInternal, "unhandled shape case");
}

}  // namespace

int MinVmClosedForm(const Watermark& w) {
  RequireTheoremRange(w.bits());
  return CaseFormula(w);
}

RangeTable::RangeTable(int bits, const OracleOptions& options)
    : bits_(bits), threads_(options.threads) {
  if (bits < 2) {
    throw Error(ErrorCode::kDomain,
                "watermark ranges start at n=2, got n=" + std::to_string(bits));
  }
  if (bits > options.bit_cap && !options.cap_override) {
    throw Error(ErrorCode::kResourceBound,
                "n=" + std::to_string(bits) + " exceeds the enumeration cap " +
                    std::to_string(options.bit_cap) +
                    "; pass an override to proceed");
  }
  if (bits > kAbsoluteBitLimit) {
    throw Error(ErrorCode::kResourceBound,
                "n=" + std::to_string(bits) + " exceeds the hard limit " +
                    std::to_string(kAbsoluteBitLimit));
  }
  const std::size_t stride = static_cast<std::size_t>(n_star());
  targets_.resize(size() * stride);
  ParallelFor(size(), threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Watermark w(first() + idx);
      const BackEdgeMap map = DmaxMap(EncodeWatermarkToSip(w).sip.elements());
      std::copy(map.targets().begin(), map.targets().end(),
                targets_.begin() + static_cast<std::ptrdiff_t>(idx * stride));
    }
  });
}

std::span<const std::uint8_t> RangeTable::Targets(std::uint64_t w) const {
  if (w < first() || w > last()) {
    throw Error(ErrorCode::kDomain, "w=" + std::to_string(w) +
                                        " is not in R_" +
                                        std::to_string(bits_));
  }
  const std::size_t stride = static_cast<std::size_t>(n_star());
  return std::span<const std::uint8_t>(targets_).subspan((w - first()) * stride,
                                                         stride);
}

int RangeTable::Distance(std::uint64_t a, std::uint64_t b) const {
  const auto ta = Targets(a);
  const auto tb = Targets(b);
  int distance = 0;
  for (std::size_t i = 0; i < ta.size(); ++i) distance += ta[i] != tb[i];
  return distance;
}

OracleResult RangeTable::Oracle(std::uint64_t w) const {
  const auto tw = Targets(w);
  const std::size_t stride = tw.size();
  OracleResult result;
  result.minvm = std::numeric_limits<int>::max();
  for (std::size_t idx = 0; idx < size(); ++idx) {
    const std::uint64_t v = first() + idx;
    if (v == w) continue;
    const std::uint8_t* tv = targets_.data() + idx * stride;
    int distance = 0;
    for (std::size_t i = 0; i < stride; ++i) distance += tw[i] != tv[i];
    if (distance < result.minvm) {
      result.minvm = distance;
      result.nearest.clear();
    }
    if (distance == result.minvm) result.nearest.push_back(v);
  }
  if (result.nearest.empty()) {
    throw Error(ErrorCode::kDomain,
                "R_" + std::to_string(bits_) + " has no second watermark");
  }
  return result;
}

std::vector<OracleResult> RangeTable::OracleAll() const {
  std::vector<OracleResult> results(size());
  ParallelFor(size(), threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      results[idx] = Oracle(first() + idx);
    }
  });
  return results;
}

OracleResult MinVmOracle(const Watermark& w, const OracleOptions& options) {
  return RangeTable(w.bits(), options).Oracle(w.value());
}

std::string ProofNeighbor::Tag() const {
  switch (rule) {
    case NeighborRule::kSwap:
      return "swap";
    case NeighborRule::kMoveOutFirst:
      return "move-out-pi1[i=" + std::to_string(moved) + "]";
    case NeighborRule::kMoveOutSecond:
      return "move-out-pi2[j=" + std::to_string(moved) + "]";
  }
  return "unknown";
}

std::vector<ProofNeighbor> ProofNeighbors(const Watermark& w) {
  const int n = w.bits();
  RequireTheoremRange(n);
  const WatermarkShape shape = BitShape(w);
  const int l = shape.ell;
  const int r = shape.r;

  std::vector<ProofNeighbor> out;
  auto add = [&](const std::string& digits, int cost, NeighborRule rule,
                 int moved) {
    out.push_back({Watermark::FromBinary(digits), cost, rule, moved});
  };

  switch (shape.shape_case) {
    case ShapeCase::kCase1: {
      // Swapping max and max-1 also swaps their mirrored positions.
      const SelfInvertingPermutation swapped =
          SwapConjugate(EncodeWatermarkToSip(w).sip, 2 * n + 1, 2 * n);
      try {
        out.push_back(
            {DecodeSipToWatermark(swapped), 3, NeighborRule::kSwap, 0});
      } catch (const Error& e) {
        throw Error(ErrorCode::kInternal,
                    "swap witness for w=" + std::to_string(w.value()) +
                        " is not a watermark: " + e.what());
      }
      break;
    }
    case ShapeCase::kCase2:
      if (shape.last_bit == 0 && r > 0) {
        out.push_back({Watermark(w.value() | 1U), 4 + l, NeighborRule::kSwap, 0});
        for (int j = 1; j <= r; ++j) {
          add("1" + Ones(l + j) + "0" + Ones(r - j) + "0", 3 + r,
              NeighborRule::kMoveOutSecond, j);
        }
        add(Ones(n - 1) + "0", n + 1, NeighborRule::kMoveOutSecond, r + 1);
        add(Ones(n), 4 + r, NeighborRule::kMoveOutSecond, r + 2);
        for (int i = 1; i <= l; ++i) {
          add("1" + Ones(l - i) + "0" + Ones(r + i) + "0", 3 + i + r,
              NeighborRule::kMoveOutFirst, i);
        }
      } else if (shape.last_bit == 0) {
        add("1" + Ones(l - 1) + "010", 4, NeighborRule::kMoveOutFirst, 1);
      } else {
        out.push_back({Watermark(w.value() - 1), 4 + l, NeighborRule::kSwap, 0});
        for (int j = 1; j <= r; ++j) {
          add("1" + Ones(l + j) + "0" + Ones(r - j) + "1", 4 + r,
              NeighborRule::kMoveOutSecond, j);
        }
        add(Ones(n - 1) + "0", 4 + r, NeighborRule::kMoveOutSecond, r + 1);
        add(Ones(n), n + 1, NeighborRule::kMoveOutSecond, r + 2);
        for (int i = 1; i <= l; ++i) {
          add("1" + Ones(l - i) + "0" + Ones(r + i) + "1", 4 + i + r,
              NeighborRule::kMoveOutFirst, i);
        }
      }
      break;
    case ShapeCase::kCase3:
      if (shape.last_bit == 0) {
        add("1" + Ones(n - 3) + "01", 4, NeighborRule::kMoveOutFirst, 1);
      } else {
        add("1" + Ones(n - 3) + "00", 4, NeighborRule::kMoveOutFirst, 2);
      }
      break;
  }
  return out;
}

Watermark StrongWatermarkOf(int bits) {
  RequireTheoremRange(bits);
  if (bits > Watermark::kMaxBits) {
    throw Error(ErrorCode::kDomain, "n=" + std::to_string(bits) +
                                        " exceeds the watermark width");
  }
  if (bits % 2 == 1) {
    const int l = (bits - 3) / 2;
    return Watermark::FromBinary("1" + Ones(l) + "0" + Ones(l) + "1");
  }
  const int l = (bits - 4) / 2;
  return Watermark::FromBinary("1" + Ones(l) + "0" + Ones(l + 1) + "1");
}

std::string_view StrengthName(Strength s) {
  switch (s) {
    case Strength::kWeak:
      return "Weak";
    case Strength::kStrong:
      return "Strong";
    case Strength::kOrdinary:
      return "Ordinary";
  }
  return "Unknown";
}

Strength ClassifyStrength(const Watermark& w) {
  if (MinVmClosedForm(w) == 3) return Strength::kWeak;
  if (w == StrongWatermarkOf(w.bits())) return Strength::kStrong;
  return Strength::kOrdinary;
}

ResilienceReport Analyze(const Watermark& w, const OracleOptions& options) {
  const OracleResult oracle = MinVmOracle(w, options);
  ResilienceReport report{w, BitShape(w), std::nullopt, oracle.minvm,
                          oracle.nearest, std::nullopt, false};
  if (w.bits() >= kTheoremMinBits) {
    report.minvm_closed = MinVmClosedForm(w);
    report.strength = ClassifyStrength(w);
    report.agreement = *report.minvm_closed == oracle.minvm;
  }
  return report;
}

namespace {

// extend_formula fills minvm_closed and agree below n = 4 as well.
std::vector<SurveyRow> RowsFor(const RangeTable& table,
                               const std::vector<OracleResult>& results,
                               bool extend_formula = false) {
  std::vector<SurveyRow> rows;
  rows.reserve(results.size());
  for (std::size_t idx = 0; idx < results.size(); ++idx) {
    const Watermark w(table.first() + idx);
    SurveyRow row;
    row.n = table.bits();
    row.w = w.value();
    row.shape = BitShape(w);
    row.minvm_oracle = results[idx].minvm;
    row.nearest_count = static_cast<int>(results[idx].nearest.size());
    if (table.bits() >= kTheoremMinBits) {
      row.minvm_closed = MinVmClosedForm(w);
      row.agree = *row.minvm_closed == row.minvm_oracle;
      row.strength = ClassifyStrength(w);
    } else if (extend_formula) {
      row.minvm_closed = CaseFormula(w);
      row.agree = *row.minvm_closed == row.minvm_oracle;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<SurveyRow> Survey(int bits, const OracleOptions& options) {
  const RangeTable table(bits, options);
  return RowsFor(table, table.OracleAll());
}

bool VerificationReport::ok() const {
  return mismatches.empty() &&
         std::all_of(ranges.begin(), ranges.end(), [](const RangeSummary& s) {
           return !s.in_theorem_range || (s.strong_selected && s.separation);
         });
}

VerificationReport VerifyTheorem(int n_min, int n_max,
                                 const VerifyOptions& options) {
  if (!options.below_theorem_range || n_min < 2) RequireTheoremRange(n_min);
  if (n_max < n_min) {
    throw Error(ErrorCode::kInvalidArgument,
                "empty range n=" + std::to_string(n_min) + ".." +
                    std::to_string(n_max));
  }

  VerificationReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) {
    const RangeTable table(n, options.oracle);
    const std::vector<OracleResult> results = table.OracleAll();
    const std::vector<SurveyRow> rows = RowsFor(table, results, true);

    RangeSummary summary;
    summary.n = n;
    summary.in_theorem_range = n >= kTheoremMinBits;
    summary.min_pair_distance = std::numeric_limits<int>::max();
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
      const SurveyRow& row = rows[idx];
      const Watermark w(row.w);
      if (row.minvm_oracle > *row.minvm_closed) {
        throw Error(ErrorCode::kInternal,
                    "oracle minVM " + std::to_string(row.minvm_oracle) +
                        " exceeds closed form " +
                        std::to_string(*row.minvm_closed) + " for w=" +
                        std::to_string(row.w));
      }
      const std::vector<ProofNeighbor> witnesses =
          summary.in_theorem_range ? ProofNeighbors(w)
                                   : std::vector<ProofNeighbor>{};
      for (const ProofNeighbor& witness : witnesses) {
        const std::uint64_t v = witness.neighbor.value();
        if (witness.neighbor.bits() != n || v == row.w) {
          throw Error(ErrorCode::kInternal,
                      "witness " + witness.Tag() + " of w=" +
                          std::to_string(row.w) + " leaves R_n");
        }
        const int measured = table.Distance(row.w, v);
        if (measured != witness.predicted_cost) {
          throw Error(ErrorCode::kInternal,
                      "witness " + witness.Tag() + " of w=" +
                          std::to_string(row.w) + " -> " + std::to_string(v) +
                          " predicted " +
                          std::to_string(witness.predicted_cost) +
                          " but measured " + std::to_string(measured));
        }
        ++summary.witnesses_checked;
      }
      if (!*row.agree) report.mismatches.push_back(row);
      summary.max_minvm = std::max(summary.max_minvm, row.minvm_oracle);
      summary.min_pair_distance =
          std::min(summary.min_pair_distance, row.minvm_oracle);
    }

    summary.separation = summary.min_pair_distance == 3;
    int fewest = std::numeric_limits<int>::max();
    for (const SurveyRow& row : rows) {
      if (row.minvm_oracle == summary.min_pair_distance &&
          row.shape.shape_case != ShapeCase::kCase1) {
        summary.separation = false;
      }
      if (row.minvm_oracle == summary.max_minvm) {
        summary.argmax.push_back(row.w);
        fewest = std::min(fewest, row.nearest_count);
      }
    }
    for (const SurveyRow& row : rows) {
      if (row.minvm_oracle == summary.max_minvm && row.nearest_count == fewest) {
        summary.argmax_fewest_nearest.push_back(row.w);
      }
    }
    if (!summary.in_theorem_range) {
      summary.separation = false;
      report.rows.insert(report.rows.end(), rows.begin(), rows.end());
      report.ranges.push_back(std::move(summary));
      continue;
    }
    summary.strong = StrongWatermarkOf(n).value();
    summary.strong_nearest_count =
        rows[summary.strong - table.first()].nearest_count;
    if (n % 2 == 1) {
      summary.strong_selected =
          summary.argmax == std::vector<std::uint64_t>{summary.strong};
    } else {
      summary.strong_selected =
          std::find(summary.argmax_fewest_nearest.begin(),
                    summary.argmax_fewest_nearest.end(),
                    summary.strong) != summary.argmax_fewest_nearest.end();
    }

    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    report.ranges.push_back(std::move(summary));
  }
  return report;
}

}  // namespace wrpg
