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

#include "wrpg/io.h"

#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wrpg/error.h"

namespace wrpg {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void ParseFailure(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool ParseInt(std::string_view s, int& value) {
  s = Trim(s);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

ordered_json RowJson(const SurveyRow& row) {
  ordered_json j;
  j["n"] = row.n;
  j["w"] = row.w;
  j["shape_case"] = ShapeCaseName(row.shape.shape_case);
  const bool case2 = row.shape.shape_case == ShapeCase::kCase2;
  j["ell"] = case2 ? ordered_json(row.shape.ell) : ordered_json(nullptr);
  j["r"] = case2 ? ordered_json(row.shape.r) : ordered_json(nullptr);
  j["b_n"] = row.w & 1U;
  j["minvm_closed"] = row.minvm_closed ? ordered_json(*row.minvm_closed)
                                       : ordered_json(nullptr);
  j["minvm_oracle"] = row.minvm_oracle;
  j["agree"] = row.agree ? ordered_json(*row.agree) : ordered_json(nullptr);
  j["nearest_count"] = row.nearest_count;
  j["strength"] = row.strength ? ordered_json(StrengthName(*row.strength))
                               : ordered_json(nullptr);
  return j;
}

ordered_json RangeJson(const RangeSummary& s) {
  ordered_json j;
  j["n"] = s.n;
  j["max_minvm"] = s.max_minvm;
  j["argmax"] = s.argmax;
  j["argmax_fewest_nearest"] = s.argmax_fewest_nearest;
  j["strong"] = s.strong;
  j["strong_nearest_count"] = s.strong_nearest_count;
  j["strong_selected"] = s.strong_selected;
  j["min_pair_distance"] = s.min_pair_distance;
  j["separation"] = s.separation;
  j["witnesses_checked"] = s.witnesses_checked;
  j["in_theorem_range"] = s.in_theorem_range;
  return j;
}

// One compact element per line, so reports diff cleanly.
void WriteJsonLines(std::ostream& out, const std::vector<ordered_json>& items,
                    const std::string& indent) {
  out << "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << indent << "  " << items[i].dump();
  }
  out << (items.empty() ? "]" : "\n" + indent + "]");
}

std::string JoinValues(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string SerializeGraph(const ReduciblePermutationGraph& g) {
  if (g.n_star() % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph files need n* = 2n+1, got n*=" +
                    std::to_string(g.n_star()));
  }
  std::string out = "{\"version\": " + std::to_string(kGraphFormatVersion) +
                    ", \"n\": " + std::to_string((g.n_star() - 1) / 2) +
                    ", \"nstar\": " + std::to_string(g.n_star()) +
                    ", \"back_edges\": [";
  for (int i = 1; i <= g.n_star(); ++i) {
    if (i > 1) out += ", ";
    out += std::to_string(g.back_edges().target(i));
  }
  out += "]}\n";
  return out;
}

ReduciblePermutationGraph ParseGraph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    ParseFailure(std::string("graph file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) ParseFailure("graph file must hold a JSON object");
  static const std::set<std::string> kFields = {"version", "n", "nstar",
                                                "back_edges"};
  for (const auto& [key, value] : doc.items()) {
    if (!kFields.contains(key)) ParseFailure("unknown field '" + key + "'");
  }
  for (const std::string& key : kFields) {
    if (!doc.contains(key)) ParseFailure("missing field '" + key + "'");
  }
  for (const char* key : {"version", "n", "nstar"}) {
    if (!doc[key].is_number_integer()) {
      ParseFailure(std::string("field '") + key + "' must be an integer");
    }
  }
  const auto version = doc["version"].get<std::int64_t>();
  if (version != kGraphFormatVersion) {
    ParseFailure("unsupported graph format version " +
                 std::to_string(version));
  }
  const auto n = doc["n"].get<std::int64_t>();
  const auto n_star = doc["nstar"].get<std::int64_t>();
  if (n < 1 || n > Watermark::kMaxBits) {
    ParseFailure("n=" + std::to_string(n) + " out of range");
  }
  if (n_star != 2 * n + 1) {
    ParseFailure("nstar=" + std::to_string(n_star) + " but 2n+1=" +
                 std::to_string(2 * n + 1));
  }
  const auto& edges = doc["back_edges"];
  if (!edges.is_array() || static_cast<std::int64_t>(edges.size()) != n_star) {
    ParseFailure("back_edges must be an array of nstar integers");
  }
  std::vector<int> targets;
  targets.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_number_integer()) ParseFailure("back_edges must hold integers");
    const auto target = e.get<std::int64_t>();
    if (target < 0 || target > n_star + 1) {
      ParseFailure("back edge target " + std::to_string(target) +
                   " outside 0.." + std::to_string(n_star + 1));
    }
    targets.push_back(static_cast<int>(target));
  }
  return ReduciblePermutationGraph(BackEdgeMap(std::move(targets)));
}

std::string ToDot(const ReduciblePermutationGraph& g) {
  std::ostringstream out;
  out << "digraph rpg {\n";
  for (int node = g.header(); node >= g.footer(); --node) {
    const std::string label = NodeLabel(g, node);
    out << "  " << label << " [label=\"" << label << "\"];\n";
  }
  for (int node = g.header(); node > g.footer(); --node) {
    out << "  " << NodeLabel(g, node) << " -> " << NodeLabel(g, node - 1)
        << " [style=solid];\n";
  }
  for (int i = g.n_star(); i >= 1; --i) {
    out << "  " << NodeLabel(g, i) << " -> "
        << NodeLabel(g, g.back_edges().target(i)) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string FormatPermutation(std::span<const int> elements) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(elements[i]);
  }
  return out;
}

std::vector<int> ParsePermutation(std::string_view text) {
  std::vector<int> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int value = 0;
    if (!ParseInt(token, value)) {
      ParseFailure("'" + token + "' is not an integer");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<EdgeEdit> ParseEdgeEdits(std::string_view text, int n_star) {
  std::vector<EdgeEdit> edits;
  if (Trim(text).empty()) return edits;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view pair = Trim(text.substr(start, comma - start));
    const std::size_t colon = pair.find(':');
    EdgeEdit edit;
    if (colon == std::string_view::npos ||
        !ParseInt(pair.substr(0, colon), edit.source)) {
      ParseFailure("edit '" + std::string(pair) + "' is not source:target");
    }
    const std::string_view target = Trim(pair.substr(colon + 1));
    if (target == "s") {
      edit.new_target = n_star + 1;
    } else if (target == "t") {
      edit.new_target = 0;
    } else if (!ParseInt(target, edit.new_target)) {
      ParseFailure("edit '" + std::string(pair) + "' has a bad target");
    }
    edits.push_back(edit);
    start = comma + 1;
  }
  return edits;
}

void WriteSurveyCsv(std::ostream& out, std::span<const SurveyRow> rows) {
  out << "n,w,shape_case,ell,r,b_n,minvm_closed,minvm_oracle,agree,"
         "nearest_count,strength\n";
  for (const SurveyRow& row : rows) {
    const bool case2 = row.shape.shape_case == ShapeCase::kCase2;
    out << row.n << ',' << row.w << ',' << ShapeCaseName(row.shape.shape_case)
        << ',' << (case2 ? std::to_string(row.shape.ell) : "") << ','
        << (case2 ? std::to_string(row.shape.r) : "") << ',' << (row.w & 1U)
        << ',' << (row.minvm_closed ? std::to_string(*row.minvm_closed) : "")
        << ',' << row.minvm_oracle << ','
        << (row.agree ? (*row.agree ? "true" : "false") : "") << ','
        << row.nearest_count << ','
        << (row.strength ? StrengthName(*row.strength) : "") << '\n';
  }
}

void WriteSurveyJson(std::ostream& out, std::span<const SurveyRow> rows) {
  std::vector<ordered_json> items;
  for (const SurveyRow& row : rows) items.push_back(RowJson(row));
  WriteJsonLines(out, items, "");
  out << '\n';
}

void WriteVerificationCsv(std::ostream& out, const VerificationReport& report) {
  WriteSurveyCsv(out, report.rows);
  for (const RangeSummary& s : report.ranges) {
    out << "# range n=" << s.n << " max_minvm=" << s.max_minvm
        << " argmax=" << JoinValues(s.argmax)
        << " argmax_fewest_nearest=" << JoinValues(s.argmax_fewest_nearest)
        << " strong=" << s.strong
        << " strong_selected=" << (s.strong_selected ? "true" : "false")
        << " min_pair_distance=" << s.min_pair_distance
        << " separation=" << (s.separation ? "true" : "false")
        << " witnesses=" << s.witnesses_checked
        << " in_theorem_range=" << (s.in_theorem_range ? "true" : "false")
        << '\n';
  }
  for (const SurveyRow& m : report.mismatches) {
    out << "# mismatch n=" << m.n << " w=" << m.w
        << " closed=" << *m.minvm_closed << " oracle=" << m.minvm_oracle
        << '\n';
  }
  out << "# result " << (report.ok() ? "ok" : "MISMATCH") << '\n';
}

void WriteVerificationJson(std::ostream& out, const VerificationReport& report) {
  std::vector<ordered_json> ranges;
  for (const RangeSummary& s : report.ranges) ranges.push_back(RangeJson(s));
  std::vector<ordered_json> mismatches;
  for (const SurveyRow& row : report.mismatches) {
    mismatches.push_back(RowJson(row));
  }
  std::vector<ordered_json> rows;
  for (const SurveyRow& row : report.rows) rows.push_back(RowJson(row));

  out << "{\n  \"n_min\": " << report.n_min << ",\n  \"n_max\": "
      << report.n_max << ",\n  \"ok\": " << (report.ok() ? "true" : "false")
      << ",\n  \"ranges\": ";
  WriteJsonLines(out, ranges, "  ");
  out << ",\n  \"mismatches\": ";
  WriteJsonLines(out, mismatches, "  ");
  out << ",\n  \"rows\": ";
  WriteJsonLines(out, rows, "  ");
  out << "\n}\n";
}

}  // namespace wrpg
