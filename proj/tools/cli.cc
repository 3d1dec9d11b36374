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

#include "cli.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wrpg/error.h"
#include "wrpg/integrity.h"
#include "wrpg/io.h"
#include "wrpg/resilience.h"
#include "wrpg/rpg_codec.h"
#include "wrpg/sip_codec.h"
#include "wrpg/watermark.h"

namespace wrpg::cli {
namespace {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFalseIncorrectGraph:
      return kExitFalseIncorrect;
    case ErrorCode::kInternal:
      return kExitInternal;
    default:
      return kExitInvalidInput;
  }
}

Watermark ParseWatermark(const std::string& text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kDomain,
                "'" + text + "' is not a positive integer watermark");
  }
  return Watermark(value);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// "-" means stdout.
void Emit(const std::string& path, const std::string& content,
          CommandOutcome& outcome) {
  if (path == "-") {
    outcome.out += content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kInvalidArgument,
                         "cannot write '" + path + "'");
  file << content;
}

struct Options {
  std::string watermark;
  std::string out_file;
  std::string dot_file;
  bool show_sip = false;
  std::string graph_file;
  std::string edits;
  int bits = 0;
  int bits_min = kTheoremMinBits;
  int bits_max = kTheoremMinBits;
  bool below_theorem_range = false;
  std::string format = "csv";
  OracleOptions oracle;
};

void Encode(const Options& o, CommandOutcome& outcome) {
  const Watermark w = ParseWatermark(o.watermark);
  const SipEncoding encoding = EncodeWatermarkToSip(w);
  const ReduciblePermutationGraph graph = EncodeSipToRpg(encoding.sip);
  if (o.show_sip) outcome.out += FormatPermutation(encoding.sip.elements()) + "\n";
  const std::string out_file = o.out_file.empty()
                                   ? "w" + std::to_string(w.value()) + ".json"
                                   : o.out_file;
  Emit(out_file, SerializeGraph(graph), outcome);
  if (!o.dot_file.empty()) Emit(o.dot_file, ToDot(graph), outcome);
}

void Decode(const Options& o, bool verbose, CommandOutcome& outcome) {
  const ReduciblePermutationGraph graph = ParseGraph(ReadFile(o.graph_file));
  const ValidityReport report = ClassifyGraph(graph);
  std::string text;
  if (verbose) {
    for (const NamedCheck& c : report.checks) {
      text += c.name + ": " + std::string(CheckStatusName(c.status));
      if (!c.detail.empty()) text += " (" + c.detail + ")";
      text += "\n";
    }
  }
  if (report.valid()) {
    text += "VALID w=" + std::to_string(report.watermark->value()) + "\n";
    outcome.exit_code = kExitOk;
  } else {
    text += "FALSE-INCORRECT\n";
    const std::vector<std::string> failed = report.failed_checks();
    text += "failed:";
    for (std::size_t i = 0; i < failed.size(); ++i) {
      text += (i == 0 ? " " : ",") + failed[i];
    }
    text += "\n";
    outcome.exit_code = kExitFalseIncorrect;
  }
  outcome.out += text;
}

void Attack(const Options& o, CommandOutcome& outcome) {
  const ReduciblePermutationGraph graph = ParseGraph(ReadFile(o.graph_file));
  const std::vector<EdgeEdit> edits = ParseEdgeEdits(o.edits, graph.n_star());
  const EditOutcome attacked = ApplyEdgeEdits(graph, edits);
  std::string out_file = o.out_file;
  if (out_file.empty()) {
    std::filesystem::path path(o.graph_file);
    path.replace_extension(".attacked.json");
    out_file = path.string();
  }
  Emit(out_file, SerializeGraph(attacked.graph), outcome);
  if (attacked.applied <= graph.n_star()) {
    outcome.out += "distance=" + std::to_string(attacked.effective) + "\n";
  }
}

void Analyze(const Options& o, CommandOutcome& outcome) {
  const Watermark w = ParseWatermark(o.watermark);
  const ResilienceReport report = wrpg::Analyze(w, o.oracle);
  std::ostringstream out;
  out << "w=" << w.value() << "\n";
  out << "n=" << w.bits() << "\n";
  out << "binary=" << w.ToBinary() << "\n";
  out << "shape=" << ShapeCaseName(report.shape.shape_case);
  if (report.shape.shape_case == ShapeCase::kCase2) {
    out << " ell=" << report.shape.ell << " r=" << report.shape.r;
  }
  out << " b_n=" << (w.value() & 1U) << "\n";
  out << "minvm_closed="
      << (report.minvm_closed ? std::to_string(*report.minvm_closed) : "n/a")
      << "\n";
  out << "minvm_oracle=" << report.minvm_oracle << "\n";
  out << "agree="
      << (report.minvm_closed ? (report.agreement ? "true" : "false") : "n/a")
      << "\n";
  out << "nearest=";
  for (std::size_t i = 0; i < report.nearest.size(); ++i) {
    out << (i == 0 ? "" : " ") << report.nearest[i];
  }
  out << "\n";
  out << "strength="
      << (report.strength ? std::string(StrengthName(*report.strength)) : "n/a")
      << "\n";
  if (w.bits() >= kTheoremMinBits) {
    for (const ProofNeighbor& p : ProofNeighbors(w)) {
      out << "witness=" << p.neighbor.value() << " cost=" << p.predicted_cost
          << " rule=" << p.Tag() << "\n";
    }
  }
  outcome.out += out.str();
}

void Survey(const Options& o, CommandOutcome& outcome) {
  const std::vector<SurveyRow> rows = wrpg::Survey(o.bits, o.oracle);
  std::ostringstream out;
  if (o.format == "json") {
    WriteSurveyJson(out, rows);
  } else {
    WriteSurveyCsv(out, rows);
  }
  Emit(o.out_file.empty() ? "-" : o.out_file, out.str(), outcome);
}

void Verify(const Options& o, CommandOutcome& outcome) {
  const VerificationReport report =
      VerifyTheorem(o.bits_min, o.bits_max, {o.oracle, o.below_theorem_range});
  std::ostringstream out;
  if (o.format == "json") {
    WriteVerificationJson(out, report);
  } else {
    WriteVerificationCsv(out, report);
  }
  Emit(o.out_file.empty() ? "-" : o.out_file, out.str(), outcome);
  if (!report.ok()) {
    outcome.exit_code = kExitMismatch;
    for (const SurveyRow& m : report.mismatches) {
      outcome.err += "counterexample: n=" + std::to_string(m.n) +
                     " w=" + std::to_string(m.w) +
                     " closed=" + std::to_string(*m.minvm_closed) +
                     " oracle=" + std::to_string(m.minvm_oracle) + "\n";
    }
  }
}

void AddOracleFlags(CLI::App* sub, Options& o) {
  sub->add_option("--cap", o.oracle.bit_cap, "Largest n enumerated")
      ->capture_default_str();
  sub->add_flag("--cap-override", o.oracle.cap_override,
                "Allow n above --cap");
  sub->add_option("--threads", o.oracle.threads, "Worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

CommandOutcome Run(const std::vector<std::string>& args) {
  CommandOutcome outcome;
  Options o;

  CLI::App app{"Encode, attack and analyze reducible permutation graph "
               "watermarks",
               "wrpg"};
  app.require_subcommand(1);

  auto* encode = app.add_subcommand("encode", "Encode w as a graph file");
  encode->add_option("w", o.watermark, "Watermark integer (>= 2)")->required();
  encode->add_option("--out", o.out_file,
                     "Graph file to write (default w<w>.json, - for stdout)");
  encode->add_option("--dot", o.dot_file, "Also write a DOT rendering");
  encode->add_flag("--show-sip", o.show_sip,
                   "Print the self-inverting permutation");

  auto* decode = app.add_subcommand("decode", "Decode and validate a graph");
  decode->add_option("graph", o.graph_file, "Graph file")->required();

  auto* classify =
      app.add_subcommand("classify", "Report every validity check");
  classify->add_option("graph", o.graph_file, "Graph file")->required();

  auto* attack = app.add_subcommand("attack", "Retarget back edges");
  attack->add_option("graph", o.graph_file, "Graph file")->required();
  attack->add_option("--edits", o.edits, "Edits as source:target,...");
  attack->add_option("--out", o.out_file,
                     "Output file (default <graph>.attacked.json)");

  auto* analyze = app.add_subcommand("analyze", "Resilience report for w");
  analyze->add_option("w", o.watermark, "Watermark integer")->required();
  AddOracleFlags(analyze, o);

  auto* survey = app.add_subcommand("survey", "Resilience table for R_n");
  survey->add_option("--bits", o.bits, "Bit-length n")->required();
  survey->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  survey->add_option("--out", o.out_file, "Output file (default stdout)");
  AddOracleFlags(survey, o);

  auto* verify = app.add_subcommand(
      "verify-theorem", "Check the closed form against the exhaustive oracle");
  verify->add_option("--bits-min", o.bits_min, "Smallest n")
      ->capture_default_str();
  verify->add_option("--bits-max", o.bits_max, "Largest n")
      ->capture_default_str();
  verify->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  verify->add_option("--out", o.out_file, "Output file (default stdout)");
  verify->add_flag("--below-theorem-range", o.below_theorem_range,
                   "Also sweep n = 2, 3 (known deviations)");
  AddOracleFlags(verify, o);

  std::vector<std::string> argv_storage = {"wrpg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    outcome.out = out.str();
    outcome.err = err.str();
    outcome.exit_code = code == 0 ? kExitOk : kExitInvalidInput;
    return outcome;
  }

  try {
    if (encode->parsed()) {
      Encode(o, outcome);
    } else if (decode->parsed()) {
      Decode(o, /*verbose=*/false, outcome);
    } else if (classify->parsed()) {
      Decode(o, /*verbose=*/true, outcome);
    } else if (attack->parsed()) {
      Attack(o, outcome);
    } else if (analyze->parsed()) {
      Analyze(o, outcome);
    } else if (survey->parsed()) {
      Survey(o, outcome);
    } else if (verify->parsed()) {
      Verify(o, outcome);
    }
  } catch (const Error& e) {
    outcome.err += std::string(ErrorCodeName(e.code())) + ": " + e.what() + "\n";
    outcome.exit_code = ExitCodeFor(e.code());
  }
  return outcome;
}

}  // namespace wrpg::cli
