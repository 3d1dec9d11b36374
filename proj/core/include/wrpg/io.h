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

// Text formats: canonical graph files, DOT export, one-line permutations,
// attack lists and resilience reports. Every writer is byte-stable.

#ifndef WRPG_IO_H_
#define WRPG_IO_H_

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrpg/integrity.h"
#include "wrpg/resilience.h"
#include "wrpg/rpg_codec.h"

namespace wrpg {

inline constexpr int kGraphFormatVersion = 1;

// {"version": 1, "n": 4, "nstar": 9, "back_edges": [8, 8, ...]} plus a
// trailing newline. back_edges is indexed by element 1..n*; n*+1 is s.
// Requires an odd n*.
std::string SerializeGraph(const ReduciblePermutationGraph& g);

// Throws Error(kParse) for malformed JSON, a missing or mistyped field, an
// unknown version, nstar != 2n+1, a back_edges length other than nstar, or
// a target outside 0..nstar+1.
ReduciblePermutationGraph ParseGraph(std::string_view text);

// Nodes s, u<nstar> ... u1, t; spine solid, back edges dashed.
std::string ToDot(const ReduciblePermutationGraph& g);

// "5 6 9 8 1 2 7 4 3".
std::string FormatPermutation(std::span<const int> elements);
// Throws Error(kParse) on anything but whitespace-separated integers.
std::vector<int> ParsePermutation(std::string_view text);

// "3:5,7:9". Targets may also be written as s or t. An empty string is an
// empty list. Throws Error(kParse) on malformed pairs.
std::vector<EdgeEdit> ParseEdgeEdits(std::string_view text, int n_star);

// Columns: n,w,shape_case,ell,r,b_n,minvm_closed,minvm_oracle,agree,
// nearest_count,strength. Cells that do not apply are left empty.
void WriteSurveyCsv(std::ostream& out, std::span<const SurveyRow> rows);
void WriteSurveyJson(std::ostream& out, std::span<const SurveyRow> rows);

// CSV: the survey rows, then one "# range" comment line per n and one
// "# mismatch" line per counterexample.
void WriteVerificationCsv(std::ostream& out, const VerificationReport& report);
void WriteVerificationJson(std::ostream& out, const VerificationReport& report);

}  // namespace wrpg

#endif  // WRPG_IO_H_
