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


#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "wrpg/integrity.h"
#include "wrpg/io.h"
#include "wrpg/rpg_codec.h"
#include "wrpg/sip_codec.h"

namespace {

// Argument is the bit-length n; the watermark is the top of R_n minus a
// mixed pattern so both bit values appear.
wrpg::Watermark Sample(int bits) {
  return wrpg::Watermark(wrpg::RangeEnd(bits) ^ (0x5555555555555555ULL >> (64 - bits + 1)));
}

void BM_EncodeSip(benchmark::State& state) {
  const wrpg::Watermark w = Sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::EncodeWatermarkToSip(w));
}
BENCHMARK(BM_EncodeSip)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

void BM_DecodeSip(benchmark::State& state) {
  const auto sip = wrpg::EncodeWatermarkToSip(Sample(static_cast<int>(state.range(0)))).sip;
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::DecodeSipToWatermark(sip));
}
BENCHMARK(BM_DecodeSip)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

void BM_EncodeRpg(benchmark::State& state) {
  const auto sip = wrpg::EncodeWatermarkToSip(Sample(static_cast<int>(state.range(0)))).sip;
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::EncodeSipToRpg(sip));
}
BENCHMARK(BM_EncodeRpg)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

void BM_DecodeRpg(benchmark::State& state) {
  const auto g = wrpg::EncodeSipToRpg(
      wrpg::EncodeWatermarkToSip(Sample(static_cast<int>(state.range(0)))).sip);
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::DecodeRpgToSip(g));
}
BENCHMARK(BM_DecodeRpg)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

void BM_CheckReducibility(benchmark::State& state) {
  const auto g = wrpg::EncodeSipToRpg(
      wrpg::EncodeWatermarkToSip(Sample(static_cast<int>(state.range(0)))).sip);
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::CheckReducibility(g));
}
BENCHMARK(BM_CheckReducibility)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

void BM_ClassifyTampered(benchmark::State& state) {
  const auto g = wrpg::EncodeSipToRpg(
      wrpg::EncodeWatermarkToSip(Sample(static_cast<int>(state.range(0)))).sip);
  const std::vector<wrpg::EdgeEdit> edits = {{3, 5}};
  const auto tampered = wrpg::ApplyEdgeEdits(g, edits).graph;
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::ClassifyGraph(tampered));
}
BENCHMARK(BM_ClassifyTampered)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

void BM_SerializeParse(benchmark::State& state) {
  const auto g = wrpg::EncodeSipToRpg(
      wrpg::EncodeWatermarkToSip(Sample(static_cast<int>(state.range(0)))).sip);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrpg::ParseGraph(wrpg::SerializeGraph(g)));
  }
}
BENCHMARK(BM_SerializeParse)->Arg(8)->Arg(62);

}  // namespace
