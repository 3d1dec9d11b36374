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

#include "wrpg/resilience.h"

namespace {

void BM_RangeTableBuild(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::RangeTable(bits));
}
BENCHMARK(BM_RangeTableBuild)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_OracleAll(benchmark::State& state) {
  wrpg::OracleOptions options;
  options.threads = static_cast<int>(state.range(1));
  const wrpg::RangeTable table(static_cast<int>(state.range(0)), options);
  for (auto _ : state) benchmark::DoNotOptimize(table.OracleAll());
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(table.size()));
}
BENCHMARK(BM_OracleAll)
    ->ArgsProduct({{10, 12}, {1, 0}})
    ->Unit(benchmark::kMillisecond);

void BM_ProofNeighbors(benchmark::State& state) {
  const wrpg::Watermark w = wrpg::StrongWatermarkOf(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::ProofNeighbors(w));
}
BENCHMARK(BM_ProofNeighbors)->Arg(8)->Arg(32)->Arg(62);

void BM_VerifyTheorem(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wrpg::VerifyTheorem(4, n_max));
}
BENCHMARK(BM_VerifyTheorem)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
