// Copyright 2026 The eigmult Authors
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

// Serial reference sweep against the OpenMP sweep on the same corpus.

#include <benchmark/benchmark.h>

#include <vector>

#include "eigmult/algebraic.hpp"
#include "eigmult/enumerate.hpp"

namespace {

const std::vector<eigmult::Graph>& corpus(std::size_t n_max) {
  static std::vector<std::vector<eigmult::Graph>> cache(eigmult::kMaxConnectedOrder + 1);
  auto& out = cache[n_max];
  if (out.empty())
    for (std::size_t n = 1; n <= n_max; ++n)
      out.insert(out.end(), eigmult::connected_graphs(n).begin(), eigmult::connected_graphs(n).end());
  return out;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto& graphs = corpus(static_cast<std::size_t>(state.range(0)));
  const auto lambdas = eigmult::default_lambda_set(9);
  for (auto _ : state)
    benchmark::DoNotOptimize(eigmult::sweep_serial(graphs, 2, lambdas, eigmult::SweepMode::kAll));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto& graphs = corpus(static_cast<std::size_t>(state.range(0)));
  const auto lambdas = eigmult::default_lambda_set(9);
  for (auto _ : state)
    benchmark::DoNotOptimize(eigmult::sweep_parallel(graphs, 2, lambdas, eigmult::SweepMode::kAll));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}

void BM_CanonicalEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 7; ++n) total += eigmult::connected_graphs(n).size();
    benchmark::DoNotOptimize(total);
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CanonicalEnumeration)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
