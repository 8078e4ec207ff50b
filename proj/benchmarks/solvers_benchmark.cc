// Copyright 2026 The kclique-lab Authors
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

// Microbenchmarks for the three solving approaches on seeded G(n, 2/3)
// instances around their clique number.

#include <benchmark/benchmark.h>

#include "kclique/backtrack.h"
#include "kclique/generator.h"
#include "kclique/graph.h"
#include "kclique/ilp.h"
#include "kclique/sat_encoding.h"
#include "kclique/sat_engine.h"

namespace kclique {
namespace {

Graph DemoGraph(int n) { return GenerateRandomGraph({n, {2, 3}, 3}); }

void BM_GenerateRandomGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(GenerateRandomGraph({n, {2, 3}, seed++}));
  state.SetComplexityN(n);
}
BENCHMARK(BM_GenerateRandomGraph)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_BacktrackDecide(benchmark::State& state) {
  const Graph g = DemoGraph(60);
  const int k = static_cast<int>(state.range(0));
  BacktrackOptions opts;
  opts.prune = state.range(1) != 0;
  for (auto _ : state) {
    SolveOutcome out = BacktrackDecide({g, k}, opts);
    state.counters["nodes"] = static_cast<double>(out.stats.nodes_visited);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_BacktrackDecide)->ArgsProduct({{11, 12, 13, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EncodeKClique(benchmark::State& state) {
  const Graph g = DemoGraph(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(EncodeKClique({g, k}));
}
BENCHMARK(BM_EncodeKClique)->Args({40, 8})->Args({60, 12})->Args({100, 13});

void BM_SatSolve(benchmark::State& state) {
  const Graph g = DemoGraph(60);
  const int k = static_cast<int>(state.range(0));
  const KCliqueEncoding enc = EncodeKClique({g, k});
  for (auto _ : state) {
    SatResult res = SolveSat(enc.formula);
    state.counters["conflicts"] = static_cast<double>(res.stats.conflicts);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_SatSolve)->DenseRange(11, 16)->Unit(benchmark::kMillisecond);

void BM_IlpSolve(benchmark::State& state) {
  const Graph g = DemoGraph(static_cast<int>(state.range(0)));
  const IlpModel model = EncodeMaxClique(g);
  for (auto _ : state) {
    IlpResult res = SolveIlp(model);
    state.counters["branch_nodes"] = static_cast<double>(res.stats.branch_nodes);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_IlpSolve)->Arg(40)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace kclique

BENCHMARK_MAIN();
