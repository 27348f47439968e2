// Copyright 2026 The sdom Authors
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

#include "sdom/families.h"
#include "sdom/isomorphism.h"
#include "sdom/operations.h"
#include "sdom/solver.h"

namespace sdom {
namespace {

void BM_GammaSpPath(benchmark::State& state) {
  const Graph g = PathGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GammaSp(g).value);
}
BENCHMARK(BM_GammaSpPath)->DenseRange(8, 24, 4);

void BM_GammaSpCycle(benchmark::State& state) {
  const Graph g = CycleGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GammaSp(g).value);
}
BENCHMARK(BM_GammaSpCycle)->DenseRange(8, 24, 4);

void BM_GammaSpFriendship(benchmark::State& state) {
  const Graph g = FriendshipGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GammaSp(g).value);
}
BENCHMARK(BM_GammaSpFriendship)->DenseRange(3, 9, 2);

void BM_GammaSpGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Graph g = GnpGraph(n, Rational(1, 2), seed++);
    benchmark::DoNotOptimize(GammaSp(g).value);
  }
}
BENCHMARK(BM_GammaSpGnp)->DenseRange(8, 20, 4);

void BM_GammaGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Graph g = GnpGraph(n, Rational(1, 4), seed++);
    benchmark::DoNotOptimize(Gamma(g).value);
  }
}
BENCHMARK(BM_GammaGnp)->DenseRange(8, 20, 4);

void BM_GammaSpBruteForce(benchmark::State& state) {
  const Graph g = GnpGraph(static_cast<int>(state.range(0)), Rational(1, 2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(GammaSpBruteForce(g));
}
BENCHMARK(BM_GammaSpBruteForce)->DenseRange(8, 14, 2);

void BM_IsomorphismFriendshipChain(benchmark::State& state) {
  const Graph chained =
      Chain({{FriendshipGraph(4), 0, 0}, {FriendshipGraph(5), 0, 0}}).graph;
  const Graph target = FriendshipGraph(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsIsomorphic(chained, target, {.max_order = 20}));
  }
}
BENCHMARK(BM_IsomorphismFriendshipChain);

void BM_IsomorphismRandomRelabel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = GnpGraph(n, Rational(1, 2), 5);
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = (i * 5 + 3) % n;
  GraphBuilder b(n);
  for (const auto& [u, v] : g.Edges()) b.AddEdge(perm[u], perm[v]);
  const Graph h = b.Build();
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsIsomorphic(g, h, {.max_order = n}));
  }
}
BENCHMARK(BM_IsomorphismRandomRelabel)->Arg(12)->Arg(16)->Arg(24);

}  // namespace
}  // namespace sdom

BENCHMARK_MAIN();
