// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "copsrobbers/distance_oracle.hpp"
#include "copsrobbers/generators.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/solver.hpp"

namespace {

using namespace copsrobbers;

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::Parallel : Execution::Serial; }

const Graph& board(int n) {
  static std::map<int, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, random_graph_with_diameter({.n = n, .max_diameter = 6}, 17)).first;
  return it->second;
}

void BM_AllPairs(benchmark::State& state) {
  const auto& g = board(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g.as_digraph(), mode(state)));
}

void BM_Girth(benchmark::State& state) {
  const auto& g = board(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(girth(g, mode(state)));
}

void BM_SolverSweeps(benchmark::State& state) {
  const auto& g = board(static_cast<int>(state.range(0)));
  SolverOptions options{.exec = mode(state)};
  for (auto _ : state) {
    WinTable t(g.as_digraph(), whole(g.as_digraph()), 2, options);
    benchmark::DoNotOptimize(t.sweeps());
  }
}

BENCHMARK(BM_AllPairs)->ArgsProduct({{200, 800}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Girth)->ArgsProduct({{200, 800}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolverSweeps)->ArgsProduct({{20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
