#include <benchmark/benchmark.h>

#include "longcycles/cycle_oracle.hpp"
#include "longcycles/generators.hpp"
#include "longcycles/path_engine.hpp"
#include "longcycles/solver.hpp"
#include "longcycles/sweep.hpp"

using namespace longcycles;

namespace {

void BM_SolveGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int ell = static_cast<int>(state.range(1));
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; seed < 16; ++seed) graphs.push_back(gen_gnp(n, 0.25, seed));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(graphs[i++ % graphs.size()], ell));
  }
}
BENCHMARK(BM_SolveGnp)->ArgsProduct({{10, 14, 18}, {3, 5}});

void BM_SolveEarGraph(benchmark::State& state) {
  const int ears = static_cast<int>(state.range(0));
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; seed < 16; ++seed) graphs.push_back(gen_ear_graph({9, ears, 1, 8, true}, seed));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(graphs[i++ % graphs.size()], 3));
  }
}
BENCHMARK(BM_SolveEarGraph)->Arg(4)->Arg(6)->Arg(8);

void BM_SolveComplete(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const Graph k = gen_complete(2 * ell - 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve(k, ell));
}
BENCHMARK(BM_SolveComplete)->DenseRange(3, 5);

void BM_ShortestLongCycle(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_long_cycle(g, VertexMask(), 5));
}
BENCHMARK(BM_ShortestLongCycle)->Arg(10)->Arg(14)->Arg(18);

void BM_MinTransversalBruteforce(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(min_transversal_bruteforce(g, 3, 8));
}
BENCHMARK(BM_MinTransversalBruteforce)->Arg(8)->Arg(10);

void BM_Menger(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = gen_gnp(n, 0.3, 11);
  PathQuery q;
  q.source = VertexSet::of(std::vector<Vertex>{0, 1});
  q.target = VertexSet::of(std::vector<Vertex>{n - 2, n - 1});
  for (auto _ : state) benchmark::DoNotOptimize(two_disjoint_paths_or_cut(g, q));
}
BENCHMARK(BM_Menger)->Arg(12)->Arg(24)->Arg(48);

void BM_ExhaustiveSweep(benchmark::State& state) {
  SweepConfig config;
  config.ells = {3, 4, 5};
  config.max_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
}
BENCHMARK(BM_ExhaustiveSweep)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
