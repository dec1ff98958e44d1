// Serial vs OpenMP width solvers on dual graphs of the constructions.
#include <benchmark/benchmark.h>

#include "twkit/assemble.hpp"
#include "twkit/width.hpp"

using namespace twkit;

namespace {

const Multigraph& graph(int which) {
  static const std::vector<Multigraph> graphs = [] {
    std::vector<Multigraph> g;
    g.push_back(dual_graph(grid_ball(2)));                                         // tw 4, no reductions help
    g.push_back(dual_graph(sfs(parse_sfs("sfs sphere (2,1) (3,1) (5,-4)"))));
    g.push_back(dual_graph(sfs(parse_sfs("sfs sphere (3,2) (5,-2) (7,3) (2,1)"))));
    return g;
  }();
  return graphs[static_cast<std::size_t>(which)];
}

template <Execution E>
void BM_Treewidth(benchmark::State& state) {
  const Multigraph& g = graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(treewidth_exact(g, kDefaultTreewidthCap, E).width);
}

template <Execution E>
void BM_Cutwidth(benchmark::State& state) {
  const Multigraph& g = graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cutwidth_exact(g, kDefaultCutwidthCap, E).width);
}

}  // namespace

BENCHMARK(BM_Treewidth<Execution::Serial>)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Treewidth<Execution::Parallel>)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cutwidth<Execution::Serial>)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cutwidth<Execution::Parallel>)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
