#include <benchmark/benchmark.h>

#include "reesgb/graph.hpp"

using namespace reesgb;

static void BM_MaximumMatching(benchmark::State& state) {
    BipartiteGraph g = complete_bipartite(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g));
}
BENCHMARK(BM_MaximumMatching)->Arg(4)->Arg(6)->Arg(8);

static void BM_MinimumMaximalMatching(benchmark::State& state) {
    BipartiteGraph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(minimum_maximal_matching(g));
}
BENCHMARK(BM_MinimumMaximalMatching)->Arg(6)->Arg(8)->Arg(10);

static void BM_ParseGraph(benchmark::State& state) {
    std::string text = complete_bipartite(3, 5).to_edge_list();
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph(text));
}
BENCHMARK(BM_ParseGraph);
