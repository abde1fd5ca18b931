#include <benchmark/benchmark.h>

#include "reesgb/koszul.hpp"

using namespace reesgb;

static void BM_ReesBetti(benchmark::State& state) {
    BipartiteGraph g = state.range(0) == 0 ? path_graph(5) : cycle_graph(4);
    for (auto _ : state) benchmark::DoNotOptimize(koszul_betti_rees(g));
}
BENCHMARK(BM_ReesBetti)->Arg(0)->Arg(1);

static void BM_PowerBetti(benchmark::State& state) {
    BipartiteGraph g = complete_bipartite(2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            koszul_betti_power(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PowerBetti)->Arg(1)->Arg(2)->Arg(3);

static void BM_EdgePowerMembership(benchmark::State& state) {
    BipartiteGraph g = complete_bipartite(2, 3);
    std::vector<int> w = {2, 1, 1, 2, 1};
    for (auto _ : state) {
        MembershipOracle fresh(g);  // defeat the memo
        benchmark::DoNotOptimize(fresh.contains(w, 3));
    }
}
BENCHMARK(BM_EdgePowerMembership);
