#include <benchmark/benchmark.h>

#include "reesgb/circuits.hpp"
#include "reesgb/walk.hpp"

using namespace reesgb;

static void BM_UniversalBasis(benchmark::State& state) {
    BipartiteGraph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(universal_groebner_basis(g));
}
BENCHMARK(BM_UniversalBasis)->Arg(4)->Arg(6)->Arg(8);

static void BM_CircuitsOracle(benchmark::State& state) {
    BipartiteGraph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(circuits(g));
}
BENCHMARK(BM_CircuitsOracle)->Arg(4)->Arg(6);
