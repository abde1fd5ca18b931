#include <benchmark/benchmark.h>

#include "reesgb/groebner.hpp"
#include "reesgb/walk.hpp"

using namespace reesgb;

static void BM_ReducedBasisGrevlex(benchmark::State& state) {
    BipartiteGraph g = cycle_graph(static_cast<int>(state.range(0)));
    auto gens = ugb_binomials(g);
    MonomialOrder o = MonomialOrder::grevlex(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce_basis(buchberger(gens, o)));
}
BENCHMARK(BM_ReducedBasisGrevlex)->Arg(4)->Arg(6);

static void BM_VerifySampledOrders(benchmark::State& state) {
    BipartiteGraph g = cycle_graph(6);
    auto orders = sample_orders(g, static_cast<int>(state.range(0)), 0);
    for (auto _ : state) benchmark::DoNotOptimize(verify_ugb(g, orders));
}
BENCHMARK(BM_VerifySampledOrders)->Arg(5)->Arg(25);
