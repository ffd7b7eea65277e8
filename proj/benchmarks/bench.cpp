#include <benchmark/benchmark.h>

#include "turn/archimedean.hpp"
#include "turn/distance.hpp"
#include "turn/network.hpp"
#include "turn/regular.hpp"
#include "turn/sim_rupture.hpp"
#include "turn/sim_t1.hpp"
#include "turn/turning_function.hpp"

namespace {

void BM_d2_regular_sum(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(turn::d2_regular_sum(n, n + 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_d2_regular_sum)->RangeMultiplier(10)->Range(100, 1000000)->Complexity();

void BM_d2_general(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const turn::Polygon a = turn::regular_polygon(n);
    const turn::Polygon b = turn::regular_polygon(n + 1);
    for (auto _ : state) benchmark::DoNotOptimize(turn::d2_general(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_d2_general)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_d2_vs_regular(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const turn::TurningFunction f = turn::turning_function(turn::regular_polygon(n));
    for (auto _ : state) benchmark::DoNotOptimize(turn::d2_vs_regular(f, 6));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_d2_vs_regular)->RangeMultiplier(2)->Range(4, 256)->Complexity();

void BM_lattice_disorder(benchmark::State& state) {
    const turn::PlanarNetwork net =
        turn::generate_lattice("4.8.8", static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(turn::disorder_report(net, true));
}
BENCHMARK(BM_lattice_disorder)->Arg(10)->Arg(20)->Arg(40);

void BM_tutte_embed(benchmark::State& state) {
    const turn::PlanarNetwork net =
        turn::voronoi_init(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(turn::tutte_embed(net));
}
BENCHMARK(BM_tutte_embed)->Arg(100)->Arg(1000);

void BM_rupture_run(benchmark::State& state) {
    for (auto _ : state) {
        turn::RuptureConfig cfg;
        cfg.target_cells = static_cast<int>(state.range(0));
        cfg.num_ruptures = cfg.target_cells / 4;
        cfg.trace_stride = 1000000;
        benchmark::DoNotOptimize(turn::run_rupture(cfg));
    }
}
BENCHMARK(BM_rupture_run)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
