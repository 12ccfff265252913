// Kernel timings, serial reference (threads = 1) against the parallel path.
// On a build without OpenMP the thread argument is a no-op and both rows
// should read the same.

#include <benchmark/benchmark.h>

#include "mct/constructions.hpp"
#include "mct/engine.hpp"
#include "mct/eulerize.hpp"
#include "mct/oracle.hpp"
#include "mct/sweep.hpp"

using namespace mct;

static void BM_Eulerize(benchmark::State& state) {
    const EdgeColoring c = random_coloring(300, 4, 1);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eulerize(c, threads));
}
BENCHMARK(BM_Eulerize)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SolveSplitConstruction(benchmark::State& state) {
    const EdgeColoring c = extremal_bipartite_split(300);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve(c, threads));
}
BENCHMARK(BM_SolveSplitConstruction)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WorstCaseTrail(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(worst_case_search(6, SearchMode::Trail, threads));
}
BENCHMARK(BM_WorstCaseTrail)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WorstCaseCircuit(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(worst_case_search(5, SearchMode::Circuit, threads));
}
BENCHMARK(BM_WorstCaseCircuit)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State& state) {
    SweepSpec spec;
    spec.family = "random";
    spec.n_min = 30;
    spec.n_max = 60;
    spec.step = 10;
    spec.seeds = 4;
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, threads));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
