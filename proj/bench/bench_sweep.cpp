// SPDX-License-Identifier: Apache-2.0
//
// Serial reference path versus the OpenMP path on grid sweeps.
#include "ulrich/acceptance.hpp"
#include "ulrich/grid.hpp"

#include <benchmark/benchmark.h>

using namespace ulrich;

namespace {

GridSpec grid_up_to(int b_max) { return GridSpec{{Int(0), Int(2)}, {Int(2), Int(b_max)}, std::nullopt, 12}; }

void BM_ScanGrid(benchmark::State& state, Exec exec) {
    const GridSpec g = grid_up_to(static_cast<int>(state.range(0)));
    const auto triples = static_cast<long>(enumerate_triples(g).size());
    for (auto _ : state) benchmark::DoNotOptimize(scan_grid(g, true, exec));
    state.SetItemsProcessed(state.iterations() * triples);
}

void BM_Acceptance(benchmark::State& state, Exec exec) {
    const GridSpec g = grid_up_to(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_acceptance(g, Fault::none, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_ScanGrid, serial, Exec::serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ScanGrid, parallel, Exec::parallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Acceptance, serial, Exec::serial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Acceptance, parallel, Exec::parallel)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
