#include <benchmark/benchmark.h>

#include "rsp/participation.hpp"

namespace {

void BM_Participates(benchmark::State& state) {
    const int base = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int a = 2; a < base; ++a) benchmark::DoNotOptimize(rsp::participates(a, base));
    }
}
BENCHMARK(BM_Participates)->Arg(64)->Arg(256)->Arg(512);

void BM_ConjectureScan(benchmark::State& state) {
    const int max_base = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::conjecture_scan(max_base));
    }
}
BENCHMARK(BM_ConjectureScan)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_RRatio(benchmark::State& state) {
    const int base = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::r_ratio(base));
    }
}
BENCHMARK(BM_RRatio)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Omega(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::omega(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Omega)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
