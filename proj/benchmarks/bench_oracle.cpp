#include <benchmark/benchmark.h>

#include "rsp/oracle.hpp"

namespace {

void BM_IsRspPair(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::is_rsp_pair(2, 49997, 10));
        benchmark::DoNotOptimize(rsp::is_rsp_pair(7, 1234567, 18));
    }
}
BENCHMARK(BM_IsRspPair);

void BM_SearchB(benchmark::State& state) {
    const int base = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::search_b(2, base, 1000000));
    }
    state.SetItemsProcessed(state.iterations() * 1000000);
}
BENCHMARK(BM_SearchB)->Arg(10)->Arg(18)->Arg(40);

void BM_SearchPairs(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::search_pairs(10, 100000));
    }
}
BENCHMARK(BM_SearchPairs);

}  // namespace
