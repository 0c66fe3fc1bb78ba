#include <benchmark/benchmark.h>

#include "rsp/automaton.hpp"
#include "rsp/language.hpp"

namespace {

void BM_Build(benchmark::State& state) {
    const int base = static_cast<int>(state.range(0));
    const int a = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::RspAutomaton::build(a, base));
    }
}
BENCHMARK(BM_Build)->Args({10, 2})->Args({18, 7})->Args({27, 10})->Args({150, 31})->Args({1000, 999});

void BM_BuildAllForBase(benchmark::State& state) {
    const int base = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int a = 1; a < base; ++a) benchmark::DoNotOptimize(rsp::RspAutomaton::build(a, base));
    }
}
BENCHMARK(BM_BuildAllForBase)->Arg(27)->Arg(128);

void BM_Enumerate(benchmark::State& state) {
    rsp::RspAutomaton A = rsp::RspAutomaton::build(7, 18);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::b_values(A, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Enumerate)->Arg(20)->Arg(60);

void BM_ToRegex(benchmark::State& state) {
    rsp::RspAutomaton A = rsp::RspAutomaton::build(10, 27);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsp::to_regex(A));
    }
}
BENCHMARK(BM_ToRegex);

}  // namespace
