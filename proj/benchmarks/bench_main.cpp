#include <benchmark/benchmark.h>

#include <mzvkit/derive.hpp>
#include <mzvkit/modp.hpp>
#include <mzvkit/numeric.hpp>

using namespace mzv;

namespace {

// The exact rational truncated sum is the engine's hot path: its layered
// prefix-sum recurrence is linear in N per entry, but the rationals grow.
void BM_zeta_trunc(benchmark::State& state) {
    const Index k{2, 1, 3};
    const long N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_trunc(k, N));
}
BENCHMARK(BM_zeta_trunc)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);

// Same recurrence in the p-element field: fixed-width arithmetic, so this
// measures the inverse-table and loop costs alone.
void BM_zeta_mod_p(benchmark::State& state) {
    const Index k{2, 1, 3};
    const long p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_mod_p(k, p));
}
BENCHMARK(BM_zeta_mod_p)->Arg(1009)->Arg(10007)->Arg(100003);

void BM_derive_shuffle(benchmark::State& state) {
    const Index k{1, 2};
    const Index l{2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(derive_shuffle(k, l));
}
BENCHMARK(BM_derive_shuffle);

void BM_derive_harmonic(benchmark::State& state) {
    const Index k{1, 2};
    const Index l{2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(derive_harmonic(k, l));
}
BENCHMARK(BM_derive_harmonic);

// Index transport is linear in the weight; the trace dominates allocation.
void BM_derive_dual(benchmark::State& state) {
    std::vector<int> entries(static_cast<std::size_t>(state.range(0)) - 1, 1);
    entries.push_back(2);
    const Index k(entries);
    for (auto _ : state) benchmark::DoNotOptimize(derive_dual(k));
}
BENCHMARK(BM_derive_dual)->Arg(8)->Arg(16)->Arg(32);

void BM_replay_trace(benchmark::State& state) {
    const Trace trace = derive_shuffle(Index{1, 2}, Index{2}).second;
    for (auto _ : state) benchmark::DoNotOptimize(replay_trace(trace));
}
BENCHMARK(BM_replay_trace);

void BM_eval_connected_sh(benchmark::State& state) {
    const Term t = Term::sh(Index{2}, Index{1, 2}, Index{1});
    EvalParams pr;
    pr.N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(eval_connected(t, pr));
}
BENCHMARK(BM_eval_connected_sh)->Arg(16)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();
