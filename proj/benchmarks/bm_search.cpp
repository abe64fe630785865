#include <benchmark/benchmark.h>

#include <cstdint>

#include "nakarig/arith_chain.hpp"
#include "nakarig/gen_cogen.hpp"
#include "nakarig/resolution.hpp"
#include "nakarig/search.hpp"

using namespace nakarig;

namespace {

void BM_RdClosedForm(benchmark::State& state) {
    const AlgebraParams a = AlgebraParams::make(7, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (int t = 1; t < a.m; ++t) {
            acc += rd_closed_form(t, a);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_RdClosedForm)->Arg(20)->Arg(60);

void BM_ExtTableBuild(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ExtTable table{AlgebraParams::make(3, m)};
        benchmark::DoNotOptimize(table.first_degree(0, 0));
    }
}
BENCHMARK(BM_ExtTableBuild)->Arg(5)->Arg(7);

void BM_RdOfMask(benchmark::State& state) {
    const ExtTable table{AlgebraParams::make(4, 5)};
    std::uint64_t mask = 0x5a5a;
    for (auto _ : state) {
        benchmark::DoNotOptimize(table.rd_of_mask(mask));
        mask = (mask * 2862933555777941757ULL + 3037000493ULL) & 0xffff;
    }
}
BENCHMARK(BM_RdOfMask);

void BM_GldimEnd(benchmark::State& state) {
    const AlgebraParams a = AlgebraParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const GenCogenSet M = family_S(1, standard_delta(a), a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gldim_end(M));
    }
}
BENCHMARK(BM_GldimEnd)->Args({3, 8})->Args({5, 12});

void BM_BruteForce(benchmark::State& state) {
    const AlgebraParams a = AlgebraParams::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    SearchConfig cfg;
    cfg.threads = 1;
    cfg.prune_rotation = state.range(2) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_rigdim(a, cfg));
    }
}
BENCHMARK(BM_BruteForce)->Args({3, 5, 0})->Args({3, 5, 1})->Args({4, 5, 1})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
