#include <benchmark/benchmark.h>

#include "hcm/hcm.hpp"

using namespace hcm;

static void BM_Solve(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        state.PauseTiming();
        const Colouring c = random_colouring(n, seed++, {1, 1, 1});
        state.ResumeTiming();
        benchmark::DoNotOptimize(solve(c));
    }
}
BENCHMARK(BM_Solve)->Arg(12)->Arg(18)->Arg(30)->Arg(45)->Arg(60);

static void BM_SolveLayered(benchmark::State& state)
{
    const Colouring c = layered_lowest_colour({1, 3, 9});
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(c));
}
BENCHMARK(BM_SolveLayered);

static void BM_ClassifySextuple(benchmark::State& state)
{
    const Colouring c = random_colouring(6, 7, {1, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_sextuple(c, VertexSet::range(6)));
}
BENCHMARK(BM_ClassifySextuple);

static void BM_CheckUniversal13(benchmark::State& state)
{
    const Colouring c = random_colouring(13, 3, {1, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(check_universal_13(c, VertexSet::range(13)));
}
BENCHMARK(BM_CheckUniversal13);

static void BM_OracleBestPair(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Colouring c = random_colouring(n, 11, {4, 4, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(max_two_coloured(c, c.vertices()));
}
BENCHMARK(BM_OracleBestPair)->Arg(12)->Arg(15)->Arg(18);

static void BM_Perfect12(benchmark::State& state)
{
    const Colouring c = random_colouring(12, 5, {1, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(kozos_perfect_12(c, c.vertices()));
}
BENCHMARK(BM_Perfect12);

static void BM_MonochromaticMatching(benchmark::State& state)
{
    const Colouring c = random_colouring(10, 9, {1, 2, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(afl_mono_matching(c, c.vertices()));
}
BENCHMARK(BM_MonochromaticMatching);
