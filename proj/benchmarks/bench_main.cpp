#include "borel/theorems.hpp"
#include "commands.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace borel;

static void BM_Rank(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    gf2::Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.set(r, c, rng() & 1U);
    for (auto _ : state)
        benchmark::DoNotOptimize(gf2::rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

static void BM_KernelBasis(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    gf2::Matrix m(n / 2, n);
    for (std::size_t r = 0; r < n / 2; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.set(r, c, rng() & 1U);
    for (auto _ : state)
        benchmark::DoNotOptimize(gf2::kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->RangeMultiplier(4)->Range(16, 1024);

static void BM_ComputePages(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto setup = borel_setup_for(SpaceSpec::make(SpaceKind::RealProduct, n, n));
    const auto dc = enumerate_cases(setup).back();
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_pages(setup, dc));
}
BENCHMARK(BM_ComputePages)->DenseRange(9, 49, 20);

static void BM_VerifySpace(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto space = SpaceSpec::make(SpaceKind::ComplexProduct, n, n + 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_space(space));
}
BENCHMARK(BM_VerifySpace)->Arg(5)->Arg(25)->Arg(47);

static void BM_Sweep(benchmark::State& state)
{
    const auto spaces = cli::sweep_spaces({SpaceKind::RealProduct, SpaceKind::ComplexProduct}, 20, 20);
    const auto jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cli::verify_all(spaces, jobs));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
