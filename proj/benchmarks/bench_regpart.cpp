#include "regpart/regpart.hpp"

#include <benchmark/benchmark.h>

using namespace regpart;

static void BM_EnumerateClassRegular(benchmark::State& state)
{
    const ModulusTuple r{2, 3};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_class_regular(r, n));
    }
}
BENCHMARK(BM_EnumerateClassRegular)->Arg(20)->Arg(40)->Arg(60);

static void BM_EnumeratePartitions(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_partitions(n));
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30);

static void BM_PhiDirect(benchmark::State& state)
{
    const ModulusTuple r{2, 3, 5};
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi(r, degree));
    }
}
BENCHMARK(BM_PhiDirect)->Arg(64)->Arg(256);

static void BM_PhiAlternating(benchmark::State& state)
{
    const ModulusTuple r{2, 3, 5};
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_alternating(r, degree));
    }
}
BENCHMARK(BM_PhiAlternating)->Arg(64)->Arg(256);

static void BM_SeriesC(benchmark::State& state)
{
    const ModulusTuple r{3};
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_c(r, 1, degree));
    }
}
BENCHMARK(BM_SeriesC)->Arg(64)->Arg(256);

static void BM_GlaisherRoundTrip(benchmark::State& state)
{
    const ModulusTuple r{3};
    const auto rp = enumerate_regular(r, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& lambda : rp) {
            benchmark::DoNotOptimize(glaisher_inverse(glaisher_forward(lambda, r).output, r));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(rp.size()));
}
BENCHMARK(BM_GlaisherRoundTrip)->Arg(20)->Arg(30);

static void BM_ChargeOverTableaux(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Partition ones = Partition::from_multiplicities({{1, n}});
    const auto all = enumerate_partitions(n);
    for (auto _ : state) {
        long long total = 0;
        for (const auto& lambda : all) {
            for (const auto& t : semistandard_tableaux(lambda, ones)) {
                total += charge(reading_word(t));
            }
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ChargeOverTableaux)->Arg(5)->Arg(7);

static void BM_RegularTableDeterminant(benchmark::State& state)
{
    const auto table = regular_character_table(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(table_determinant(table));
    }
}
BENCHMARK(BM_RegularTableDeterminant)->Arg(8)->Arg(12);

static void BM_QprimeTransition(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(transition_matrix(ReducedFamily::qprime, ReducedFamily::power_sum, n, 3));
    }
}
BENCHMARK(BM_QprimeTransition)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
