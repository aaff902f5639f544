#include <benchmark/benchmark.h>

#include "sumfree/bounds.hpp"
#include "sumfree/census.hpp"
#include "sumfree/iscount.hpp"

using namespace sumfree;

static void BM_IndependentSets(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    const auto g = AbelianGroup::make({p});
    const auto h = build_link_graph(g, ElementSet(p, {0, 1, 3}));
    for (auto _ : state) benchmark::DoNotOptimize(count_independent_sets(h));
}
BENCHMARK(BM_IndependentSets)->DenseRange(7, 19, 4);

static void BM_TotalCensus(benchmark::State& state) {
    const auto g = AbelianGroup::make({static_cast<std::uint64_t>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(total_census(g));
}
BENCHMARK(BM_TotalCensus)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_CensusByMinK(benchmark::State& state) {
    const auto g = AbelianGroup::make({static_cast<std::uint64_t>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(census_by_min_k(g));
}
BENCHMARK(BM_CensusByMinK)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_Theorem1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(theorem1_bounds(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Theorem1)->Arg(7)->Arg(101)->Arg(1009);
BENCHMARK_MAIN();
