#include <benchmark/benchmark.h>

#include "p3/families.hpp"
#include "p3/fast_solver.hpp"
#include "p3/games.hpp"

using namespace p3;

static void BM_OracleLadder(benchmark::State& state) {
    const Graph g = generate({Family::kLadder, {static_cast<int>(state.range(0))}, {}});
    for (auto _ : state) {
        OracleSolver oracle(g, GameVariant::kOrdinary);
        benchmark::DoNotOptimize(oracle.grundy(g.empty_set()));
        state.counters["memo"] = static_cast<double>(oracle.memo_size());
    }
}
BENCHMARK(BM_OracleLadder)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_FastLadder(benchmark::State& state) {
    const Graph g = generate({Family::kLadder, {static_cast<int>(state.range(0))}, {}});
    for (auto _ : state) {
        const auto [value, stats] = grundy_fast(g, g.empty_set());
        benchmark::DoNotOptimize(value);
        state.counters["memo"] = static_cast<double>(stats.memo_entries);
    }
}
BENCHMARK(BM_FastLadder)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_FastRandomTree(benchmark::State& state) {
    const Graph g = generate({Family::kRandomTree, {static_cast<int>(state.range(0))}, 1});
    for (auto _ : state) {
        const auto [value, stats] = grundy_fast(g, g.empty_set());
        benchmark::DoNotOptimize(value);
        state.counters["decompositions"] = static_cast<double>(stats.decompositions);
    }
}
BENCHMARK(BM_FastRandomTree)->Arg(50)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_FastPolicy(benchmark::State& state) {
    const Graph g = generate({Family::kRandomCb, {40}, 3});
    FastOptions options;
    options.policy = static_cast<SeparatorPolicy>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grundy_fast(g, g.empty_set(), options).first);
    }
}
BENCHMARK(BM_FastPolicy)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
