#include <benchmark/benchmark.h>

#include "p3/families.hpp"

using namespace p3;

static void BM_EnumerateConnected(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_connected(n).size());
    }
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateChordalBipartite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_chordal_bipartite(n).size());
    }
}
BENCHMARK(BM_EnumerateChordalBipartite)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_RecognizeRandomCb(benchmark::State& state) {
    const Graph g = generate({Family::kRandomCb, {static_cast<int>(state.range(0))}, 5});
    const auto strategy = static_cast<RecognitionStrategy>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_chordal_bipartite(g, strategy).chordal_bipartite);
    }
}
BENCHMARK(BM_RecognizeRandomCb)->ArgsProduct({{12, 24}, {0, 1}});
