#include <benchmark/benchmark.h>

#include <random>

#include "p3/convexity.hpp"
#include "p3/families.hpp"

using namespace p3;

static void BM_HullRandomSeeds(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = generate({Family::kRandomCb, {n}, 7});
    std::mt19937_64 rng(1);
    std::vector<VertexSet> seeds;
    for (int i = 0; i < 64; ++i) {
        VertexSet s = g.empty_set();
        s.insert(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)));
        s.insert(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)));
        seeds.push_back(std::move(s));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(p3_hull(g, seeds[i++ % seeds.size()]));
    }
}
BENCHMARK(BM_HullRandomSeeds)->Arg(16)->Arg(64)->Arg(256);

static void BM_MoveClosureLadder(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = generate({Family::kLadder, {k}, {}});
    const VertexSet u = g.set_of({0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(move_closure(g, u, static_cast<Vertex>(k + 1)));
    }
}
BENCHMARK(BM_MoveClosureLadder)->Arg(10)->Arg(100)->Arg(1000);

static void BM_EnumerateConvexSets(benchmark::State& state) {
    const Graph g = generate({Family::kLadder, {static_cast<int>(state.range(0))}, {}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_convex_sets(g));
    }
}
BENCHMARK(BM_EnumerateConvexSets)->Arg(4)->Arg(6)->Arg(8);
