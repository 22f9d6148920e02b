#include <algorithm>
#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "p3/convexity.hpp"
#include "p3/errors.hpp"
#include "p3/families.hpp"

using namespace p3;

namespace {

std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n) {
        for (auto& g : enumerate_connected(n)) out.push_back(std::move(g));
    }
    for (int n = 7; n <= 8; ++n) {
        for (auto& g : enumerate_chordal_bipartite(n)) out.push_back(std::move(g));
    }
    return out;
}

VertexSet random_subset(std::mt19937_64& rng, const Graph& g, int percent) {
    VertexSet s = g.empty_set();
    for (Vertex v = 0; v < g.n(); ++v) {
        if (static_cast<int>(rng() % 100) < percent) s.insert(v);
    }
    return s;
}

// Absorbs eligible vertices in a random order instead of lowest index first.
VertexSet shuffled_hull(std::mt19937_64& rng, const Graph& g, VertexSet s) {
    for (;;) {
        std::vector<Vertex> eligible;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (s.contains(v)) continue;
            int inside = 0;
            for (Vertex w : g.neighbors(v)) inside += s.contains(w) ? 1 : 0;
            if (inside >= 2) eligible.push_back(v);
        }
        if (eligible.empty()) return s;
        s.insert(eligible[rng() % eligible.size()]);
    }
}

}  // namespace

TEST_CASE("named closures") {
    const Graph ladder = generate({Family::kLadder, {3}, {}});
    CHECK(p3_hull(ladder, ladder.set_of({0, 4})).hull == ladder.set_of({0, 1, 3, 4}));
    const Graph c4 = generate({Family::kCycle, {4}, {}});
    CHECK(move_closure(c4, c4.set_of({0}), 2).is_full());
    const Graph p3 = generate({Family::kPath, {3}, {}});
    CHECK(move_closure(p3, p3.empty_set(), 1) == p3.set_of({1}));
    CHECK(move_closure(p3, p3.set_of({0}), 2).is_full());
}

TEST_CASE("empty set and whole graph are convex") {
    const Graph g = generate({Family::kLadder, {2}, {}});
    CHECK(is_convex(g, g.empty_set()));
    CHECK(is_convex(g, g.all()));
    CHECK_FALSE(is_convex(g, g.set_of({0, 3})));
    CHECK(is_closed(g, g.set_of({0})));
}

TEST_CASE("hull result bookkeeping") {
    const Graph c6 = generate({Family::kCycle, {6}, {}});
    const HullResult r = p3_hull(c6, c6.set_of({0, 2}));
    CHECK(r.hull == c6.set_of({0, 1, 2}));
    CHECK(r.connected);
    REQUIRE(r.addition_order.size() == 1);
    CHECK(r.addition_order[0].vertex == 1);
    CHECK(r.addition_order[0].witnesses == std::array<Vertex, 2>{0, 2});
    const HullResult apart = p3_hull(c6, c6.set_of({0, 3}));
    CHECK(apart.hull == c6.set_of({0, 3}));
    CHECK_FALSE(apart.connected);
}

TEST_CASE("addition order witnesses are earlier hull members") {
    std::mt19937_64 rng(3);
    for (const Graph& g : small_corpus()) {
        const VertexSet w = random_subset(rng, g, 30);
        const HullResult r = p3_hull(g, w);
        VertexSet built = w;
        for (const auto& step : r.addition_order) {
            CHECK_FALSE(built.contains(step.vertex));
            for (Vertex x : step.witnesses) {
                CHECK(built.contains(x));
                CHECK(g.has_edge(step.vertex, x));
            }
            built.insert(step.vertex);
        }
        CHECK(built == r.hull);
        CHECK(r.connected == is_connected_subset(g, r.hull));
    }
}

TEST_CASE("convexity predicate and enumeration match brute force") {
    for (const Graph& g : small_corpus()) {
        const auto adj = brute::adjacency(g);
        const auto want = brute::convex_sets(adj);
        std::vector<brute::Mask> got;
        for (const auto& s : enumerate_convex_sets(g)) {
            got.push_back(brute::to_mask(s));
            CHECK(is_convex(g, s));
        }
        std::sort(got.begin(), got.end());
        CHECK_MESSAGE(got == want, serialize_graph(g));
    }
}

TEST_CASE("enumeration on random graphs up to 12 vertices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 9 + trial % 4;
        const Graph g = generate({Family::kRandomCb, {n}, rng()});
        std::vector<brute::Mask> got;
        for (const auto& s : enumerate_convex_sets(g)) got.push_back(brute::to_mask(s));
        std::sort(got.begin(), got.end());
        CHECK(got == brute::convex_sets(brute::adjacency(g)));
    }
}

TEST_CASE("enumeration is in canonical order and respects its caps") {
    const Graph g = generate({Family::kLadder, {3}, {}});
    const auto sets = enumerate_convex_sets(g);
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    CHECK(sets.front().empty());
    CHECK_THROWS_AS(enumerate_convex_sets(generate({Family::kPath, {21}, {}})), CapExceededError);
    CHECK_THROWS_AS(enumerate_convex_sets(generate({Family::kLadder, {8}, {}}), 20, 10), CapExceededError);
}

TEST_CASE("hull is extensive, idempotent, monotone and matches brute force") {
    std::mt19937_64 rng(99);
    for (const Graph& g : small_corpus()) {
        const auto adj = brute::adjacency(g);
        for (int i = 0; i < 6; ++i) {
            const VertexSet w = random_subset(rng, g, 35);
            const VertexSet h = p3_hull(g, w).hull;
            CHECK(w.is_subset_of(h));
            CHECK(p3_hull(g, h).hull == h);
            CHECK(is_closed(g, h));
            CHECK(brute::to_mask(h) == brute::hull(adj, brute::to_mask(w)));
            VertexSet bigger = w;
            for (Vertex v = 0; v < g.n(); ++v) {
                if (rng() % 4 == 0) bigger.insert(v);
            }
            CHECK(h.is_subset_of(p3_hull(g, bigger).hull));
        }
    }
}

TEST_CASE("hull is independent of absorption order") {
    std::mt19937_64 rng(2024);
    const std::vector<Graph> graphs = {generate({Family::kLadder, {5}, {}}), generate({Family::kCycle, {8}, {}}),
                                       generate({Family::kCompleteBipartite, {3, 4}, {}}),
                                       generate({Family::kRandomCb, {12}, 4})};
    for (const Graph& g : graphs) {
        for (int inst = 0; inst < 5; ++inst) {
            const VertexSet w = random_subset(rng, g, 25);
            const VertexSet h = p3_hull(g, w).hull;
            for (int order = 0; order < 100; ++order) CHECK(shuffled_hull(rng, g, w) == h);
        }
    }
}

TEST_CASE("move closure is the least convex superset") {
    for (const Graph& g : small_corpus()) {
        if (g.n() > 7) continue;
        const auto convex = enumerate_convex_sets(g);
        for (const auto& u : convex) {
            if (u.is_full()) continue;
            for (Vertex x : detail::playable(g, g.all(), u)) {
                VertexSet ux = u;
                ux.insert(x);
                const VertexSet next = move_closure(g, u, x);
                CHECK(is_convex(g, next));
                for (const auto& c : convex) {
                    if (ux.is_subset_of(c)) CHECK(next.is_subset_of(c));
                }
            }
        }
    }
}

TEST_CASE("move closure rejects illegal moves with the violated rule") {
    const Graph g = generate({Family::kPath, {6}, {}});
    auto message = [&](const VertexSet& u, Vertex x) -> std::string {
        try {
            move_closure(g, u, x);
        } catch (const ContractError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message(g.set_of({0}), 0) == "vertex already in playground");
    CHECK(message(g.set_of({0}), 3) == "distance > 2 from playground");
    CHECK(message(g.set_of({0}), 9).find("out of range") != std::string::npos);
    CHECK(message(g.set_of({0, 2}), 4).find("not convex") != std::string::npos);
    CHECK(message(g.set_of({0}), 2).empty());
}

TEST_CASE("playable vertices") {
    const Graph g = generate({Family::kPath, {6}, {}});
    CHECK(detail::playable(g, g.all(), g.empty_set()).size() == 6);
    CHECK(detail::playable(g, g.all(), g.set_of({2})) == std::vector<Vertex>{0, 1, 3, 4});
}
