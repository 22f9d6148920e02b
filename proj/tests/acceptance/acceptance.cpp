// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Reference values come from the brute-force oracles in tests/support.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "p3/claims.hpp"
#include "p3/convexity.hpp"
#include "p3/families.hpp"
#include "p3/fast_solver.hpp"
#include "p3/games.hpp"

using namespace p3;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits, in seconds.
constexpr double kFixedVectorLimit = 1.0;
constexpr double kDualOracleLimit = 300.0;
constexpr double kDecompositionLimit = 1800.0;
constexpr double kPerformanceLimit = 60.0;

constexpr int kRandomPositions = 500;
constexpr int kShuffledOrders = 100;

struct Outcome {
    bool ok = true;
    std::string detail;
};

const GameVariant kVariants[] = {GameVariant::kOrdinary, GameVariant::kAugmentedNormalPlay,
                                 GameVariant::kAugmentedArcToV};

std::vector<Graph> connected_up_to(int n) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        for (auto& g : enumerate_connected(k)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Vertex> winning_first_moves(const Graph& g) {
    std::vector<Vertex> out;
    for (const auto& m : analyze(g, g.empty_set()).moves) {
        if (m.winning.value_or(false)) out.push_back(m.vertex);
    }
    return out;
}

// Random convex position reached by random legal moves, never V.
VertexSet random_position(std::mt19937_64& rng, const Graph& g) {
    VertexSet u = g.empty_set();
    const int steps = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n()));
    for (int i = 0; i < steps; ++i) {
        const auto moves = detail::playable(g, g.all(), u);
        const VertexSet next = move_closure(g, u, moves[rng() % moves.size()]);
        if (next.is_full()) break;
        u = next;
    }
    return u;
}

Outcome fixed_vectors() {
    const auto start = Clock::now();
    struct Vector {
        const char* name;
        Graph g;
        Grundy value;
        std::vector<Vertex> winning;
    };
    const std::vector<Vector> vectors = {
        {"K1", Graph(1, {}), 1, {0}},
        {"K2", Graph(2, {{0, 1}}), 0, {}},
        {"P3", generate({Family::kPath, {3}, {}}), 1, {1}},
        {"P4", generate({Family::kPath, {4}, {}}), 1, {0, 3}},
        {"C4", generate({Family::kCycle, {4}, {}}), 0, {}},
    };
    Outcome out;
    std::ostringstream detail;
    for (const auto& v : vectors) {
        const Grundy oracle = grundy(v.g, v.g.empty_set());
        const Grundy fast = grundy_fast(v.g, v.g.empty_set()).first;
        const Grundy ref = brute::Grundy(v.g, GameVariant::kOrdinary)(0);
        const auto winning = winning_first_moves(v.g);
        const bool ok = oracle == v.value && fast == v.value && ref == v.value && winning == v.winning;
        out.ok = out.ok && ok;
        detail << v.name << "=" << oracle << (ok ? " " : "(mismatch) ");
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= kFixedVectorLimit) out.ok = false;
    detail << "in " << secs << "s";
    out.detail = detail.str();
    return out;
}

Outcome dual_oracle() {
    const auto start = Clock::now();
    std::uint64_t compared = 0;
    std::uint64_t mismatches = 0;
    std::size_t graphs = 0;
    for (const Graph& g : connected_up_to(6)) {
        ++graphs;
        const auto positions = enumerate_convex_sets(g);
        for (GameVariant v : kVariants) {
            OracleSolver dfs(g, v);
            const GameGraph gg = build_game_graph(g, g.empty_set(), v);
            for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
                ++compared;
                if (gg.labels[i] != dfs.grundy_of_closed(gg.nodes[i])) ++mismatches;
            }
            // Convex positions not reachable from the empty playground get their own DAG.
            for (const auto& u : positions) {
                if (gg.find(u)) continue;
                if (u.is_full() && v == GameVariant::kAugmentedNormalPlay) continue;
                const GameGraph rooted = build_game_graph(g, u, v);
                ++compared;
                if (rooted.labels[0] != dfs.grundy(u)) ++mismatches;
            }
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream d;
    d << graphs << " graphs, " << compared << " labelled nodes, " << mismatches << " mismatches, " << secs << "s";
    return {mismatches == 0 && secs < kDualOracleLimit, d.str()};
}

Outcome decomposition_gate() {
    const auto start = Clock::now();
    const ClaimReport r = run_claim("CL8", "cb-n<=8");
    // Independent recomputation with the brute-force solver on each side.
    std::uint64_t positions = 0;
    std::uint64_t mismatches = 0;
    for (const Graph& g : load_corpus("cb-n<=8").graphs) {
        brute::Grundy whole(g, GameVariant::kOrdinary);
        for (const auto& u : build_game_graph(g, g.empty_set(), GameVariant::kOrdinary).nodes) {
            const auto cert = find_splitter(g, u);
            if (!cert) continue;
            ++positions;
            Grundy acc = 0;
            for (const auto& sub : decompose(g, u, *cert)) {
                const auto local = induced_subgraph(g, sub.vertices);
                brute::Grundy part(local.graph, GameVariant::kOrdinary);
                acc ^= part(brute::to_mask(local.restrict(sub.playground)));
            }
            if (acc != whole(brute::to_mask(u))) ++mismatches;
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream d;
    d << "claim " << to_string(r.verdict) << " over " << r.checks << " checks; independent recheck " << positions
      << " splitter positions, " << mismatches << " mismatches, " << secs << "s";
    return {r.verdict == Verdict::kPass && mismatches == 0 && positions > 0 && secs < kDecompositionLimit, d.str()};
}

Outcome fast_equivalence() {
    std::uint64_t corpus_positions = 0;
    std::uint64_t mismatches = 0;
    std::string first_bad;
    auto compare = [&](const Graph& g, const VertexSet& u, Grundy fast, Grundy want) {
        if (fast == want) return;
        if (mismatches++ == 0) first_bad = serialize_graph(g) + " at " + u.to_string();
    };
    for (const Graph& g : load_corpus("cb-n<=8").graphs) {
        FastSolver fast(g);
        brute::Grundy ref(g, GameVariant::kOrdinary);
        for (const auto& u : build_game_graph(g, g.empty_set(), GameVariant::kOrdinary).nodes) {
            ++corpus_positions;
            compare(g, u, fast.grundy(u), ref(brute::to_mask(u)));
        }
    }
    std::mt19937_64 rng(2024);
    for (int i = 0; i < kRandomPositions; ++i) {
        const int n = 9 + i % 4;
        const Graph g = i % 2 == 0 ? generate({Family::kRandomCb, {n}, rng()}) : generate({Family::kRandomTree, {n}, rng()});
        const VertexSet u = random_position(rng, g);
        const Grundy want = brute::Grundy(g, GameVariant::kOrdinary)(brute::to_mask(u));
        compare(g, u, grundy_fast(g, u).first, want);
        compare(g, u, grundy(g, u), want);
    }
    std::ostringstream d;
    d << corpus_positions << " corpus positions and " << kRandomPositions << " random positions, " << mismatches
      << " mismatches";
    if (!first_bad.empty()) d << "; first: " << first_bad;
    return {mismatches == 0, d.str()};
}

// Absorbs eligible vertices in a random order.
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

Outcome convexity_invariants() {
    std::vector<Graph> corpus = connected_up_to(7);
    for (auto& g : enumerate_chordal_bipartite(8)) corpus.push_back(std::move(g));
    for (auto& g : load_corpus("ladder-k<=4").graphs) corpus.push_back(std::move(g));
    std::mt19937_64 rng(99);
    std::uint64_t checks = 0;
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const char* what, const Graph& g) {
        ++checks;
        if (!ok && failures.size() < 3) failures.push_back(std::string(what) + " on " + serialize_graph(g));
    };
    for (const Graph& g : corpus) {
        const auto adj = brute::adjacency(g);
        const brute::Mask all = brute::full(g.n());
        std::vector<brute::Mask> convex;
        for (const auto& u : enumerate_convex_sets(g)) convex.push_back(brute::to_mask(u));
        std::sort(convex.begin(), convex.end());
        expect(convex == brute::convex_sets(adj), "enumeration", g);

        for (int t = 0; t < 8; ++t) {
            const brute::Mask w = static_cast<brute::Mask>(rng()) & all;
            const brute::Mask wider = w | (static_cast<brute::Mask>(rng()) & all);
            const VertexSet h = p3_hull(g, brute::to_set(g, w)).hull;
            const brute::Mask hm = brute::to_mask(h);
            expect((hm & w) == w, "extensive", g);
            expect(p3_hull(g, h).hull == h, "idempotent", g);
            expect((hm & ~brute::to_mask(p3_hull(g, brute::to_set(g, wider)).hull)) == 0, "monotone", g);
            expect(hm == brute::hull(adj, w), "hull value", g);
            for (int k = 0; k < kShuffledOrders; ++k) {
                std::vector<Vertex> seeds = brute::to_set(g, w).members();
                std::shuffle(seeds.begin(), seeds.end(), rng);
                VertexSet grown = g.empty_set();
                for (Vertex v : seeds) {
                    grown.insert(v);
                    grown = shuffled_hull(rng, g, grown);
                }
                expect(grown == h, "order independence", g);
            }
        }

        for (const brute::Mask u : convex) {
            if (u == all) continue;
            const VertexSet us = brute::to_set(g, u);
            for (Vertex x : detail::playable(g, g.all(), us)) {
                const brute::Mask mc = brute::to_mask(move_closure(g, us, x));
                const brute::Mask seed = u | (brute::Mask{1} << x);
                brute::Mask meet = all;
                for (const brute::Mask c : convex) {
                    if ((c & seed) == seed) meet &= c;
                }
                expect(brute::convex(adj, mc), "move closure convex", g);
                expect(mc == meet, "move closure minimal", g);
            }
        }
    }
    std::ostringstream d;
    d << corpus.size() << " graphs, " << checks << " checks";
    for (const auto& f : failures) d << "; failed " << f;
    return {failures.empty(), d.str()};
}

Outcome claims_report() {
    std::vector<ClaimReport> reports;
    for (const auto& c : claim_catalog()) reports.push_back(run_claim(c.id));
    std::size_t fails = 0;
    std::size_t unreplayable = 0;
    for (const auto& r : reports) {
        if (r.verdict != Verdict::kFail) continue;
        ++fails;
        if (r.witnesses.empty()) ++unreplayable;
        for (const auto& w : r.witnesses) {
            if (!replays(r.claim_id, w)) ++unreplayable;
        }
    }

    const Graph ladder = generate({Family::kLadder, {3}, {}});
    const ClaimReport cl5 = run_claim("CL5", "ladder-k=3");
    const bool block = std::any_of(cl5.witnesses.begin(), cl5.witnesses.end(), [](const Witness& w) {
        return w.position == std::vector<Vertex>{0, 1, 3, 4} && w.actual == "convex";
    });
    const bool block_convex = brute::convex(brute::adjacency(ladder), 0b011011);

    const VertexSet direct = brute::to_set(ladder, brute::hull(brute::adjacency(ladder), 0b010001));
    const ClaimReport cl4 = run_claim("CL4", "ladder-k=3");
    const auto w4 = std::find_if(cl4.witnesses.begin(), cl4.witnesses.end(),
                                 [](const Witness& w) { return w.position == std::vector<Vertex>{0, 4}; });
    const bool cl4_fails = cl4.verdict == Verdict::kFail;
    const bool cl4_agrees = cl4_fails == !direct.is_full() && (!cl4_fails || (w4 != cl4.witnesses.end() && w4->actual == direct.to_string()));

    std::ostringstream d;
    d << reports.size() << " claims, " << fails << " FAIL, " << unreplayable << " without replayable witness; "
      << "ladder-3 block " << (block ? "reported" : "missing") << "; CL4 ladder-3 " << to_string(cl4.verdict)
      << " vs direct hull " << direct.to_string();
    return {unreplayable == 0 && block && block_convex && cl4_agrees, d.str()};
}

Outcome performance(Family family, int param, std::uint64_t seed) {
    const Graph g = generate({family, {param}, seed});
    FastOptions options;
    options.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(kPerformanceLimit));
    const auto start = Clock::now();
    const auto [value, stats] = grundy_fast(g, g.empty_set(), options);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream d;
    d << to_string(family) << " " << param << ": grundy " << value << ", " << stats.positions_expanded
      << " positions, " << stats.decompositions << " decompositions, " << stats.memo_entries << " memo entries, depth "
      << stats.max_depth << ", " << secs << "s";
    return {secs < kPerformanceLimit, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"fixed-vectors", fixed_vectors},
        {"dual-oracle", dual_oracle},
        {"decomposition-gate", decomposition_gate},
        {"fast-equivalence", fast_equivalence},
        {"convexity-invariants", convexity_invariants},
        {"claims-report", claims_report},
        {"performance-random-tree-300", [] { return performance(Family::kRandomTree, 300, 1); }},
        {"performance-ladder-50", [] { return performance(Family::kLadder, 50, 0); }},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
