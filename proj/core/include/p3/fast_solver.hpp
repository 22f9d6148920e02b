#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "p3/games.hpp"
#include "p3/graph.hpp"

namespace p3 {

// A decomposed piece of the root game: the subgraph induced by `vertices`
// (ids relative to the root graph) with its own playground.
struct Subgame {
    VertexSet vertices;
    VertexSet playground;
};

struct SolveStats {
    std::uint64_t memo_entries = 0;
    std::uint64_t decompositions = 0;
    std::uint64_t positions_expanded = 0;  // mex fallback expansions
    std::uint64_t max_depth = 0;
    double ms = 0.0;
};

// Which separator to split on when a position admits several.
enum class SeparatorPolicy { kSmallest, kLargest, kRandom };

// kOrdinary: exact ordinary-game value via splitter nim-sums and mex
// expansion. kAugmentedMex: experimental pipeline that solves the augmented
// (finisher-trimmed, stuck-player-loses) game at the queried position and
// converts with mex{0, g*} when a finishing move exists. Not exact in general.
enum class FastStrategy { kOrdinary, kAugmentedMex };

inline constexpr std::uint64_t kDefaultFastBudget = 50'000'000;

struct FastOptions {
    std::uint64_t position_budget = kDefaultFastBudget;
    SeparatorPolicy policy = SeparatorPolicy::kSmallest;
    std::uint64_t seed = 0;
    FastStrategy strategy = FastStrategy::kOrdinary;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Candidates are N(C) for components C of G-u that separate G, and cutvertices
// of G inside u. std::nullopt when u contains no separator.
std::optional<SeparatorCertificate> find_splitter(const Graph& g, const VertexSet& u,
                                                  SeparatorPolicy policy = SeparatorPolicy::kSmallest);
// Every candidate separator inside u, in canonical order.
std::vector<VertexSet> splitter_candidates(const Graph& g, const VertexSet& u);

// One subgame per component C of G-S: vertices C u N(C), playground u n vertices.
std::vector<Subgame> decompose(const Graph& g, const VertexSet& u, const SeparatorCertificate& s);

// H(u): g minus every playable vertex whose move closes the playground to V.
InducedSubgraph trim_finishers(const Graph& g, const VertexSet& u);

class FastSolver {
public:
    // Throws DisconnectedGraphError.
    explicit FastSolver(const Graph& g, FastOptions options = {});

    // u must be convex. Throws BudgetExceededError when the position budget or
    // deadline is hit; the memo stays valid for later calls.
    Grundy grundy(const VertexSet& u);

    void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline) {
        options_.deadline = deadline;
    }

    const SolveStats& stats() const { return stats_; }
    const Graph& graph() const { return graph_; }

private:
    struct Key {
        VertexSet vertices;
        VertexSet playground;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return k.vertices.hash() * 0x9e3779b97f4a7c15ULL ^ k.playground.hash();
        }
    };

    Grundy solve(const VertexSet& vertices, const VertexSet& playground, std::uint64_t depth);
    Grundy solve_augmented(const VertexSet& playground);
    void charge();

    const Graph& graph_;
    FastOptions options_;
    VertexSet all_;
    std::uint64_t rng_state_;
    SolveStats stats_;
    std::unordered_map<Key, Grundy, KeyHash> memo_;
    std::unordered_map<VertexSet, Grundy, VertexSetHash> augmented_memo_;
};

std::pair<Grundy, SolveStats> grundy_fast(const Graph& g, const VertexSet& u, FastOptions options = {});

}  // namespace p3
