#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

using Grundy = std::uint32_t;

// ORDINARY is the P3-game proper. The two augmented variants forbid moves
// whose closure is V; they differ only in how a stuck position is scored:
// NORMAL_PLAY scores it 0 (the stuck player loses), ARC_TO_V routes it to an
// extra terminal node V, which scores it mex{0} = 1.
enum class GameVariant { kOrdinary, kAugmentedNormalPlay, kAugmentedArcToV };

std::string_view to_string(GameVariant v);
GameVariant parse_variant(std::string_view name);

enum class Player { kFirst, kSecond };
std::string_view to_string(Player p);
inline Player other(Player p) { return p == Player::kFirst ? Player::kSecond : Player::kFirst; }

Grundy mex(std::span<const Grundy> values);
Grundy nim_sum(std::span<const Grundy> values);

// Legal moves from a convex playground, ascending. Throws ContractError if u
// is not convex.
std::vector<Vertex> legal_moves(const Graph& g, const VertexSet& u, GameVariant variant);
// Distinct successor playgrounds in canonical order.
std::vector<VertexSet> successors(const Graph& g, const VertexSet& u, GameVariant variant);

inline constexpr std::uint64_t kDefaultOracleBudget = 20'000'000;

// Exhaustive memoized Grundy oracle for one graph and one variant.
class OracleSolver {
public:
    // Throws DisconnectedGraphError.
    OracleSolver(const Graph& g, GameVariant variant,
                 std::uint64_t position_budget = kDefaultOracleBudget);

    // u must be convex.
    Grundy grundy(const VertexSet& u);
    // Relaxed entry used for decomposed subgames, whose playgrounds need only be
    // closed (no outside vertex with two neighbours inside), not connected.
    Grundy grundy_of_closed(const VertexSet& u);

    // Solves running past the deadline throw BudgetExceededError; memo
    // entries computed so far stay valid.
    void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline) { deadline_ = deadline; }

    std::size_t memo_size() const { return memo_.size(); }
    const Graph& graph() const { return graph_; }
    GameVariant variant() const { return variant_; }

private:
    Grundy solve(const VertexSet& u);

    const Graph& graph_;
    GameVariant variant_;
    VertexSet all_;
    std::uint64_t budget_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::unordered_map<VertexSet, Grundy, VertexSetHash> memo_;
};

Grundy grundy(const Graph& g, const VertexSet& u, GameVariant variant = GameVariant::kOrdinary);

struct MoveEval {
    Vertex vertex;
    VertexSet resulting_playground;
    std::optional<Grundy> grundy_after;  // nullopt = unknown
    std::optional<bool> winning;
};

struct Analysis {
    Grundy grundy;
    Player winner;  // of the player to move at u
    std::vector<MoveEval> moves;
};

Analysis analyze(const Graph& g, const VertexSet& u, GameVariant variant = GameVariant::kOrdinary);
// Same, reusing an existing oracle's memo table.
Analysis analyze(OracleSolver& oracle, const VertexSet& u);

// Materialized game DAG reachable from a root playground.
struct GameGraph {
    GameVariant variant;
    std::vector<VertexSet> nodes;              // node 0 is the root
    std::vector<std::vector<std::size_t>> succ;
    std::vector<Grundy> labels;

    std::size_t arc_count() const;
    std::optional<std::size_t> find(const VertexSet& s) const;
};

inline constexpr std::size_t kDefaultNodeBudget = 2'000'000;

// Labels are assigned by label_topologically. In the ARC_TO_V variant the
// extra terminal node V is materialized with arcs from every stuck node.
GameGraph build_game_graph(const Graph& g, const VertexSet& root, GameVariant variant,
                           std::size_t node_budget = kDefaultNodeBudget);

// Independent labeling pass: Kahn's algorithm over reversed arcs, each label
// the mex of its successors' labels.
std::vector<Grundy> label_topologically(const GameGraph& gg);

std::string to_dot(const GameGraph& gg);
std::string to_json(const GameGraph& gg);

}  // namespace p3
