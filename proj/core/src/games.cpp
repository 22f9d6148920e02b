#include "p3/games.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"
#include "p3/convexity.hpp"
#include "p3/errors.hpp"

namespace p3 {

std::string_view to_string(GameVariant v) {
    switch (v) {
        case GameVariant::kOrdinary: return "ordinary";
        case GameVariant::kAugmentedNormalPlay: return "augmented-normal-play";
        case GameVariant::kAugmentedArcToV: return "augmented-arc-to-v";
    }
    return "?";
}

GameVariant parse_variant(std::string_view name) {
    if (name == "ordinary") return GameVariant::kOrdinary;
    if (name == "augmented" || name == "augmented-normal-play") return GameVariant::kAugmentedNormalPlay;
    if (name == "augmented-arc-to-v") return GameVariant::kAugmentedArcToV;
    throw ContractError("unknown game variant \"" + std::string(name) + "\"");
}

std::string_view to_string(Player p) { return p == Player::kFirst ? "first" : "second"; }

Grundy mex(std::span<const Grundy> values) {
    // Values >= size cannot affect the answer.
    std::vector<char> present(values.size() + 1, 0);
    for (Grundy v : values) {
        if (v < present.size()) present[v] = 1;
    }
    Grundy m = 0;
    while (present[m]) ++m;
    return m;
}

Grundy nim_sum(std::span<const Grundy> values) {
    Grundy acc = 0;
    for (Grundy v : values) acc ^= v;
    return acc;
}

namespace {

bool is_augmented(GameVariant v) { return v != GameVariant::kOrdinary; }

void require_position(const Graph& g, const VertexSet& u) {
    if (!is_connected(g)) throw DisconnectedGraphError();
    if (u.universe() != static_cast<std::size_t>(g.n())) {
        throw ContractError("playground universe does not match graph");
    }
    if (!is_convex(g, u)) throw ContractError("playground " + u.to_string() + " is not convex");
}

// (move, resulting playground) pairs for a closed playground, variant-filtered.
std::vector<std::pair<Vertex, VertexSet>> moves_with_results(const Graph& g, const VertexSet& all,
                                                             const VertexSet& u, GameVariant variant) {
    std::vector<std::pair<Vertex, VertexSet>> out;
    for (Vertex x : detail::playable(g, all, u)) {
        VertexSet next = u;
        next.insert(x);
        detail::close_within(g, all, next);
        if (is_augmented(variant) && next.is_full()) continue;
        out.emplace_back(x, std::move(next));
    }
    return out;
}

}  // namespace

std::vector<Vertex> legal_moves(const Graph& g, const VertexSet& u, GameVariant variant) {
    require_position(g, u);
    std::vector<Vertex> out;
    for (auto& [x, next] : moves_with_results(g, g.all(), u, variant)) out.push_back(x);
    return out;
}

std::vector<VertexSet> successors(const Graph& g, const VertexSet& u, GameVariant variant) {
    require_position(g, u);
    std::vector<VertexSet> out;
    for (auto& [x, next] : moves_with_results(g, g.all(), u, variant)) out.push_back(std::move(next));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OracleSolver::OracleSolver(const Graph& g, GameVariant variant, std::uint64_t position_budget)
    : graph_(g), variant_(variant), all_(g.all()), budget_(position_budget) {
    if (!is_connected(g)) throw DisconnectedGraphError();
}

Grundy OracleSolver::grundy(const VertexSet& u) {
    require_position(graph_, u);
    return solve(u);
}

Grundy OracleSolver::grundy_of_closed(const VertexSet& u) {
    if (u.universe() != all_.universe() || !is_closed(graph_, u)) {
        throw ContractError("playground " + u.to_string() + " is not closed");
    }
    return solve(u);
}

Grundy OracleSolver::solve(const VertexSet& u) {
    if (u.is_full()) return 0;
    if (auto it = memo_.find(u); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_) {
        throw BudgetExceededError("oracle position budget of " + std::to_string(budget_) +
                                  " exceeded");
    }
    if (deadline_ && (memo_.size() & 63) == 0 && std::chrono::steady_clock::now() > *deadline_) {
        throw BudgetExceededError("time budget exceeded");
    }
    std::vector<Grundy> values;
    for (auto& [x, next] : moves_with_results(graph_, all_, u, variant_)) {
        values.push_back(solve(next));
    }
    Grundy value = 0;
    if (values.empty() && variant_ == GameVariant::kAugmentedArcToV) {
        value = 1;  // the sole option is the appended terminal V, labelled 0
    } else {
        value = mex(values);
    }
    memo_.emplace(u, value);
    return value;
}

Grundy grundy(const Graph& g, const VertexSet& u, GameVariant variant) {
    OracleSolver oracle(g, variant);
    return oracle.grundy(u);
}

Analysis analyze(OracleSolver& oracle, const VertexSet& u) {
    const Graph& g = oracle.graph();
    Analysis out{oracle.grundy(u), Player::kFirst, {}};
    out.winner = out.grundy != 0 ? Player::kFirst : Player::kSecond;
    for (auto& [x, next] : moves_with_results(g, g.all(), u, oracle.variant())) {
        const Grundy after = oracle.grundy(next);
        out.moves.push_back({x, next, after, after == 0});
    }
    return out;
}

Analysis analyze(const Graph& g, const VertexSet& u, GameVariant variant) {
    OracleSolver oracle(g, variant);
    return analyze(oracle, u);
}

std::size_t GameGraph::arc_count() const {
    std::size_t c = 0;
    for (const auto& s : succ) c += s.size();
    return c;
}

std::optional<std::size_t> GameGraph::find(const VertexSet& s) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == s) return i;
    }
    return std::nullopt;
}

GameGraph build_game_graph(const Graph& g, const VertexSet& root, GameVariant variant,
                           std::size_t node_budget) {
    require_position(g, root);
    GameGraph gg{variant, {}, {}, {}};
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> index;
    auto intern = [&](const VertexSet& s) {
        auto [it, inserted] = index.emplace(s, gg.nodes.size());
        if (inserted) {
            if (gg.nodes.size() >= node_budget) {
                throw BudgetExceededError("game graph node budget of " + std::to_string(node_budget) +
                                          " exceeded");
            }
            gg.nodes.push_back(s);
            gg.succ.emplace_back();
        }
        return it->second;
    };
    intern(root);
    const VertexSet all = g.all();
    std::vector<std::size_t> stuck;
    for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
        const VertexSet u = gg.nodes[i];
        if (u.is_full()) continue;
        std::vector<VertexSet> next;
        for (auto& [x, s] : moves_with_results(g, all, u, variant)) next.push_back(std::move(s));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<std::size_t> targets;
        for (const auto& s : next) targets.push_back(intern(s));
        gg.succ[i] = std::move(targets);
        if (gg.succ[i].empty()) stuck.push_back(i);
    }
    if (variant == GameVariant::kAugmentedArcToV && !stuck.empty()) {
        const std::size_t terminal = intern(all);
        for (std::size_t i : stuck) gg.succ[i].push_back(terminal);
    }
    gg.labels = label_topologically(gg);
    return gg;
}

std::vector<Grundy> label_topologically(const GameGraph& gg) {
    const std::size_t count = gg.nodes.size();
    std::vector<std::vector<std::size_t>> pred(count);
    std::vector<std::size_t> pending(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        pending[i] = gg.succ[i].size();
        for (std::size_t j : gg.succ[i]) pred[j].push_back(i);
    }
    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < count; ++i) {
        if (pending[i] == 0) ready.push_back(i);
    }
    std::vector<Grundy> labels(count, 0);
    std::size_t done = 0;
    while (!ready.empty()) {
        const std::size_t i = ready.front();
        ready.pop_front();
        std::vector<Grundy> succ_labels;
        for (std::size_t j : gg.succ[i]) succ_labels.push_back(labels[j]);
        labels[i] = mex(succ_labels);
        ++done;
        for (std::size_t p : pred[i]) {
            if (--pending[p] == 0) ready.push_back(p);
        }
    }
    if (done != count) throw ContractError("game graph contains a cycle");
    return labels;
}

std::string to_dot(const GameGraph& gg) {
    std::ostringstream out;
    out << "digraph game {\n";
    out << "  // variant: " << to_string(gg.variant) << "\n";
    for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << gg.nodes[i].to_string() << ':' << gg.labels[i] << "\"];\n";
    }
    for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
        for (std::size_t j : gg.succ[i]) out << "  n" << i << " -> n" << j << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_json(const GameGraph& gg) {
    nlohmann::json doc;
    doc["variant"] = std::string(to_string(gg.variant));
    auto nodes = nlohmann::json::array();
    for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
        nodes.push_back({{"set", gg.nodes[i].members()}, {"grundy", gg.labels[i]}, {"succ", gg.succ[i]}});
    }
    doc["nodes"] = std::move(nodes);
    return doc.dump();
}

}  // namespace p3
