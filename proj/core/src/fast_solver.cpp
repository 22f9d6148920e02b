#include "p3/fast_solver.hpp"

#include <algorithm>

#include "p3/convexity.hpp"
#include "p3/errors.hpp"

namespace p3 {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Components of G[within] - removed, ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within,
                                         const VertexSet& removed) {
    std::vector<VertexSet> out;
    VertexSet seen = removed;
    std::vector<Vertex> stack;
    for (Vertex s : within) {
        if (seen.contains(s)) continue;
        VertexSet comp(within.universe());
        seen.insert(s);
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            comp.insert(u);
            for (Vertex v : g.neighbors(u)) {
                if (within.contains(v) && seen.insert(v)) stack.push_back(v);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet neighborhood_within(const Graph& g, const VertexSet& within, const VertexSet& s) {
    VertexSet out(within.universe());
    for (Vertex u : s) {
        for (Vertex v : g.neighbors(u)) {
            if (within.contains(v) && !s.contains(v)) out.insert(v);
        }
    }
    return out;
}

// Articulation vertices of the connected graph G[within].
VertexSet cutvertices_within(const Graph& g, const VertexSet& within) {
    const auto n = static_cast<std::size_t>(g.n());
    VertexSet cut(within.universe());
    if (within.size() < 3) return cut;
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<Vertex> parent(n, -1);
    std::vector<std::size_t> next_edge(n, 0);
    const Vertex root = within.first();
    int timer = 0;
    int root_children = 0;
    std::vector<Vertex> stack{root};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        const auto ui = static_cast<std::size_t>(u);
        const auto& nb = g.neighbors(u);
        if (next_edge[ui] < nb.size()) {
            const Vertex v = nb[next_edge[ui]++];
            if (!within.contains(v)) continue;
            const auto vi = static_cast<std::size_t>(v);
            if (disc[vi] == -1) {
                parent[vi] = u;
                disc[vi] = low[vi] = timer++;
                if (u == root) ++root_children;
                stack.push_back(v);
            } else if (v != parent[ui]) {
                low[ui] = std::min(low[ui], disc[vi]);
            }
        } else {
            stack.pop_back();
            const Vertex p = parent[ui];
            if (p >= 0) {
                const auto pi = static_cast<std::size_t>(p);
                low[pi] = std::min(low[pi], low[ui]);
                if (p != root && low[ui] >= disc[pi]) cut.insert(p);
            }
        }
    }
    if (root_children >= 2) cut.insert(root);
    return cut;
}

// Separators of G[within] contained in the playground, canonical order.
std::vector<VertexSet> candidates_within(const Graph& g, const VertexSet& within,
                                         const VertexSet& playground) {
    std::vector<VertexSet> out;
    if (playground.empty()) return out;
    const auto outside = components_within(g, within, playground);
    for (const auto& c : outside) {
        VertexSet s = neighborhood_within(g, within, c);
        if (s.empty()) continue;
        // C is a whole component of G[within]-S; S separates iff something
        // outside C u S remains: another component, or playground not in S.
        if (outside.size() >= 2 || s.size() < playground.size()) out.push_back(std::move(s));
    }
    for (Vertex v : cutvertices_within(g, within) & playground) {
        VertexSet s(within.universe());
        s.insert(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const VertexSet& pick(const std::vector<VertexSet>& candidates, SeparatorPolicy policy,
                      std::uint64_t& rng) {
    switch (policy) {
        case SeparatorPolicy::kSmallest: return candidates.front();
        case SeparatorPolicy::kLargest: return candidates.back();
        case SeparatorPolicy::kRandom: return candidates[splitmix64(rng) % candidates.size()];
    }
    return candidates.front();
}

std::vector<Subgame> decompose_within(const Graph& g, const VertexSet& within,
                                      const VertexSet& playground, const VertexSet& separator) {
    std::vector<Subgame> out;
    for (auto& c : components_within(g, within, separator)) {
        VertexSet vertices = c | neighborhood_within(g, within, c);
        VertexSet sub_playground = playground & vertices;
        out.push_back({std::move(vertices), std::move(sub_playground)});
    }
    return out;
}

void require_convex(const Graph& g, const VertexSet& u) {
    if (u.universe() != static_cast<std::size_t>(g.n())) {
        throw ContractError("playground universe does not match graph");
    }
    if (!is_convex(g, u)) throw ContractError("playground " + u.to_string() + " is not convex");
}

}  // namespace

std::vector<VertexSet> splitter_candidates(const Graph& g, const VertexSet& u) {
    require_convex(g, u);
    return candidates_within(g, g.all(), u);
}

std::optional<SeparatorCertificate> find_splitter(const Graph& g, const VertexSet& u,
                                                  SeparatorPolicy policy) {
    const auto candidates = splitter_candidates(g, u);
    if (candidates.empty()) return std::nullopt;
    std::uint64_t rng = u.hash();
    return certify_separator(g, pick(candidates, policy, rng));
}

std::vector<Subgame> decompose(const Graph& g, const VertexSet& u, const SeparatorCertificate& s) {
    require_convex(g, u);
    if (!s.separator.is_subset_of(u)) {
        throw ContractError("separator " + s.separator.to_string() + " is not inside the playground");
    }
    return decompose_within(g, g.all(), u, s.separator);
}

InducedSubgraph trim_finishers(const Graph& g, const VertexSet& u) {
    require_convex(g, u);
    const VertexSet all = g.all();
    VertexSet keep = all;
    for (Vertex x : detail::playable(g, all, u)) {
        VertexSet next = u;
        next.insert(x);
        detail::close_within(g, all, next);
        if (next.is_full()) keep.erase(x);
    }
    return induced_subgraph(g, keep);
}

FastSolver::FastSolver(const Graph& g, FastOptions options)
    : graph_(g), options_(options), all_(g.all()), rng_state_(options.seed) {
    if (!is_connected(g)) throw DisconnectedGraphError();
}

void FastSolver::charge() {
    const std::uint64_t spent = stats_.positions_expanded + stats_.decompositions;
    if (spent > options_.position_budget) {
        throw BudgetExceededError("position budget of " + std::to_string(options_.position_budget) +
                                  " exceeded after " + std::to_string(stats_.memo_entries) +
                                  " memo entries");
    }
    if (options_.deadline && (spent & 63) == 0 &&
        std::chrono::steady_clock::now() > *options_.deadline) {
        throw BudgetExceededError("time budget exceeded");
    }
}

Grundy FastSolver::grundy(const VertexSet& u) {
    require_convex(graph_, u);
    const auto start = std::chrono::steady_clock::now();
    struct Timer {
        SolveStats& stats;
        std::chrono::steady_clock::time_point start;
        ~Timer() {
            stats.ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    } timer{stats_, start};

    if (options_.strategy == FastStrategy::kAugmentedMex) {
        if (u.is_full()) return 0;
        const Grundy trimmed = solve_augmented(u);
        bool finisher = false;
        for (Vertex x : detail::playable(graph_, all_, u)) {
            VertexSet next = u;
            next.insert(x);
            detail::close_within(graph_, all_, next);
            finisher = finisher || next.is_full();
        }
        if (!finisher) return trimmed;
        const Grundy options[] = {0, trimmed};
        return mex(options);
    }
    return solve(all_, u, 0);
}

Grundy FastSolver::solve(const VertexSet& vertices, const VertexSet& playground, std::uint64_t depth) {
    if (playground == vertices) return 0;
    Key key{vertices, playground};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    charge();
    stats_.max_depth = std::max(stats_.max_depth, depth);

    Grundy value = 0;
    const auto candidates = candidates_within(graph_, vertices, playground);
    if (!candidates.empty()) {
        ++stats_.decompositions;
        const VertexSet& separator = pick(candidates, options_.policy, rng_state_);
        for (const auto& sub : decompose_within(graph_, vertices, playground, separator)) {
            value ^= solve(sub.vertices, sub.playground, depth + 1);
        }
    } else {
        ++stats_.positions_expanded;
        std::vector<Grundy> values;
        for (Vertex x : detail::playable(graph_, vertices, playground)) {
            VertexSet next = playground;
            next.insert(x);
            detail::close_within(graph_, vertices, next);
            values.push_back(solve(vertices, next, depth + 1));
        }
        value = mex(values);
    }
    memo_.emplace(std::move(key), value);
    stats_.memo_entries = memo_.size() + augmented_memo_.size();
    return value;
}

Grundy FastSolver::solve_augmented(const VertexSet& playground) {
    if (playground.is_full()) return 0;
    if (auto it = augmented_memo_.find(playground); it != augmented_memo_.end()) return it->second;
    charge();
    ++stats_.positions_expanded;
    std::vector<Grundy> values;
    for (Vertex x : detail::playable(graph_, all_, playground)) {
        VertexSet next = playground;
        next.insert(x);
        detail::close_within(graph_, all_, next);
        if (next.is_full()) continue;
        values.push_back(solve_augmented(next));
    }
    const Grundy value = mex(values);  // stuck: 0, the stuck player loses
    augmented_memo_.emplace(playground, value);
    stats_.memo_entries = memo_.size() + augmented_memo_.size();
    return value;
}

std::pair<Grundy, SolveStats> grundy_fast(const Graph& g, const VertexSet& u, FastOptions options) {
    FastSolver solver(g, options);
    const Grundy value = solver.grundy(u);
    return {value, solver.stats()};
}

}  // namespace p3
