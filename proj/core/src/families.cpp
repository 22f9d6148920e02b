#include "p3/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "p3/errors.hpp"

namespace p3 {

namespace {

const std::vector<FamilyInfo> kCatalog = {
    {Family::kPath, "path", {"n"}, "path on n vertices"},
    {Family::kCycle, "cycle", {"n"}, "cycle on n >= 3 vertices"},
    {Family::kLadder, "ladder", {"k"}, "2 x k grid: two stiles joined by k rungs"},
    {Family::kCompleteBipartite, "complete-bipartite", {"p", "q"}, "complete bipartite graph K(p,q)"},
    {Family::kStar, "star", {"k"}, "star K(1,k), centre 0"},
    {Family::kRandomTree, "random-tree", {"n"}, "uniform random labelled tree (seeded)"},
    {Family::kRandomCb, "random-cb", {"n", "target_edges?"},
     "random connected chordal bipartite graph grown from a random tree (seeded)"},
};

void require(bool ok, const std::string& message) {
    if (!ok) throw ContractError(message);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    // Decode a random Pruefer sequence.
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code) c = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    std::vector<Edge> edges;
    for (int c : code) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
    }
    const int u = *leaves.begin();
    const int v = *std::next(leaves.begin());
    edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_cb(int n, int target_edges, std::mt19937_64& rng) {
    Graph g = random_tree(n, rng);
    if (n < 4) return g;
    const Bipartition parts = bipartition(g);
    const auto a = parts.first.members();
    const auto b = parts.second.members();
    std::vector<Edge> edges = g.edges();
    std::set<Edge> present(edges.begin(), edges.end());
    const std::size_t max_edges = a.size() * b.size();
    const std::size_t target = std::min(static_cast<std::size_t>(target_edges), max_edges);
    std::size_t attempts = 50 * target + 100;
    while (edges.size() < target && attempts-- > 0) {
        const int u = a[bounded(rng, a.size())];
        const int v = b[bounded(rng, b.size())];
        const Edge e{std::min(u, v), std::max(u, v)};
        if (present.count(e)) continue;
        edges.push_back(e);
        Graph candidate(n, edges);
        if (is_chordal_bipartite(candidate, RecognitionStrategy::kBisimplicial).chordal_bipartite) {
            present.insert(e);
            g = std::move(candidate);
        } else {
            edges.pop_back();
        }
    }
    return g;
}

std::vector<VertexSet> adjacency_rows(const Graph& g) {
    std::vector<VertexSet> rows;
    rows.reserve(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) rows.push_back(g.set_of(g.neighbors(v)));
    return rows;
}

// Depth-first search over induced paths starting at their smallest vertex.
bool find_long_induced_cycle(const Graph& g, std::vector<Vertex>& witness) {
    const auto rows = adjacency_rows(g);
    std::vector<Vertex> path;
    VertexSet on_path(static_cast<std::size_t>(g.n()));
    std::function<bool()> extend = [&]() -> bool {
        const Vertex start = path.front();
        const Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            if (w <= start || on_path.contains(w)) continue;
            const auto& nw = rows[static_cast<std::size_t>(w)];
            bool interior_chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (nw.contains(path[i])) {
                    interior_chord = true;
                    break;
                }
            }
            if (interior_chord) continue;
            if (path.size() >= 2 && nw.contains(start)) {
                if (path.size() + 1 >= 6) {
                    witness = path;
                    witness.push_back(w);
                    return true;
                }
                continue;  // short induced cycle; extending past w would add a chord
            }
            path.push_back(w);
            on_path.insert(w);
            if (extend()) return true;
            on_path.erase(w);
            path.pop_back();
        }
        return false;
    };
    for (Vertex s = 0; s < g.n(); ++s) {
        path.assign(1, s);
        on_path.clear();
        on_path.insert(s);
        if (extend()) return true;
    }
    return false;
}

bool bisimplicial_elimination(const Graph& g) {
    auto rows = adjacency_rows(g);
    std::size_t remaining = g.edge_count();
    while (remaining > 0) {
        bool removed = false;
        for (Vertex u = 0; u < g.n() && !removed; ++u) {
            const VertexSet nu = rows[static_cast<std::size_t>(u)];
            for (Vertex v : nu) {
                if (v < u) continue;
                const auto& nv = rows[static_cast<std::size_t>(v)];
                // uv is bisimplicial iff N(u) u N(v) induces a complete
                // bipartite graph: every x in N(u) sees all of N(v).
                bool complete = true;
                for (Vertex x : nu) {
                    if (!nv.is_subset_of(rows[static_cast<std::size_t>(x)])) {
                        complete = false;
                        break;
                    }
                }
                if (!complete) continue;
                rows[static_cast<std::size_t>(u)].erase(v);
                rows[static_cast<std::size_t>(v)].erase(u);
                --remaining;
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

std::vector<int> refine_colors(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> color(n);
    for (Vertex v = 0; v < g.n(); ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (Vertex v = 0; v < g.n(); ++v) {
            auto& [own, nbrs] = sig[static_cast<std::size_t>(v)];
            own = color[static_cast<std::size_t>(v)];
            for (Vertex w : g.neighbors(v)) nbrs.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(nbrs.begin(), nbrs.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; ++v) {
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
        if (sorted.size() == classes) break;
        classes = sorted.size();
    }
    return color;
}

std::size_t pair_bit(int i, int j) {
    // i < j; row-major over the upper triangle.
    return static_cast<std::size_t>(j * (j - 1) / 2 + i);
}

template <typename Visit>
void connected_levels(int n, bool chordal_bipartite_only, Visit&& visit_level_n) {
    std::map<std::uint64_t, Graph> level;
    level.emplace(canonical_code(Graph(1, {})), Graph(1, {}));
    for (int size = 2; size <= n; ++size) {
        std::map<std::uint64_t, Graph> next;
        for (const auto& [code, base] : level) {
            const auto edges = base.edges();
            for (std::uint32_t mask = 1; mask < (1U << (size - 1)); ++mask) {
                std::vector<Edge> grown = edges;
                for (int v = 0; v < size - 1; ++v) {
                    if (mask & (1U << v)) grown.emplace_back(v, size - 1);
                }
                Graph candidate(size, grown);
                if (chordal_bipartite_only &&
                    !is_chordal_bipartite(candidate, RecognitionStrategy::kDefinitional).chordal_bipartite) {
                    continue;
                }
                const std::uint64_t c = canonical_code(candidate);
                if (!next.count(c)) next.emplace(c, from_canonical_code(size, c));
            }
        }
        level = std::move(next);
    }
    for (const auto& [code, g] : level) visit_level_n(g);
}

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& info : kCatalog) {
        if (info.family == f) return info.name;
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (const auto& info : kCatalog) {
        if (info.name == name) return info.family;
    }
    throw ContractError("unknown family \"" + std::string(name) + "\"");
}

const std::vector<FamilyInfo>& family_catalog() { return kCatalog; }

Graph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto arity = [&](std::size_t lo, std::size_t hi) {
        require(p.size() >= lo && p.size() <= hi,
                std::string(to_string(spec.family)) + ": wrong number of parameters");
    };
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::kPath: {
            arity(1, 1);
            require(p[0] >= 1, "path: n must be >= 1");
            for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
            return Graph(p[0], edges);
        }
        case Family::kCycle: {
            arity(1, 1);
            require(p[0] >= 3, "cycle: n must be >= 3");
            for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, p[0] - 1);
            return Graph(p[0], edges);
        }
        case Family::kLadder: {
            arity(1, 1);
            const int k = p[0];
            require(k >= 1, "ladder: k must be >= 1");
            for (int i = 0; i + 1 < k; ++i) {
                edges.emplace_back(i, i + 1);
                edges.emplace_back(k + i, k + i + 1);
            }
            for (int i = 0; i < k; ++i) edges.emplace_back(i, k + i);
            return Graph(2 * k, edges);
        }
        case Family::kCompleteBipartite: {
            arity(2, 2);
            require(p[0] >= 1 && p[1] >= 1, "complete-bipartite: p, q must be >= 1");
            for (int i = 0; i < p[0]; ++i) {
                for (int j = 0; j < p[1]; ++j) edges.emplace_back(i, p[0] + j);
            }
            return Graph(p[0] + p[1], edges);
        }
        case Family::kStar: {
            arity(1, 1);
            require(p[0] >= 1, "star: k must be >= 1");
            for (int i = 1; i <= p[0]; ++i) edges.emplace_back(0, i);
            return Graph(p[0] + 1, edges);
        }
        case Family::kRandomTree: {
            arity(1, 1);
            require(p[0] >= 1, "random-tree: n must be >= 1");
            std::mt19937_64 rng(spec.seed.value_or(0));
            return random_tree(p[0], rng);
        }
        case Family::kRandomCb: {
            arity(1, 2);
            require(p[0] >= 1, "random-cb: n must be >= 1");
            const int target = p.size() > 1 ? p[1] : p[0] + p[0] / 2;
            require(target >= 0, "random-cb: target_edges must be >= 0");
            std::mt19937_64 rng(spec.seed.value_or(0));
            return random_cb(p[0], target, rng);
        }
    }
    throw ContractError("unknown family");
}

ChordalBipartiteResult is_chordal_bipartite(const Graph& g, RecognitionStrategy strategy) {
    ChordalBipartiteResult out;
    try {
        bipartition(g);
    } catch (const NotBipartiteError& e) {
        out.witness = e.cycle();
        return out;
    }
    if (strategy == RecognitionStrategy::kAuto) {
        strategy = g.n() <= kDefinitionalCap ? RecognitionStrategy::kDefinitional
                                             : RecognitionStrategy::kBisimplicial;
    }
    if (strategy == RecognitionStrategy::kDefinitional) {
        if (g.n() > kDefinitionalCap) {
            throw CapExceededError("vertex count", static_cast<std::size_t>(g.n()), kDefinitionalCap);
        }
        out.chordal_bipartite = !find_long_induced_cycle(g, out.witness);
        return out;
    }
    out.chordal_bipartite = bisimplicial_elimination(g);
    return out;
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.n();
    if (n > kCanonicalCap) {
        throw CapExceededError("vertex count", static_cast<std::size_t>(n), kCanonicalCap);
    }
    const auto color = refine_colors(g);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
    });
    // Cells are runs of equal colour; only permutations inside cells are tried.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && color[static_cast<std::size_t>(order[j])] ==
                                       color[static_cast<std::size_t>(order[i])]) {
            ++j;
        }
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> permute = [&](std::size_t cell) {
        if (cell == cells.size()) {
            std::uint64_t code = 0;
            for (int j = 1; j < n; ++j) {
                for (int i = 0; i < j; ++i) {
                    if (g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
                        code |= std::uint64_t{1} << pair_bit(i, j);
                    }
                }
            }
            best = std::min(best, code);
            return;
        }
        auto [lo, hi] = cells[cell];
        auto first = order.begin() + static_cast<std::ptrdiff_t>(lo);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(hi);
        std::sort(first, last);
        do {
            permute(cell + 1);
        } while (std::next_permutation(first, last));
    };
    permute(0);
    // Fold n in so graphs of different orders never collide.
    return best | (static_cast<std::uint64_t>(n) << 59);
}

Graph from_canonical_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (code & (std::uint64_t{1} << pair_bit(i, j))) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > kEnumerationCap) {
        throw CapExceededError("vertex count", static_cast<std::size_t>(std::max(n, 0)), kEnumerationCap);
    }
    std::vector<Graph> out;
    connected_levels(n, false, [&](const Graph& g) { out.push_back(g); });
    return out;
}

void for_each_chordal_bipartite(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > kEnumerationCap) {
        throw CapExceededError("vertex count", static_cast<std::size_t>(std::max(n, 0)), kEnumerationCap);
    }
    connected_levels(n, true, visit);
}

std::vector<Graph> enumerate_chordal_bipartite(int n) {
    std::vector<Graph> out;
    for_each_chordal_bipartite(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace p3
