#include "p3/convexity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>

#include "p3/errors.hpp"

namespace p3 {

bool is_closed(const Graph& g, const VertexSet& u) {
    std::vector<int> inside(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : u) {
        for (Vertex w : g.neighbors(v)) {
            if (!u.contains(w) && ++inside[static_cast<std::size_t>(w)] >= 2) return false;
        }
    }
    return true;
}

bool is_convex(const Graph& g, const VertexSet& u) {
    return u.empty() || (is_connected_subset(g, u) && is_closed(g, u));
}

HullResult p3_hull(const Graph& g, const VertexSet& w) {
    HullResult out{w, false, {}};
    std::vector<int> inside(static_cast<std::size_t>(g.n()), 0);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> eligible;
    for (Vertex v : w) {
        for (Vertex x : g.neighbors(v)) {
            if (!w.contains(x) && ++inside[static_cast<std::size_t>(x)] == 2) eligible.push(x);
        }
    }
    while (!eligible.empty()) {
        const Vertex v = eligible.top();
        eligible.pop();
        std::array<Vertex, 2> witnesses{-1, -1};
        int found = 0;
        for (Vertex x : g.neighbors(v)) {
            if (out.hull.contains(x) && found < 2) witnesses[static_cast<std::size_t>(found++)] = x;
        }
        out.hull.insert(v);
        out.addition_order.push_back({v, witnesses});
        for (Vertex x : g.neighbors(v)) {
            if (!out.hull.contains(x) && ++inside[static_cast<std::size_t>(x)] == 2) eligible.push(x);
        }
    }
    out.connected = is_connected_subset(g, out.hull);
    return out;
}

namespace detail {

void close_within(const Graph& g, const VertexSet& within, VertexSet& set) {
    thread_local std::vector<int> inside;
    thread_local std::vector<Vertex> touched;
    thread_local std::vector<Vertex> pending;
    inside.assign(static_cast<std::size_t>(g.n()), 0);
    touched.clear();
    pending.clear();
    auto bump = [&](Vertex v) {
        for (Vertex x : g.neighbors(v)) {
            if (!set.contains(x) && within.contains(x) && ++inside[static_cast<std::size_t>(x)] == 2) {
                pending.push_back(x);
            }
        }
    };
    for (Vertex v : set) bump(v);
    while (!pending.empty()) {
        const Vertex v = pending.back();
        pending.pop_back();
        if (set.insert(v)) bump(v);
    }
}

bool within_two(const Graph& g, const VertexSet& within, const VertexSet& playground, Vertex x) {
    if (!within.contains(x) || playground.contains(x)) return false;
    if (playground.empty()) return true;
    for (Vertex y : g.neighbors(x)) {
        if (!within.contains(y)) continue;
        if (playground.contains(y)) return true;
        for (Vertex z : g.neighbors(y)) {
            if (playground.contains(z)) return true;
        }
    }
    return false;
}

std::vector<Vertex> playable(const Graph& g, const VertexSet& within, const VertexSet& playground) {
    std::vector<Vertex> out;
    if (playground.empty()) {
        for (Vertex v : within) out.push_back(v);
        return out;
    }
    VertexSet mark(within.universe());
    for (Vertex u : playground) {
        for (Vertex y : g.neighbors(u)) {
            if (!within.contains(y) || playground.contains(y)) continue;
            mark.insert(y);
            for (Vertex z : g.neighbors(y)) {
                if (within.contains(z) && !playground.contains(z)) mark.insert(z);
            }
        }
    }
    return mark.members();
}

}  // namespace detail

VertexSet move_closure(const Graph& g, const VertexSet& u, Vertex x) {
    if (x < 0 || x >= g.n()) throw ContractError("vertex " + std::to_string(x) + " out of range");
    if (u.contains(x)) throw ContractError("vertex already in playground");
    if (!is_convex(g, u)) throw ContractError("playground is not convex");
    const VertexSet all = g.all();
    if (!detail::within_two(g, all, u, x)) throw ContractError("distance > 2 from playground");
    VertexSet result = u;
    result.insert(x);
    detail::close_within(g, all, result);
    if (!is_convex(g, result)) {
        throw ContractError("closure of a legal move is not convex: " + result.to_string());
    }
    return result;
}

std::vector<VertexSet> enumerate_convex_sets(const Graph& g, int cap, std::size_t limit) {
    if (g.n() > cap || g.n() > 63) {
        throw CapExceededError("vertex count", static_cast<std::size_t>(g.n()), static_cast<std::size_t>(std::min(cap, 63)));
    }
    if (g.n() > 0 && !is_connected(g)) throw DisconnectedGraphError();
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<std::uint64_t> nb(n, 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex w : g.neighbors(v)) nb[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }
    std::vector<std::uint64_t> found{0};
    auto lowest = [](std::uint64_t m) { return std::countr_zero(m); };

    // Connected sets are grown by branching on the lowest frontier vertex.
    // A vertex that has been excluded may never gain a second neighbour inside.
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> grow =
        [&](std::uint64_t set, std::uint64_t frontier, std::uint64_t excluded) {
            if (frontier == 0) {
                found.push_back(set);
                if (found.size() > limit) {
                    throw CapExceededError("convex set count", found.size(), limit);
                }
                return;
            }
            const int w = lowest(frontier);
            const std::uint64_t bit = std::uint64_t{1} << w;
            const std::uint64_t with = set | bit;
            bool include_ok = true;
            for (std::uint64_t cand = excluded & nb[static_cast<std::size_t>(w)]; cand; cand &= cand - 1) {
                if (std::popcount(nb[static_cast<std::size_t>(lowest(cand))] & with) >= 2) {
                    include_ok = false;
                    break;
                }
            }
            if (include_ok) {
                grow(with, (frontier & ~bit) | (nb[static_cast<std::size_t>(w)] & ~with & ~excluded),
                     excluded);
            }
            if (std::popcount(nb[static_cast<std::size_t>(w)] & set) < 2) {
                grow(set, frontier & ~bit, excluded | bit);
            }
        };
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t below = (std::uint64_t{1} << v) - 1;
        const std::uint64_t self = std::uint64_t{1} << v;
        grow(self, nb[v] & ~below, below);
    }
    std::vector<VertexSet> out;
    out.reserve(found.size());
    for (std::uint64_t m : found) {
        VertexSet s(n);
        for (; m; m &= m - 1) s.insert(lowest(m));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace p3
