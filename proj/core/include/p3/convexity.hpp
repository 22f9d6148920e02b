#pragma once

#include <array>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

struct HullStep {
    Vertex vertex;
    std::array<Vertex, 2> witnesses;  // two neighbours already in the hull
};

struct HullResult {
    VertexSet hull;
    bool connected = false;
    std::vector<HullStep> addition_order;
};

// Convex: G[u] connected and no outside vertex has two neighbours in u.
bool is_convex(const Graph& g, const VertexSet& u);
// Only the second half of the definition: the ">= 2 neighbours" fixed point.
bool is_closed(const Graph& g, const VertexSet& u);

// Least superset of w in which no outside vertex has two neighbours inside.
// Eligible vertices are absorbed lowest index first.
HullResult p3_hull(const Graph& g, const VertexSet& w);

// The playground after playing x from u. Throws ContractError unless u is
// convex, x is outside u, and u is empty or x is within distance two of u.
VertexSet move_closure(const Graph& g, const VertexSet& u, Vertex x);

inline constexpr int kConvexEnumerationCap = 20;
inline constexpr std::size_t kConvexEnumerationLimit = 5'000'000;
// Every convex set, including the empty set and V, in canonical order.
std::vector<VertexSet> enumerate_convex_sets(const Graph& g, int cap = kConvexEnumerationCap,
                                             std::size_t limit = kConvexEnumerationLimit);

namespace detail {

// In-place closure of `set` inside the vertex subset `within` (set must be a
// subset of within). Hot path for the solvers; no order bookkeeping.
void close_within(const Graph& g, const VertexSet& within, VertexSet& set);

// Whether x is a legal move from `playground` in G[within]: outside the
// playground and (playground empty or distance at most two inside G[within]).
bool within_two(const Graph& g, const VertexSet& within, const VertexSet& playground, Vertex x);

// All legal moves from `playground` in G[within], ascending.
std::vector<Vertex> playable(const Graph& g, const VertexSet& within, const VertexSet& playground);

}  // namespace detail

}  // namespace p3
