#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p3/vertex_set.hpp"

namespace p3 {

using Edge = std::pair<Vertex, Vertex>;

// Immutable undirected simple graph on vertices 0..n-1 with sorted
// adjacency lists. Optional external vertex names live in a side table
// and are only consulted at I/O boundaries.
class Graph {
public:
    Graph() = default;
    // Throws ContractError on loops, duplicate edges or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> names = {});

    int n() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges (u < v) in lexicographic order.
    std::vector<Edge> edges() const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n())); }
    VertexSet all() const { return VertexSet::full(static_cast<std::size_t>(n())); }
    VertexSet set_of(std::initializer_list<Vertex> vs) const {
        return VertexSet(static_cast<std::size_t>(n()), vs);
    }
    VertexSet set_of(const std::vector<Vertex>& vs) const {
        return VertexSet(static_cast<std::size_t>(n()), vs);
    }

    bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> names_;
};

// An induced subgraph together with the map back to the parent's vertex ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // subgraph vertex -> parent vertex
    std::vector<Vertex> from_parent;  // parent vertex -> subgraph vertex or -1

    VertexSet lift(const VertexSet& local, std::size_t parent_universe) const;
    VertexSet restrict(const VertexSet& parent) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// --- I/O -----------------------------------------------------------------

// Accepts the edge-list text format ("u v" lines, optional "n <count>"
// header, '#' comments) or the JSON format {"format":"p3graph-v1",...}.
Graph parse_graph(std::string_view text);
// Canonical text: "n <count>" header followed by sorted "u v" lines.
std::string serialize_graph(const Graph& g);
std::string serialize_graph_json(const Graph& g);

// --- classical algorithms ---------------------------------------------------

struct Bipartition {
    VertexSet first;   // contains the lowest-index vertex of every component
    VertexSet second;
};
// Throws NotBipartiteError carrying an odd cycle.
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Components of g - removed, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
bool is_connected(const Graph& g);
// Connectivity of the subgraph induced by `s` (the empty set counts as connected).
bool is_connected_subset(const Graph& g, const VertexSet& s);

// Multi-source BFS. std::nullopt marks unreached vertices.
std::vector<std::optional<int>> distances_from_set(const Graph& g, const VertexSet& sources);

// Articulation vertices; throws DisconnectedGraphError on a disconnected graph.
VertexSet cutvertices(const Graph& g);
bool is_biconnected(const Graph& g);

// Open neighbourhood of a vertex set.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

struct SeparatorCertificate {
    VertexSet separator;
    std::vector<VertexSet> sides;      // components of g - separator
    std::vector<std::size_t> close_sides;  // indices of sides C with N(C) = separator
};

SeparatorCertificate certify_separator(const Graph& g, const VertexSet& separator);

inline constexpr int kMinimalSeparatorCap = 14;
// All minimal separators (sets with at least two full components), sorted.
std::vector<SeparatorCertificate> minimal_separators(const Graph& g,
                                                     int cap = kMinimalSeparatorCap);

struct InducedP3 {
    Vertex end1;
    Vertex center;
    Vertex end2;  // end1 < end2
    bool operator==(const InducedP3&) const = default;
};
std::vector<InducedP3> induced_p3s(const Graph& g);

}  // namespace p3
