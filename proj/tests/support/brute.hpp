#pragma once

// Brute-force reference implementations over bitmasks. They read nothing
// from the library except a Graph's adjacency lists and are meant for
// n <= 16 (subset enumeration needs n <= 12 in practice).

#include <cstdint>
#include <map>
#include <vector>

#include "p3/games.hpp"
#include "p3/graph.hpp"

namespace brute {

using Mask = std::uint32_t;

std::vector<Mask> adjacency(const p3::Graph& g);
Mask full(int n);
p3::VertexSet to_set(const p3::Graph& g, Mask m);
Mask to_mask(const p3::VertexSet& s);

bool connected(const std::vector<Mask>& adj, Mask s);
bool closed(const std::vector<Mask>& adj, Mask s);
bool convex(const std::vector<Mask>& adj, Mask s);
Mask hull(const std::vector<Mask>& adj, Mask s);
std::vector<Mask> convex_sets(const std::vector<Mask>& adj);
std::vector<Mask> components(const std::vector<Mask>& adj, Mask within);
std::vector<Mask> minimal_separators(const std::vector<Mask>& adj);
Mask cutvertices(const std::vector<Mask>& adj);
bool chordal_bipartite(const std::vector<Mask>& adj);
// Smallest edge bitmask over all relabelings; n <= 7.
std::uint64_t iso_code(const std::vector<Mask>& adj);

class Grundy {
public:
    Grundy(const p3::Graph& g, p3::GameVariant variant);
    p3::Grundy operator()(Mask u);
    std::vector<Mask> moves(Mask u) const;  // successor playgrounds, one per legal vertex

private:
    std::vector<Mask> adj_;
    p3::GameVariant variant_;
    std::map<Mask, p3::Grundy> memo_;
};

}  // namespace brute
