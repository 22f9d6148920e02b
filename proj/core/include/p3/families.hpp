#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

enum class Family { kPath, kCycle, kLadder, kCompleteBipartite, kStar, kRandomTree, kRandomCb };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct FamilySpec {
    Family family;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
};

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::vector<std::string_view> params;
    std::string_view description;
};
const std::vector<FamilyInfo>& family_catalog();

// Deterministic for a fixed seed. Throws ContractError on invalid parameters.
//   path n | cycle n | ladder k | complete-bipartite p q | star k
//   random-tree n | random-cb n [target_edges]
// Ladder k labels one stile 0..k-1 and the other k..2k-1; rung i joins i and k+i.
Graph generate(const FamilySpec& spec);

enum class RecognitionStrategy {
    kDefinitional,  // search for an induced cycle of length >= 6
    kBisimplicial,  // perfect edge-without-vertex elimination
    kAuto,          // definitional up to kDefinitionalCap vertices
};

inline constexpr int kDefinitionalCap = 24;

struct ChordalBipartiteResult {
    bool chordal_bipartite = false;
    // Odd cycle or induced cycle of length >= 6 when false (may be empty
    // for the bisimplicial strategy above the definitional cap).
    std::vector<Vertex> witness;
};

ChordalBipartiteResult is_chordal_bipartite(const Graph& g,
                                            RecognitionStrategy strategy = RecognitionStrategy::kAuto);

// Exact isomorphism-invariant code for n <= kCanonicalCap.
inline constexpr int kCanonicalCap = 10;
std::uint64_t canonical_code(const Graph& g);
Graph from_canonical_code(int n, std::uint64_t code);

inline constexpr int kEnumerationCap = 8;
// Connected graphs on exactly n vertices up to isomorphism, ordered by code.
std::vector<Graph> enumerate_connected(int n);
// Connected chordal bipartite graphs on exactly n vertices up to isomorphism.
std::vector<Graph> enumerate_chordal_bipartite(int n);
void for_each_chordal_bipartite(int n, const std::function<void(const Graph&)>& visit);

}  // namespace p3
