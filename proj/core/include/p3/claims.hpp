#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

// A named, content-hashed collection of graphs.
//   connected-n<=N          all connected graphs on 1..N vertices (N <= 8)
//   cb-n<=N                 connected chordal bipartite graphs on 1..N vertices
//   cb-biconnected-n<=N     the biconnected members of cb-n<=N with >= 2 vertices
//   cb-pendant-n<=N         members with a pendant vertex whose removal leaves a
//                           biconnected graph on >= 2 vertices
//   ladder-k<=K | ladder-k=K | ladder-k=A..B
//   X+Y                     concatenation
struct Corpus {
    std::string name;
    std::vector<Graph> graphs;
    std::string hash;  // FNV-1a 64 over the canonical texts, hex
};

Corpus load_corpus(std::string_view name);

enum class Verdict { kPass, kFail, kInfo };
std::string_view to_string(Verdict v);

// A violation, replayable from its fields alone.
struct Witness {
    std::string graph;               // canonical graph text
    std::vector<Vertex> position;
    std::vector<Vertex> aux;
    std::string detail;              // sub-check discriminator
    std::string expected;
    std::string actual;

    auto operator<=>(const Witness&) const = default;
};

struct Measurement {
    std::string label;
    std::vector<std::pair<std::string, std::int64_t>> values;
};

struct ClaimReport {
    std::string claim_id;
    std::string anchor;
    std::string corpus_name;
    std::size_t corpus_size = 0;
    std::string corpus_hash;
    Verdict verdict = Verdict::kPass;
    std::optional<Verdict> expected_verdict;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::vector<Witness> witnesses;  // canonical order, at most kWitnessCap
    std::vector<Measurement> measurements;
    double elapsed_ms = 0.0;

    // "pass", "documented-finding" (FAIL as annotated), "regression" (FAIL
    // where PASS is annotated), "new-finding" (FAIL without annotation), "info".
    std::string status() const;
};

inline constexpr std::size_t kWitnessCap = 25;

struct ClaimInfo {
    std::string_view id;
    std::string_view anchor;
    std::string_view default_corpus;
    std::optional<Verdict> expected;
};
const std::vector<ClaimInfo>& claim_catalog();

// Throws ContractError for an unknown claim or corpus name.
ClaimReport run_claim(std::string_view claim_id, std::string_view corpus_name = {});
ClaimReport run_claim(std::string_view claim_id, const Corpus& corpus);

// Recomputes the (expected, actual) pair of one check from scratch.
std::pair<std::string, std::string> evaluate_check(std::string_view claim_id, std::string_view detail,
                                                   const Graph& g, const std::vector<Vertex>& position,
                                                   const std::vector<Vertex>& aux);
// True iff re-evaluating the witness reproduces its recorded values and
// they still disagree.
bool replays(std::string_view claim_id, const Witness& w);

std::string report_to_json(const ClaimReport& r);
std::string reports_to_json(const std::vector<ClaimReport>& reports);
std::string summary_table(const std::vector<ClaimReport>& reports);

}  // namespace p3
