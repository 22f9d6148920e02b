#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "p3/claims.hpp"
#include "p3/convexity.hpp"
#include "p3/errors.hpp"
#include "p3/families.hpp"

using namespace p3;

namespace {

void check_report_shape(const ClaimReport& r) {
    if (r.verdict == Verdict::kInfo) {
        CHECK(r.violations == 0);
        return;
    }
    CHECK(r.checks > 0);
    CHECK((r.verdict == Verdict::kFail) == (r.violations > 0));
    CHECK(r.witnesses.size() == std::min<std::size_t>(r.violations, kWitnessCap));
    CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
    for (const auto& w : r.witnesses) {
        CHECK_MESSAGE(replays(r.claim_id, w), r.claim_id << " " << w.graph);
        CHECK(w.expected != w.actual);
    }
}

}  // namespace

TEST_CASE("corpus sizes and hashes") {
    CHECK(load_corpus("connected-n<=5").graphs.size() == 31);
    CHECK(load_corpus("cb-n<=8").graphs.size() == 222);
    CHECK(load_corpus("ladder-k=3").graphs.size() == 1);
    CHECK(load_corpus("ladder-k<=4").graphs.size() == 4);
    CHECK(load_corpus("ladder-k=2..8").graphs.size() == 7);
    CHECK(load_corpus("ladder-k=3+ladder-k=4").graphs.size() == 2);
    const auto a = load_corpus("cb-biconnected-n<=6");
    const auto b = load_corpus("cb-biconnected-n<=6");
    CHECK(a.hash == b.hash);
    CHECK(a.hash.size() == 16);
    CHECK(a.hash != load_corpus("cb-n<=6").hash);
    for (const auto& g : a.graphs) CHECK(is_biconnected(g));
    for (const auto& g : load_corpus("cb-pendant-n<=7").graphs) {
        bool found = false;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (g.degree(v) != 1) continue;
            VertexSet rest = g.all();
            rest.erase(v);
            const auto h = induced_subgraph(g, rest).graph;
            found = found || (h.n() >= 2 && is_biconnected(h));
        }
        CHECK(found);
    }
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(load_corpus("trees-n<=5"), ContractError);
    CHECK_THROWS_AS(load_corpus("connected-n<=9"), CapExceededError);
    CHECK_THROWS_AS(run_claim("CL3"), ContractError);
    CHECK_THROWS_AS(run_claim("CL5", "cb-n<=5"), ContractError);
}

TEST_CASE("catalog covers every claim with a default corpus") {
    const auto& catalog = claim_catalog();
    CHECK(catalog.size() == 10);
    for (const auto& c : catalog) {
        CHECK_FALSE(c.anchor.empty());
        CHECK_NOTHROW(load_corpus(c.default_corpus));
    }
}

TEST_CASE("every claim report is well formed and its witnesses replay") {
    for (const auto& c : claim_catalog()) {
        const ClaimReport r = run_claim(c.id);
        CAPTURE(c.id);
        check_report_shape(r);
        if (c.expected == Verdict::kInfo) CHECK(r.verdict == Verdict::kInfo);
    }
}

TEST_CASE("decomposition claim holds on the standard corpus") {
    const ClaimReport r = run_claim("CL8");
    CHECK(r.verdict == Verdict::kPass);
    CHECK(r.status() == "pass");
    CHECK(r.checks > 1000);
}

TEST_CASE("ladder convex sets include the 2x2 block") {
    const ClaimReport r = run_claim("CL5", "ladder-k=3");
    CHECK(r.verdict == Verdict::kFail);
    CHECK(r.status() == "documented-finding");
    const bool block = std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const Witness& w) {
        return w.position == std::vector<Vertex>{0, 1, 3, 4} && w.actual == "convex";
    });
    CHECK(block);
}

TEST_CASE("closure claim on the 3-ladder agrees with a direct hull") {
    const Graph ladder = generate({Family::kLadder, {3}, {}});
    const VertexSet direct = p3_hull(ladder, ladder.set_of({0, 4})).hull;
    const ClaimReport r = run_claim("CL4", "ladder-k=3");
    CHECK((r.verdict == Verdict::kFail) == !direct.is_full());
    const auto it = std::find_if(r.witnesses.begin(), r.witnesses.end(),
                                 [](const Witness& w) { return w.position == std::vector<Vertex>{0, 4}; });
    REQUIRE(it != r.witnesses.end());
    CHECK(it->actual == direct.to_string());
}

TEST_CASE("tampered witnesses do not replay") {
    const ClaimReport r = run_claim("CL6", "ladder-k=3");
    REQUIRE(r.witnesses.size() == 1);
    Witness w = r.witnesses.front();
    CHECK(replays("CL6", w));
    w.actual = "0";
    CHECK_FALSE(replays("CL6", w));
    w = r.witnesses.front();
    w.graph = serialize_graph(generate({Family::kCycle, {4}, {}}));
    CHECK_FALSE(replays("CL6", w));
}

TEST_CASE("evaluate_check on named inputs") {
    const Graph c4 = generate({Family::kCycle, {4}, {}});
    CHECK(evaluate_check("CL6", "", c4, {}, {}) == std::pair<std::string, std::string>{"0", "0"});
    const Graph p3 = generate({Family::kPath, {3}, {}});
    CHECK(evaluate_check("CL7", "p3-midpoint", p3, {}, {}) == std::pair<std::string, std::string>{"{1}", "{1}"});
    const Graph c6 = generate({Family::kCycle, {6}, {}});
    const auto cl1 = evaluate_check("CL1", "", c6, {0, 1, 2, 3}, {3, 4, 5, 0});
    CHECK(cl1.first == "convex");
    CHECK(cl1.second == "not convex: {0,3}");
}

TEST_CASE("status labels") {
    ClaimReport r;
    r.verdict = Verdict::kFail;
    CHECK(r.status() == "new-finding");
    r.expected_verdict = Verdict::kFail;
    CHECK(r.status() == "documented-finding");
    r.expected_verdict = Verdict::kPass;
    CHECK(r.status() == "regression");
    r.verdict = Verdict::kPass;
    CHECK(r.status() == "pass");
    r.expected_verdict = Verdict::kFail;
    CHECK(r.status() == "unexpected-pass");
}

TEST_CASE("json and summary rendering") {
    const std::vector<ClaimReport> reports = {run_claim("CL6", "ladder-k=3"), run_claim("CL11", "ladder-k=2..3")};
    const auto one = nlohmann::json::parse(report_to_json(reports[0]));
    CHECK(one["claimId"] == "CL6");
    CHECK(one["verdict"] == "FAIL");
    CHECK(one["corpus"]["name"] == "ladder-k=3");
    CHECK(one["witnesses"].size() == 1);
    CHECK_FALSE(one.contains("elapsedMs"));
    CHECK(report_to_json(reports[0]) == report_to_json(run_claim("CL6", "ladder-k=3")));
    const auto doc = nlohmann::json::parse(reports_to_json(reports));
    CHECK(doc["schema"] == "p3claims-v1");
    CHECK(doc["reports"].size() == 2);
    CHECK(doc["reports"][1]["measurements"].size() == 2);
    const std::string table = summary_table(reports);
    CHECK(table.find("CL6") != std::string::npos);
    CHECK(table.find("CL11") != std::string::npos);
}
