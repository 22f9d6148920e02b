#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "p3/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
    std::vector<json> lines() const {
        std::vector<json> v;
        std::istringstream s(out);
        for (std::string line; std::getline(s, line);) v.push_back(json::parse(line));
        return v;
    }
    json error() const { return json::parse(err); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = p3::cli::execute(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string gen(std::vector<std::string> args) {
    args.insert(args.begin(), "gen");
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return r.out;
}

const std::string kP3 = "0 1\n1 2\n";
const std::string kK2 = "0 1\n";

}  // namespace

TEST_CASE("solve on P3 and K2") {
    const Run p3 = run({"solve", "--graph", "-"}, kP3);
    REQUIRE(p3.code == 0);
    const json d = p3.doc();
    CHECK(d["schema"] == "p3report-v1");
    CHECK(d["grundy"] == 1);
    CHECK(d["winner"] == "first");
    CHECK(d["bestMoves"] == json{1});
    CHECK(d["stats"].contains("memoEntries"));
    CHECK_FALSE(d["stats"].contains("ms"));
    CHECK(p3.err.empty());

    const json k2 = run({"solve", "--graph", "-", "--engine", "oracle"}, kK2).doc();
    CHECK(k2["grundy"] == 0);
    CHECK(k2["winner"] == "second");
    CHECK(k2["bestMoves"].empty());
}

TEST_CASE("solve output is deterministic and timing is opt-in") {
    const std::string ladder = gen({"ladder", "5"});
    const Run a = run({"solve", "--graph", "-", "--engine", "both"}, ladder);
    const Run b = run({"solve", "--graph", "-", "--engine", "both"}, ladder);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.doc().contains("disagreement"));
    const json timed = run({"solve", "--graph", "-", "--timing"}, ladder).doc();
    CHECK(timed["stats"]["ms"].is_number());
}

TEST_CASE("analyze lists every legal move") {
    const json d = run({"analyze", "--graph", "-", "--engine", "both"}, kP3).doc();
    REQUIRE(d["moves"].size() == 3);
    CHECK(d["moves"][1]["winning"] == true);
    CHECK(d["moves"][0]["grundyAfter"] == 2);
    CHECK(d["stats"].contains("oracle"));
    CHECK(d["stats"].contains("fast"));
}

TEST_CASE("starting playgrounds") {
    const std::string c4 = gen({"cycle", "4"});
    const json d = run({"solve", "--graph", "-", "--playground", "0,1"}, c4).doc();
    CHECK(d["playground"] == json{0, 1});

    const Run split = run({"solve", "--graph", "-", "--playground", "0,2"}, kP3);
    CHECK(split.code == 1);
    CHECK(split.error()["error"] == "invalid-playground");
    CHECK(split.error()["message"].get<std::string>().find("induced subgraph is disconnected") != std::string::npos);

    const Run open = run({"solve", "--graph", "-", "--playground", "0,1,2"}, c4);
    CHECK(open.code == 1);
    CHECK(open.error()["message"].get<std::string>().find("outside vertex 3 has two neighbours") != std::string::npos);

    const Run range = run({"solve", "--graph", "-", "--playground", "7"}, kP3);
    CHECK(range.code == 1);
    CHECK(range.error()["message"].get<std::string>().find("out of range") != std::string::npos);

    CHECK(run({"solve", "--graph", "-", "--playground", "0,,1"}, kP3).code == 2);
    CHECK(run({"solve", "--graph", "-", "--playground", "a"}, kP3).code == 2);
}

TEST_CASE("variants and strategies") {
    const std::string c4 = gen({"cycle", "4"});
    CHECK(run({"solve", "--graph", "-", "--engine", "oracle", "--variant", "augmented-arc-to-v"}, c4).doc()["grundy"] ==
          1);
    CHECK(run({"solve", "--graph", "-", "--engine", "oracle", "--variant", "augmented"}, c4).doc()["grundy"] == 0);
    CHECK(run({"solve", "--graph", "-", "--variant", "augmented"}, c4).code == 2);
    CHECK(run({"solve", "--graph", "-", "--engine", "oracle", "--strategy", "augmented-mex"}, c4).code == 2);
    CHECK(run({"solve", "--graph", "-", "--strategy", "augmented-mex"}, c4).code == 0);
}

TEST_CASE("usage and domain errors") {
    const Run none = run({});
    CHECK(none.code == 2);
    CHECK(none.error()["error"] == "usage");
    CHECK(run({"solve"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"solve", "--graph", "-", "--engine", "quantum"}, kP3).code == 2);

    const Run disconnected = run({"solve", "--graph", "-"}, "n 4\n0 1\n2 3\n");
    CHECK(disconnected.code == 1);
    CHECK(disconnected.error()["error"] == "disconnected-graph");
    CHECK(disconnected.out.empty());

    const Run malformed = run({"solve", "--graph", "-"}, "0 1\n1 x\n");
    CHECK(malformed.code == 1);
    CHECK(malformed.error()["message"].get<std::string>().find("line 2") != std::string::npos);

    const Run missing = run({"solve", "--graph", "/nonexistent/graph.txt"});
    CHECK(missing.code == 1);
    CHECK(missing.error()["error"] == "io-error");
    CHECK(run({"gen", "ladder"}).code == 1);
    CHECK(run({"gen", "petersen", "3"}).code == 1);
}

TEST_CASE("position budget from the environment") {
    const std::string ladder = gen({"ladder", "8"});
    ::setenv("P3_BUDGET", "5", 1);
    const Run tight = run({"solve", "--graph", "-", "--engine", "oracle"}, ladder);
    ::setenv("P3_BUDGET", "zero", 1);
    const Run bad = run({"solve", "--graph", "-"}, ladder);
    ::unsetenv("P3_BUDGET");
    CHECK(tight.code == 1);
    CHECK(tight.error()["error"] == "budget-exceeded");
    CHECK(bad.code == 2);
    CHECK(run({"solve", "--graph", "-", "--engine", "oracle"}, ladder).code == 0);
}

TEST_CASE("gen and enumerate") {
    const json ladder = json::parse(gen({"ladder", "3"}));
    CHECK(ladder["format"] == "p3graph-v1");
    CHECK(ladder["n"] == 6);
    CHECK(ladder["edges"].size() == 7);
    CHECK(gen({"cycle", "4", "--text"}) == "n 4\n0 1\n0 3\n1 2\n2 3\n");
    CHECK(gen({"random-tree", "20", "--seed", "3"}) == gen({"random-tree", "20", "--seed", "3"}));

    const Run cb = run({"enumerate", "cb", "6"});
    CHECK(cb.code == 0);
    CHECK(cb.lines().size() == 16);
    CHECK(run({"enumerate", "connected", "5", "--up-to"}).lines().size() == 1 + 1 + 2 + 6 + 21);
    for (const auto& line : cb.lines()) CHECK(line["n"] == 6);
    CHECK(run({"enumerate", "connected", "12"}).code == 1);
}

TEST_CASE("gamegraph exports") {
    const Run dot = run({"gamegraph", "--graph", "-", "--dot"}, kK2);
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph game {", 0) == 0);
    const json doc = run({"gamegraph", "--graph", "-", "--json"}, kP3).doc();
    CHECK(doc["nodes"].size() == 7);
    CHECK(doc["nodes"][0]["grundy"] == 1);
    CHECK(run({"gamegraph", "--graph", "-", "--dot", "--json"}, kP3).code == 2);
}

TEST_CASE("claims run and list") {
    const Run r = run({"claims", "run", "--claim", "CL6", "--corpus", "ladder-k=3"});
    CHECK(r.code == 0);
    const auto lines = r.lines();
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["claimId"] == "CL6");
    CHECK(lines[0]["verdict"] == "FAIL");
    CHECK(r.err.find("CL6") != std::string::npos);
    CHECK(r.out == run({"claims", "run", "--claim", "CL6", "--corpus", "ladder-k=3"}).out);
    CHECK(run({"claims", "list"}).lines().size() == 10);
    CHECK(run({"claims", "run", "--claim", "CL99"}).code == 1);
}

TEST_CASE("selftest passes") {
    const Run r = run({"selftest"});
    CHECK(r.code == 0);
    const auto lines = r.lines();
    REQUIRE(lines.size() > 5);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i]["ok"] == true);
    CHECK(lines.back()["selftest"] == "pass");
}

TEST_CASE("executable round trip") {
    const std::string cmd = std::string(P3_EXE) + " selftest > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    const std::string usage = std::string(P3_EXE) + " solve 2> /dev/null";
    const int status = std::system(usage.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
