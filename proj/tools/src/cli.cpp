#include "p3/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "p3/claims.hpp"
#include "p3/convexity.hpp"
#include "p3/errors.hpp"
#include "p3/families.hpp"
#include "p3/fast_solver.hpp"
#include "p3/games.hpp"
#include "p3/graph.hpp"
#include "p3/service.hpp"

namespace p3::cli {

namespace {

using ojson = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Usage problems detected after CLI11 parsing (bad lists, bad env values).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_error(std::ostream& err, std::string_view kind, std::string_view message) {
    err << ojson{{"error", kind}, {"message", message}}.dump() << '\n';
}

struct Budgets {
    std::uint64_t oracle = kDefaultOracleBudget;
    std::uint64_t fast = kDefaultFastBudget;
    std::size_t nodes = kDefaultNodeBudget;
};

Budgets read_budgets() {
    Budgets b;
    const char* raw = std::getenv("P3_BUDGET");
    if (raw == nullptr || *raw == '\0') return b;
    std::uint64_t value = 0;
    const std::string text(raw);
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
        throw UsageError("P3_BUDGET must be a positive integer, got \"" + text + "\"");
    }
    b.oracle = b.fast = value;
    b.nodes = static_cast<std::size_t>(value);
    return b;
}

Graph read_graph(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw Error("io-error", "cannot read graph file \"" + path + "\"");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return parse_graph(text);
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) throw UsageError("empty entry in vertex list \"" + text + "\"");
        const auto e = item.find_last_not_of(" \t");
        const std::string token = item.substr(b, e - b + 1);
        int v = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || end != token.data() + token.size()) {
            throw UsageError("not a vertex index: \"" + token + "\"");
        }
        out.push_back(v);
    }
    return out;
}

Error invalid_playground(const std::string& message) { return Error("invalid-playground", message); }

// Names the violated clause of the convexity definition.
VertexSet parse_playground(const Graph& g, const std::string& text) {
    VertexSet u = g.empty_set();
    for (Vertex v : parse_vertex_list(text)) {
        if (v < 0 || v >= g.n()) {
            throw invalid_playground("vertex " + std::to_string(v) + " is out of range");
        }
        u.insert(v);
    }
    if (!is_connected_subset(g, u)) {
        throw invalid_playground("playground " + u.to_string() + " is not convex: the induced subgraph is disconnected");
    }
    for (Vertex x = 0; x < g.n(); ++x) {
        if (u.contains(x)) continue;
        std::vector<Vertex> inside;
        for (Vertex y : g.neighbors(x)) {
            if (u.contains(y)) inside.push_back(y);
        }
        if (inside.size() >= 2) {
            throw invalid_playground("playground " + u.to_string() + " is not convex: outside vertex " +
                                     std::to_string(x) + " has two neighbours " + std::to_string(inside[0]) +
                                     " and " + std::to_string(inside[1]) + " inside");
        }
    }
    return u;
}

struct EngineResult {
    Grundy grundy = 0;
    std::vector<MoveEval> moves;
    ojson stats;
};

EngineResult run_oracle(const Graph& g, const VertexSet& u, GameVariant variant, const Budgets& budgets,
                        bool timing) {
    const auto start = Clock::now();
    OracleSolver oracle(g, variant, budgets.oracle);
    Analysis a = analyze(oracle, u);
    EngineResult r{a.grundy, std::move(a.moves), {}};
    r.stats = {{"positions", oracle.memo_size()}, {"decompositions", 0}, {"memoEntries", oracle.memo_size()}};
    if (timing) r.stats["ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

EngineResult run_fast(const Graph& g, const VertexSet& u, FastStrategy strategy, const Budgets& budgets,
                      bool timing) {
    const auto start = Clock::now();
    FastOptions opts;
    opts.position_budget = budgets.fast;
    opts.strategy = strategy;
    FastSolver solver(g, opts);
    EngineResult r{solver.grundy(u), {}, {}};
    for (Vertex x : detail::playable(g, g.all(), u)) {
        VertexSet next = move_closure(g, u, x);
        const Grundy after = next.is_full() ? 0 : solver.grundy(next);
        r.moves.push_back({x, std::move(next), after, after == 0});
    }
    const SolveStats& s = solver.stats();
    r.stats = {{"positions", s.positions_expanded},
               {"decompositions", s.decompositions},
               {"memoEntries", s.memo_entries},
               {"maxDepth", s.max_depth}};
    if (timing) r.stats["ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

std::vector<Vertex> best_moves(const EngineResult& r) {
    std::vector<Vertex> out;
    for (const auto& m : r.moves) {
        if (m.winning.value_or(false)) out.push_back(m.vertex);
    }
    return out;
}

ojson moves_json(const EngineResult& r) {
    ojson out = ojson::array();
    for (const auto& m : r.moves) {
        out.push_back({{"vertex", m.vertex},
                       {"playground", m.resulting_playground.members()},
                       {"grundyAfter", m.grundy_after ? ojson(*m.grundy_after) : ojson(nullptr)},
                       {"winning", m.winning ? ojson(*m.winning) : ojson(nullptr)}});
    }
    return out;
}

struct SolveArgs {
    std::string graph;
    std::string engine = "fast";
    std::string playground;
    std::string variant = "ordinary";
    std::string strategy = "ordinary";
    bool timing = false;
};

int run_solve(const SolveArgs& a, bool with_moves, std::istream& in, std::ostream& out, std::ostream& err) {
    const Budgets budgets = read_budgets();
    const GameVariant variant = parse_variant(a.variant);
    const FastStrategy strategy =
        a.strategy == "augmented-mex" ? FastStrategy::kAugmentedMex : FastStrategy::kOrdinary;
    if (variant != GameVariant::kOrdinary && a.engine != "oracle") {
        throw UsageError("--variant other than ordinary requires --engine oracle");
    }
    if (strategy != FastStrategy::kOrdinary && a.engine == "oracle") {
        throw UsageError("--strategy applies to the fast engine only");
    }
    const Graph g = read_graph(a.graph, in);
    if (!is_connected(g)) throw DisconnectedGraphError();
    const VertexSet u = parse_playground(g, a.playground);

    ojson doc{{"schema", "p3report-v1"}, {"engine", a.engine}, {"variant", a.variant}};
    doc["playground"] = u.members();
    std::optional<EngineResult> oracle;
    std::optional<EngineResult> fast;
    if (a.engine != "fast") oracle = run_oracle(g, u, variant, budgets, a.timing);
    if (a.engine != "oracle") fast = run_fast(g, u, strategy, budgets, a.timing);

    if (oracle && fast && (oracle->grundy != fast->grundy || best_moves(*oracle) != best_moves(*fast))) {
        doc["disagreement"] = true;
        doc["oracle"] = {{"grundy", oracle->grundy}, {"bestMoves", best_moves(*oracle)}};
        doc["fast"] = {{"grundy", fast->grundy}, {"bestMoves", best_moves(*fast)}};
        out << doc.dump() << '\n';
        print_error(err, "engine-disagreement",
                    "oracle grundy " + std::to_string(oracle->grundy) + " vs fast grundy " +
                        std::to_string(fast->grundy));
        return kEngineDisagreement;
    }
    const EngineResult& primary = fast ? *fast : *oracle;
    doc["grundy"] = primary.grundy;
    doc["winner"] = primary.grundy != 0 ? "first" : "second";
    doc["bestMoves"] = best_moves(primary);
    if (with_moves) doc["moves"] = moves_json(primary);
    if (oracle && fast) {
        doc["stats"] = {{"oracle", oracle->stats}, {"fast", fast->stats}};
    } else {
        doc["stats"] = primary.stats;
    }
    out << doc.dump() << '\n';
    return kOk;
}

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
    bool text = false;
};

int run_gen(const GenArgs& a, std::ostream& out) {
    const Graph g = generate({parse_family(a.family), a.params, a.seed});
    if (a.text) {
        out << serialize_graph(g);
    } else {
        out << serialize_graph_json(g) << '\n';
    }
    return kOk;
}

struct EnumerateArgs {
    std::string cls;
    int n = 0;
    bool up_to = false;
};

int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
    if (a.n < 1) throw UsageError("n must be at least 1");
    const bool cb = a.cls == "chordal-bipartite" || a.cls == "cb";
    for (int n = a.up_to ? 1 : a.n; n <= a.n; ++n) {
        const std::vector<Graph> graphs = cb ? enumerate_chordal_bipartite(n) : enumerate_connected(n);
        for (const Graph& g : graphs) {
            ojson line{{"n", g.n()}, {"code", canonical_code(g)}, {"edges", ojson::array()}};
            for (auto [x, y] : g.edges()) line["edges"].push_back({x, y});
            out << line.dump() << '\n';
        }
    }
    return kOk;
}

struct GameGraphArgs {
    std::string graph;
    std::string variant = "ordinary";
    std::string playground;
    bool dot = false;
    bool json = false;
};

int run_gamegraph(const GameGraphArgs& a, std::istream& in, std::ostream& out) {
    const Budgets budgets = read_budgets();
    const GameVariant variant = parse_variant(a.variant);
    const Graph g = read_graph(a.graph, in);
    if (!is_connected(g)) throw DisconnectedGraphError();
    const VertexSet root = parse_playground(g, a.playground);
    const GameGraph gg = build_game_graph(g, root, variant, budgets.nodes);
    if (a.dot) {
        out << to_dot(gg);
    } else {
        out << to_json(gg) << '\n';
    }
    return kOk;
}

struct ClaimsArgs {
    std::vector<std::string> claims;
    std::string corpus;
    std::string out_path;
};

int run_claims(const ClaimsArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<std::string> ids = a.claims;
    if (ids.empty()) {
        for (const auto& c : claim_catalog()) ids.emplace_back(c.id);
    }
    std::vector<ClaimReport> reports;
    for (const auto& id : ids) {
        reports.push_back(run_claim(id, a.corpus));
        out << report_to_json(reports.back()) << '\n';
    }
    if (!a.out_path.empty()) {
        std::ofstream file(a.out_path, std::ios::binary);
        if (!file) throw Error("io-error", "cannot write \"" + a.out_path + "\"");
        file << reports_to_json(reports) << '\n';
    }
    err << summary_table(reports);
    const bool regression = std::any_of(reports.begin(), reports.end(),
                                        [](const ClaimReport& r) { return r.status() == "regression"; });
    return regression ? kDomainError : kOk;
}

int run_claims_list(std::ostream& out) {
    for (const auto& c : claim_catalog()) {
        out << ojson{{"id", c.id},
                     {"anchor", c.anchor},
                     {"defaultCorpus", c.default_corpus},
                     {"expected", c.expected ? ojson(to_string(*c.expected)) : ojson(nullptr)}}
                   .dump()
            << '\n';
    }
    return kOk;
}

struct ServeArgs {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;
    int budget_ms = 2000;
    std::size_t max_sessions = 256;
};

int run_serve(const ServeArgs& a, std::ostream& err) {
    ServiceOptions opts;
    opts.eval_budget = std::chrono::milliseconds(a.budget_ms);
    opts.max_sessions = a.max_sessions;
    GameService service(opts);
    HttpServer server(service, a.static_dir);
    const int port = server.bind(a.host, a.port);
    if (port < 0) throw Error("io-error", "cannot bind " + a.host + ":" + std::to_string(a.port));
    err << ojson{{"listening", a.host + ":" + std::to_string(port)}}.dump() << '\n';
    return server.listen_after_bind() ? kOk : kDomainError;
}

// Example vectors: grundy values and winning first moves from the empty playground.
struct Vector {
    std::string_view name;
    std::string_view graph;
    GameVariant variant;
    Grundy grundy;
    std::vector<Vertex> winning;
};

int run_selftest(std::ostream& out) {
    const std::vector<Vector> vectors = {
        {"K1", "n 1\n", GameVariant::kOrdinary, 1, {0}},
        {"K2", "0 1\n", GameVariant::kOrdinary, 0, {}},
        {"P3", "0 1\n1 2\n", GameVariant::kOrdinary, 1, {1}},
        {"P4", "0 1\n1 2\n2 3\n", GameVariant::kOrdinary, 1, {0, 3}},
        {"C4", "0 1\n1 2\n2 3\n0 3\n", GameVariant::kOrdinary, 0, {}},
        {"C4 augmented-normal-play", "0 1\n1 2\n2 3\n0 3\n", GameVariant::kAugmentedNormalPlay, 0, {}},
        {"C4 augmented-arc-to-v", "0 1\n1 2\n2 3\n0 3\n", GameVariant::kAugmentedArcToV, 1, {0, 1, 2, 3}},
    };
    const Budgets budgets;
    int failures = 0;
    auto report = [&](std::string name, std::string_view engine, Grundy grundy, const std::vector<Vertex>& winning,
                      const Vector& v) {
        const bool ok = grundy == v.grundy && winning == v.winning;
        failures += ok ? 0 : 1;
        out << ojson{{"check", std::move(name)},
                     {"engine", engine},
                     {"expected", {{"grundy", v.grundy}, {"bestMoves", v.winning}}},
                     {"actual", {{"grundy", grundy}, {"bestMoves", winning}}},
                     {"ok", ok}}
                   .dump()
            << '\n';
    };
    for (const auto& v : vectors) {
        const Graph g = parse_graph(v.graph);
        const EngineResult o = run_oracle(g, g.empty_set(), v.variant, budgets, false);
        report(std::string(v.name), "oracle", o.grundy, best_moves(o), v);
        if (v.variant == GameVariant::kOrdinary) {
            const EngineResult f = run_fast(g, g.empty_set(), FastStrategy::kOrdinary, budgets, false);
            report(std::string(v.name), "fast", f.grundy, best_moves(f), v);
            const GameGraph gg = build_game_graph(g, g.empty_set(), v.variant);
            report(std::string(v.name), "gamegraph", gg.labels[0], best_moves(o), v);
        }
    }
    out << ojson{{"selftest", failures == 0 ? "pass" : "fail"}, {"failures", failures}}.dump() << '\n';
    return failures == 0 ? kOk : kDomainError;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solver workbench for the P3-game on graphs", "p3"};
    app.require_subcommand(1, 1);

    SolveArgs solve_args;
    SolveArgs analyze_args;
    auto add_solve_options = [](CLI::App* cmd, SolveArgs& a) {
        cmd->add_option("--graph", a.graph, "graph file, or - for stdin")->required();
        cmd->add_option("--engine", a.engine)->check(CLI::IsMember({"oracle", "fast", "both"}));
        cmd->add_option("--playground", a.playground, "comma-separated starting playground");
        cmd->add_option("--variant", a.variant, "oracle game variant")
            ->check(CLI::IsMember({"ordinary", "augmented", "augmented-normal-play", "augmented-arc-to-v"}));
        cmd->add_option("--strategy", a.strategy, "fast engine strategy")
            ->check(CLI::IsMember({"ordinary", "augmented-mex"}));
        cmd->add_flag("--timing", a.timing, "include wall-clock ms in stats");
    };
    auto* solve = app.add_subcommand("solve", "Grundy value, winner and winning moves");
    add_solve_options(solve, solve_args);
    auto* analyze_cmd = app.add_subcommand("analyze", "solve plus an evaluation of every legal move");
    add_solve_options(analyze_cmd, analyze_args);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    gen->add_option("family", gen_args.family)->required();
    gen->add_option("params", gen_args.params);
    gen->add_option("--seed", gen_args.seed);
    gen->add_flag("--text", gen_args.text, "emit the edge-list text format instead of JSON");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "connected graphs up to isomorphism, one JSON line each");
    enumerate->add_option("class", enum_args.cls)
        ->required()
        ->check(CLI::IsMember({"connected", "chordal-bipartite", "cb"}));
    enumerate->add_option("n", enum_args.n)->required();
    enumerate->add_flag("--up-to", enum_args.up_to, "all orders 1..n");

    GameGraphArgs gg_args;
    auto* gamegraph = app.add_subcommand("gamegraph", "export the game DAG");
    gamegraph->add_option("--graph", gg_args.graph)->required();
    gamegraph->add_option("--variant", gg_args.variant)
        ->check(CLI::IsMember({"ordinary", "augmented", "augmented-normal-play", "augmented-arc-to-v"}));
    gamegraph->add_option("--playground", gg_args.playground);
    auto* dot_flag = gamegraph->add_flag("--dot", gg_args.dot);
    auto* json_flag = gamegraph->add_flag("--json", gg_args.json);
    dot_flag->excludes(json_flag);

    ClaimsArgs claims_args;
    auto* claims = app.add_subcommand("claims", "empirical claim checks");
    claims->require_subcommand(1, 1);
    auto* claims_run = claims->add_subcommand("run", "run claims, one JSON report per line");
    claims_run->add_option("--claim", claims_args.claims, "claim id (repeatable); default all");
    claims_run->add_option("--corpus", claims_args.corpus, "corpus name; default per claim");
    claims_run->add_option("--out", claims_args.out_path, "write the combined report document");
    auto* claims_list = claims->add_subcommand("list", "claim catalog");

    ServeArgs serve_args;
    auto* serve = app.add_subcommand("serve", "start the HTTP game service");
    serve->add_option("--host", serve_args.host);
    serve->add_option("--port", serve_args.port)->check(CLI::Range(0, 65535));
    serve->add_option("--static", serve_args.static_dir, "directory served at /");
    serve->add_option("--eval-budget-ms", serve_args.budget_ms)->check(CLI::PositiveNumber);
    serve->add_option("--max-sessions", serve_args.max_sessions)->check(CLI::PositiveNumber);

    auto* selftest = app.add_subcommand("selftest", "built-in example vectors");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        print_error(err, "usage", e.what());
        return kUsageError;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args, false, in, out, err);
        if (analyze_cmd->parsed()) return run_solve(analyze_args, true, in, out, err);
        if (gen->parsed()) return run_gen(gen_args, out);
        if (enumerate->parsed()) return run_enumerate(enum_args, out);
        if (gamegraph->parsed()) return run_gamegraph(gg_args, in, out);
        if (claims_run->parsed()) return run_claims(claims_args, out, err);
        if (claims_list->parsed()) return run_claims_list(out);
        if (serve->parsed()) return run_serve(serve_args, err);
        if (selftest->parsed()) return run_selftest(out);
    } catch (const UsageError& e) {
        print_error(err, "usage", e.what());
        return kUsageError;
    } catch (const Error& e) {
        print_error(err, e.kind(), e.what());
        return kDomainError;
    } catch (const std::bad_alloc&) {
        print_error(err, "out-of-memory", "allocation failed");
        return kDomainError;
    }
    print_error(err, "usage", "no command given");
    return kUsageError;
}

}  // namespace p3::cli
