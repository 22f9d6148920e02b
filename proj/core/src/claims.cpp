#include "p3/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "p3/convexity.hpp"
#include "p3/errors.hpp"
#include "p3/families.hpp"
#include "p3/fast_solver.hpp"
#include "p3/games.hpp"

namespace p3 {

namespace {

// --- corpora -----------------------------------------------------------------

std::mutex corpus_mutex;

const std::vector<Graph>& cached_level(int n, bool chordal_bipartite) {
    static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
    std::lock_guard lock(corpus_mutex);
    auto key = std::make_pair(n, chordal_bipartite);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, chordal_bipartite ? enumerate_chordal_bipartite(n) : enumerate_connected(n)).first;
    }
    return it->second;
}

bool has_biconnected_pendant(const Graph& g) {
    if (g.n() < 3) return false;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (g.degree(s) != 1) continue;
        VertexSet keep = g.all();
        keep.erase(s);
        if (is_biconnected(induced_subgraph(g, keep).graph)) return true;
    }
    return false;
}

int parse_bound(std::string_view text, std::string_view whole) {
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw ContractError("malformed corpus name \"" + std::string(whole) + "\"");
        value = value * 10 + (c - '0');
    }
    if (text.empty()) throw ContractError("malformed corpus name \"" + std::string(whole) + "\"");
    return value;
}

void append_part(std::string_view part, std::vector<Graph>& out) {
    auto take_levels = [&](std::string_view prefix, bool cb, const std::function<bool(const Graph&)>& keep) {
        const int bound = parse_bound(part.substr(prefix.size()), part);
        if (bound > kEnumerationCap) {
            throw CapExceededError("corpus vertex bound", static_cast<std::size_t>(bound), kEnumerationCap);
        }
        for (int n = 1; n <= bound; ++n) {
            for (const auto& g : cached_level(n, cb)) {
                if (keep(g)) out.push_back(g);
            }
        }
    };
    auto all = [](const Graph&) { return true; };
    if (part.starts_with("connected-n<=")) {
        take_levels("connected-n<=", false, all);
    } else if (part.starts_with("cb-n<=")) {
        take_levels("cb-n<=", true, all);
    } else if (part.starts_with("cb-biconnected-n<=")) {
        take_levels("cb-biconnected-n<=", true, [](const Graph& g) { return is_biconnected(g); });
    } else if (part.starts_with("cb-pendant-n<=")) {
        take_levels("cb-pendant-n<=", true, has_biconnected_pendant);
    } else if (part.starts_with("ladder-k<=")) {
        const int k = parse_bound(part.substr(10), part);
        for (int i = 1; i <= k; ++i) out.push_back(generate({Family::kLadder, {i}, {}}));
    } else if (part.starts_with("ladder-k=")) {
        const auto range = part.substr(9);
        const auto dots = range.find("..");
        const int lo = parse_bound(range.substr(0, dots), part);
        const int hi = dots == std::string_view::npos ? lo : parse_bound(range.substr(dots + 2), part);
        for (int i = lo; i <= hi; ++i) out.push_back(generate({Family::kLadder, {i}, {}}));
    } else {
        throw ContractError("unknown corpus \"" + std::string(part) + "\"");
    }
}

std::string fnv1a_hex(const std::vector<Graph>& graphs) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& g : graphs) {
        for (unsigned char c : serialize_graph(g) + "\x1e") {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// --- per-check evaluation -------------------------------------------------------

std::string to_str(Grundy g) { return std::to_string(g); }

std::string separator_structure(const Graph& g, const VertexSet& s, const VertexSet& close) {
    const Bipartition parts = bipartition(g);
    const VertexSet sa = s & parts.first;
    const VertexSet sb = s & parts.second;
    for (Vertex a : sa) {
        for (Vertex b : sb) {
            if (!g.has_edge(a, b)) {
                return "separator not complete bipartite: missing " + std::to_string(a) + "-" + std::to_string(b);
            }
        }
    }
    auto trace = [&](Vertex x) { return g.set_of(g.neighbors(x)) & s; };
    auto has_full_trace = [&](const VertexSet& side) {
        for (Vertex x : close) {
            if (trace(x) == side) return true;
        }
        return false;
    };
    if (!sa.empty() && !has_full_trace(sa)) return "no vertex of the component sees exactly " + sa.to_string();
    if (!sb.empty() && !has_full_trace(sb)) return "no vertex of the component sees exactly " + sb.to_string();
    if (!sa.empty() && !sb.empty()) {
        for (Vertex x : close) {
            if (trace(x) != sa) continue;
            for (Vertex y : g.neighbors(x)) {
                if (close.contains(y) && trace(y) == sb) return "ok";
            }
        }
        return "no adjacent pair in the component with traces " + sa.to_string() + " and " + sb.to_string();
    }
    return "ok";
}

bool ladder_listed(int k, const VertexSet& u) {
    // Empty, everything, a vertex, a rung, or a contiguous run on one stile.
    if (u.empty() || u.is_full() || u.size() == 1) return true;
    const auto m = u.members();
    if (m.size() == 2 && m[1] - m[0] == k) return true;
    const bool top = m.back() < k;
    const bool bottom = m.front() >= k;
    return (top || bottom) && m.back() - m.front() + 1 == static_cast<int>(m.size());
}

Grundy decomposition_nim_sum(const Graph& g, const VertexSet& u, const SeparatorCertificate& cert) {
    Grundy acc = 0;
    for (const auto& sub : decompose(g, u, cert)) {
        const auto local = induced_subgraph(g, sub.vertices);
        OracleSolver oracle(local.graph, GameVariant::kOrdinary);
        acc ^= oracle.grundy_of_closed(local.restrict(sub.playground));
    }
    return acc;
}

// Separator of h lying inside u: removing it splits some component of h.
bool has_separator_inside(const Graph& h, const VertexSet& u) {
    const auto base = components(h, h.empty_set());
    std::vector<int> comp_of(static_cast<std::size_t>(h.n()), -1);
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (Vertex v : base[i]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    auto splits = [&](const VertexSet& s) {
        std::vector<int> seen(base.size(), 0);
        for (const auto& c : components(h, s)) {
            if (++seen[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(c.first())])] >= 2) return true;
        }
        return false;
    };
    for (Vertex v : u) {
        if (splits(h.set_of({v}))) return true;
    }
    for (const auto& c : components(h, u)) {
        const VertexSet s = neighborhood(h, c);
        if (!s.empty() && splits(s)) return true;
    }
    return false;
}

const std::string kSplitterOk = "separator inside playground";

std::string cl10_actual(const Graph& g, const VertexSet& u) {
    if (find_splitter(g, u)) return kSplitterOk;
    const auto h = trim_finishers(g, u);
    if (has_separator_inside(h.graph, h.restrict(u))) return kSplitterOk;
    return "no separator inside playground in G or H(U)";
}

bool finishing_move_exists(const Graph& g, const VertexSet& u) {
    for (Vertex x : detail::playable(g, g.all(), u)) {
        if (move_closure(g, u, x).is_full()) return true;
    }
    return false;
}

GameVariant variant_from_detail(std::string_view detail) {
    const auto colon = detail.find(':');
    return parse_variant(detail.substr(colon + 1));
}

Grundy mex_relation(Grundy augmented_value, bool finishing) {
    if (!finishing) return augmented_value;
    const Grundy opts[] = {0, augmented_value};
    return mex(opts);
}

// --- per-graph runners --------------------------------------------------------------

struct Outcome {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::vector<Witness> witnesses;
    std::vector<Measurement> measurements;
};

class Recorder {
public:
    Recorder(std::string_view claim, const Graph& g, Outcome& out)
        : claim_(claim), graph_(g), out_(out), text_(serialize_graph(g)) {}

    void check() { ++out_.checks; }
    void violation(std::string_view detail, const VertexSet& position, const std::vector<Vertex>& aux = {}) {
        ++out_.violations;
        if (out_.witnesses.size() >= kWitnessCap) return;
        Witness w{text_, position.members(), aux, std::string(detail), {}, {}};
        std::tie(w.expected, w.actual) = evaluate_check(claim_, detail, graph_, w.position, aux);
        if (w.expected == w.actual) {
            throw ContractError(std::string(claim_) + ": violation did not reproduce on re-evaluation");
        }
        out_.witnesses.push_back(std::move(w));
    }

private:
    std::string_view claim_;
    const Graph& graph_;
    Outcome& out_;
    std::string text_;
};

void run_cl1(const Graph& g, Recorder& rec) {
    const auto sets = enumerate_convex_sets(g);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            rec.check();
            if (!is_convex(g, sets[i] & sets[j])) rec.violation("", sets[i], sets[j].members());
        }
    }
}

void run_cl2(const Graph& g, Recorder& rec) {
    if (g.n() < 3) return;
    for (const auto& cert : minimal_separators(g)) {
        for (std::size_t idx : cert.close_sides) {
            rec.check();
            if (separator_structure(g, cert.separator, cert.sides[idx]) != "ok") {
                rec.violation("", cert.separator, cert.sides[idx].members());
            }
        }
    }
}

void run_cl4(const Graph& g, Recorder& rec) {
    if (!is_biconnected(g)) return;
    for (Vertex x = 0; x < g.n(); ++x) {
        for (Vertex y = x + 1; y < g.n(); ++y) {
            if (g.has_edge(x, y)) continue;
            const VertexSet common = g.set_of(g.neighbors(x)) & g.set_of(g.neighbors(y));
            if (common.size() < 2) continue;
            rec.check();
            const VertexSet pair = g.set_of({x, y});
            if (!p3_hull(g, pair).hull.is_full()) rec.violation("", pair);
        }
    }
}

void run_cl5(const Graph& g, Recorder& rec) {
    const int k = g.n() / 2;
    if (g.n() % 2 != 0 || !(g == generate({Family::kLadder, {k}, {}}))) {
        throw ContractError("CL5 corpus must consist of ladders");
    }
    const auto convex = enumerate_convex_sets(g);
    for (const auto& u : convex) {
        rec.check();
        if (!ladder_listed(k, u)) rec.violation("", u);
    }
    // Listed sets that fail to be convex.
    std::vector<VertexSet> listed{g.empty_set(), g.all()};
    for (Vertex v = 0; v < g.n(); ++v) listed.push_back(g.set_of({v}));
    for (int i = 0; i < k; ++i) listed.push_back(g.set_of({i, k + i}));
    for (int side = 0; side < 2; ++side) {
        for (int lo = 0; lo < k; ++lo) {
            for (int hi = lo + 1; hi < k; ++hi) {
                VertexSet s = g.empty_set();
                for (int i = lo; i <= hi; ++i) s.insert(side * k + i);
                listed.push_back(std::move(s));
            }
        }
    }
    for (const auto& u : listed) {
        if (std::binary_search(convex.begin(), convex.end(), u)) continue;
        rec.check();
        rec.violation("", u);
    }
}

void run_cl6(const Graph& g, Recorder& rec) {
    if (!is_biconnected(g)) return;
    rec.check();
    if (grundy(g, g.empty_set()) != 0) rec.violation("", g.empty_set());
}

bool is_p3(const Graph& g) { return g.n() == 3 && g.edge_count() == 2; }

void run_cl7(const Graph& g, Recorder& rec) {
    if (has_biconnected_pendant(g)) {
        rec.check();
        if (grundy(g, g.empty_set()) == 0) rec.violation("nonzero", g.empty_set());
    }
    if (is_p3(g)) {
        rec.check();
        const auto [expected, actual] = evaluate_check("CL7", "p3-midpoint", g, {}, {});
        if (expected != actual) rec.violation("p3-midpoint", g.empty_set());
    }
}

void run_cl8(const Graph& g, Recorder& rec) {
    const auto gg = build_game_graph(g, g.empty_set(), GameVariant::kOrdinary);
    for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
        const auto& u = gg.nodes[i];
        if (u.is_full()) continue;
        const auto cert = find_splitter(g, u);
        if (!cert) continue;
        rec.check();
        if (decomposition_nim_sum(g, u, *cert) != gg.labels[i]) rec.violation("", u);
    }
}

void run_cl9(const Graph& g, Recorder& rec) {
    if (!is_biconnected(g)) return;
    const auto gg = build_game_graph(g, g.empty_set(), GameVariant::kOrdinary);
    const auto full = gg.find(g.all());
    for (GameVariant variant : {GameVariant::kAugmentedNormalPlay, GameVariant::kAugmentedArcToV}) {
        const std::string tag(to_string(variant));
        OracleSolver augmented(g, variant);
        rec.check();
        if (augmented.grundy(g.empty_set()) != gg.labels[0]) rec.violation("root:" + tag, g.empty_set());
        for (std::size_t i = 0; i < gg.nodes.size(); ++i) {
            const bool finishing =
                full && std::find(gg.succ[i].begin(), gg.succ[i].end(), *full) != gg.succ[i].end();
            rec.check();
            if (mex_relation(augmented.grundy(gg.nodes[i]), finishing) != gg.labels[i]) {
                rec.violation("mex:" + tag, gg.nodes[i]);
            }
        }
    }
}

void run_cl10(const Graph& g, Recorder& rec) {
    const auto p3s = induced_p3s(g);
    if (p3s.empty()) return;
    const auto gg = build_game_graph(g, g.empty_set(), GameVariant::kOrdinary);
    for (const auto& u : gg.nodes) {
        if (u.is_full()) continue;
        const bool holds_p3 = std::any_of(p3s.begin(), p3s.end(), [&](const InducedP3& p) {
            return u.contains(p.end1) && u.contains(p.center) && u.contains(p.end2);
        });
        if (!holds_p3) continue;
        rec.check();
        if (cl10_actual(g, u) != kSplitterOk) rec.violation("", u);
    }
}

void run_cl11(const Graph& g, Recorder&, Outcome& out) {
    const auto ordinary = build_game_graph(g, g.empty_set(), GameVariant::kOrdinary);
    const auto augmented = build_game_graph(g, g.empty_set(), GameVariant::kAugmentedNormalPlay);
    FastSolver fast(g);
    fast.grundy(g.empty_set());
    const std::int64_t n = g.n();
    out.measurements.push_back(
        {"ladder-k=" + std::to_string(n / 2),
         {{"n", n},
          {"ordinaryNodes", static_cast<std::int64_t>(ordinary.nodes.size())},
          {"ordinaryArcs", static_cast<std::int64_t>(ordinary.arc_count())},
          {"augmentedNodes", static_cast<std::int64_t>(augmented.nodes.size())},
          {"augmentedArcs", static_cast<std::int64_t>(augmented.arc_count())},
          {"fastMemoEntries", static_cast<std::int64_t>(fast.stats().memo_entries)},
          {"grundy", static_cast<std::int64_t>(ordinary.labels[0])}}});
}

const std::vector<ClaimInfo> kClaims = {
    {"CL1", "the intersection of two convex sets is convex", "connected-n<=7", std::nullopt},
    {"CL2",
     "a minimal separator of a chordal bipartite graph induces a complete bipartite graph, and each "
     "of its colour classes is exactly the trace of some vertex of every full component (adjacent "
     "such vertices exist when both classes are present)",
     "cb-n<=8", std::nullopt},
    {"CL4",
     "in a biconnected chordal bipartite graph the closure of two nonadjacent vertices of a common "
     "C4 is V",
     "cb-biconnected-n<=8+ladder-k<=8", Verdict::kFail},
    {"CL5",
     "the convex sets of a ladder are exactly: empty, V, single vertices, rungs, and contiguous runs "
     "of one stile",
     "ladder-k<=6", Verdict::kFail},
    {"CL6", "biconnected chordal bipartite graphs on at least two vertices are second-player wins",
     "cb-biconnected-n<=8", std::nullopt},
    {"CL7",
     "a pendant vertex attached to a biconnected chordal bipartite graph makes it a first-player "
     "win; on P3 the midpoint is the only winning first move",
     "cb-pendant-n<=8", std::nullopt},
    {"CL8", "at a splitter position the Grundy value is the nim-sum of the component subgames",
     "cb-n<=8", Verdict::kPass},
    {"CL9",
     "on biconnected chordal bipartite graphs the augmented game has the same Grundy value at the "
     "empty playground, and node-wise g = mex{0, g*} when a finishing move exists, else g = g*",
     "cb-biconnected-n<=8", std::nullopt},
    {"CL10",
     "a non-final playground containing an induced P3 contains a separator of G or of the "
     "finisher-trimmed graph H(U)",
     "cb-n<=8", std::nullopt},
    {"CL11", "node counts of the ordinary and augmented game graphs on ladders", "ladder-k=2..8",
     Verdict::kInfo},
};

const ClaimInfo& claim_info(std::string_view id) {
    for (const auto& c : kClaims) {
        if (c.id == id) return c;
    }
    throw ContractError("unknown claim \"" + std::string(id) + "\"");
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

Corpus load_corpus(std::string_view name) {
    Corpus corpus{std::string(name), {}, {}};
    std::size_t start = 0;
    while (start <= name.size()) {
        const auto plus = name.find('+', start);
        const auto part = name.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        append_part(part, corpus.graphs);
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    corpus.hash = fnv1a_hex(corpus.graphs);
    return corpus;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::kPass: return "PASS";
        case Verdict::kFail: return "FAIL";
        case Verdict::kInfo: return "INFO";
    }
    return "?";
}

std::string ClaimReport::status() const {
    if (verdict == Verdict::kInfo) return "info";
    if (verdict == Verdict::kPass) return expected_verdict == Verdict::kFail ? "unexpected-pass" : "pass";
    if (expected_verdict == Verdict::kFail) return "documented-finding";
    if (expected_verdict == Verdict::kPass) return "regression";
    return "new-finding";
}

const std::vector<ClaimInfo>& claim_catalog() { return kClaims; }

std::pair<std::string, std::string> evaluate_check(std::string_view claim_id, std::string_view detail,
                                                   const Graph& g, const std::vector<Vertex>& position,
                                                   const std::vector<Vertex>& aux) {
    const VertexSet u = g.set_of(position);
    if (claim_id == "CL1") {
        const VertexSet meet = u & g.set_of(aux);
        return {"convex", is_convex(g, meet) ? "convex" : "not convex: " + meet.to_string()};
    }
    if (claim_id == "CL2") return {"ok", separator_structure(g, u, g.set_of(aux))};
    if (claim_id == "CL4") return {g.all().to_string(), p3_hull(g, u).hull.to_string()};
    if (claim_id == "CL5") {
        const int k = g.n() / 2;
        return {ladder_listed(k, u) ? "convex" : "not convex", is_convex(g, u) ? "convex" : "not convex"};
    }
    if (claim_id == "CL6") return {"0", to_str(grundy(g, u))};
    if (claim_id == "CL7") {
        if (detail == "p3-midpoint") {
            VertexSet center = g.empty_set();
            for (Vertex v = 0; v < g.n(); ++v) {
                if (g.degree(v) == 2) center.insert(v);
            }
            VertexSet winning = g.empty_set();
            for (const auto& m : analyze(g, g.empty_set()).moves) {
                if (m.winning.value_or(false)) winning.insert(m.vertex);
            }
            return {center.to_string(), winning.to_string()};
        }
        return {"nonzero", grundy(g, u) == 0 ? "0" : "nonzero"};
    }
    if (claim_id == "CL8") {
        const auto cert = find_splitter(g, u);
        return {to_str(grundy(g, u)), cert ? to_str(decomposition_nim_sum(g, u, *cert)) : "no splitter"};
    }
    if (claim_id == "CL9") {
        const GameVariant variant = variant_from_detail(detail);
        if (detail.starts_with("root:")) return {to_str(grundy(g, u)), to_str(grundy(g, u, variant))};
        return {to_str(grundy(g, u)), to_str(mex_relation(grundy(g, u, variant), finishing_move_exists(g, u)))};
    }
    if (claim_id == "CL10") return {kSplitterOk, cl10_actual(g, u)};
    throw ContractError("claim \"" + std::string(claim_id) + "\" has no replayable checks");
}

bool replays(std::string_view claim_id, const Witness& w) {
    const Graph g = parse_graph(w.graph);
    const auto [expected, actual] = evaluate_check(claim_id, w.detail, g, w.position, w.aux);
    return expected == w.expected && actual == w.actual && expected != actual;
}

ClaimReport run_claim(std::string_view claim_id, std::string_view corpus_name) {
    const ClaimInfo& info = claim_info(claim_id);
    return run_claim(claim_id, load_corpus(corpus_name.empty() ? info.default_corpus : corpus_name));
}

ClaimReport run_claim(std::string_view claim_id, const Corpus& corpus) {
    const ClaimInfo& info = claim_info(claim_id);
    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outcomes(corpus.graphs.size());
    parallel_for(corpus.graphs.size(), [&](std::size_t i) {
        const Graph& g = corpus.graphs[i];
        Recorder rec(info.id, g, outcomes[i]);
        if (info.id == "CL1") run_cl1(g, rec);
        else if (info.id == "CL2") run_cl2(g, rec);
        else if (info.id == "CL4") run_cl4(g, rec);
        else if (info.id == "CL5") run_cl5(g, rec);
        else if (info.id == "CL6") run_cl6(g, rec);
        else if (info.id == "CL7") run_cl7(g, rec);
        else if (info.id == "CL8") run_cl8(g, rec);
        else if (info.id == "CL9") run_cl9(g, rec);
        else if (info.id == "CL10") run_cl10(g, rec);
        else if (info.id == "CL11") run_cl11(g, rec, outcomes[i]);
    });

    ClaimReport report;
    report.claim_id = std::string(info.id);
    report.anchor = std::string(info.anchor);
    report.corpus_name = corpus.name;
    report.corpus_size = corpus.graphs.size();
    report.corpus_hash = corpus.hash;
    report.expected_verdict = info.expected;
    for (auto& o : outcomes) {
        report.checks += o.checks;
        report.violations += o.violations;
        for (auto& w : o.witnesses) report.witnesses.push_back(std::move(w));
        for (auto& m : o.measurements) report.measurements.push_back(std::move(m));
    }
    std::sort(report.witnesses.begin(), report.witnesses.end());
    if (report.witnesses.size() > kWitnessCap) report.witnesses.resize(kWitnessCap);
    if (info.expected == Verdict::kInfo) {
        report.verdict = Verdict::kInfo;
    } else {
        report.verdict = report.violations == 0 ? Verdict::kPass : Verdict::kFail;
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

nlohmann::json report_json(const ClaimReport& r) {
    nlohmann::json doc;
    doc["claimId"] = r.claim_id;
    doc["anchor"] = r.anchor;
    doc["corpus"] = {{"name", r.corpus_name}, {"size", r.corpus_size}, {"hash", r.corpus_hash}};
    doc["verdict"] = std::string(to_string(r.verdict));
    doc["expectedVerdict"] = r.expected_verdict ? nlohmann::json(std::string(to_string(*r.expected_verdict)))
                                                : nlohmann::json(nullptr);
    doc["status"] = r.status();
    doc["checks"] = r.checks;
    doc["violations"] = r.violations;
    auto witnesses = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
        witnesses.push_back({{"graph", w.graph},
                             {"position", w.position},
                             {"aux", w.aux},
                             {"detail", w.detail},
                             {"expected", w.expected},
                             {"actual", w.actual}});
    }
    doc["witnesses"] = std::move(witnesses);
    auto measurements = nlohmann::json::array();
    for (const auto& m : r.measurements) {
        nlohmann::json row{{"label", m.label}};
        for (const auto& [k, v] : m.values) row[k] = v;
        measurements.push_back(std::move(row));
    }
    doc["measurements"] = std::move(measurements);
    // elapsed time stays out of the JSON so reports are byte-reproducible
    return doc;
}

}  // namespace

std::string report_to_json(const ClaimReport& r) { return report_json(r).dump(); }

std::string reports_to_json(const std::vector<ClaimReport>& reports) {
    nlohmann::json doc;
    doc["schema"] = "p3claims-v1";
    doc["reports"] = nlohmann::json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_json(r));
    return doc.dump(2);
}

std::string summary_table(const std::vector<ClaimReport>& reports) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-5s %-5s %-19s %10s %10s  %-34s %9s\n", "claim", "verd", "status",
                  "checks", "violations", "corpus", "ms");
    out << line;
    for (const auto& r : reports) {
        const std::string corpus = r.corpus_name + " (" + std::to_string(r.corpus_size) + ")";
        std::snprintf(line, sizeof line, "%-5s %-5s %-19s %10llu %10llu  %-34s %9.1f\n", r.claim_id.c_str(),
                      std::string(to_string(r.verdict)).c_str(), r.status().c_str(),
                      static_cast<unsigned long long>(r.checks), static_cast<unsigned long long>(r.violations),
                      corpus.c_str(), r.elapsed_ms);
        out << line;
    }
    return out.str();
}

}  // namespace p3
