#include "p3/service.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <shared_mutex>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "p3/convexity.hpp"
#include "p3/errors.hpp"
#include "p3/families.hpp"
#include "p3/fast_solver.hpp"
#include "p3/games.hpp"
#include "p3/graph.hpp"

namespace p3 {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kServiceOracleBudget = 4'000'000;

enum class Engine { kOracle, kFast };

std::string_view to_string(Engine e) { return e == Engine::kOracle ? "oracle" : "fast"; }

struct HistoryEntry {
    Player side;
    Vertex vertex;
    VertexSet playground;
};

ServiceResponse error_response(int status, std::string_view kind, std::string_view message) {
    return {status, json{{"error", kind}, {"message", message}}.dump()};
}

int status_for(const Error& e) {
    if (e.kind() == "disconnected-graph") return 422;
    return 400;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

struct Session {
    std::shared_mutex mutex;
    std::string id;
    Graph graph;
    VertexSet playground;
    Player to_move = Player::kFirst;
    Player human = Player::kFirst;
    Engine engine = Engine::kFast;
    std::vector<HistoryEntry> history;
    bool finished = false;
    std::optional<Player> loser;
    std::vector<std::string> warnings;
    std::unique_ptr<OracleSolver> oracle;
    std::unique_ptr<FastSolver> fast;

    json state() const {
        json g{{"n", graph.n()}, {"edges", json::array()}};
        for (auto [a, b] : graph.edges()) g["edges"].push_back({a, b});
        if (!graph.names().empty()) g["names"] = graph.names();
        if (is_bipartite(graph)) {
            const Bipartition parts = bipartition(graph);
            g["bipartition"] = {parts.first.members(), parts.second.members()};
        } else {
            g["bipartition"] = nullptr;
        }
        json hist = json::array();
        for (const auto& h : history) {
            hist.push_back({{"side", p3::to_string(h.side)},
                            {"vertex", h.vertex},
                            {"playground", h.playground.members()}});
        }
        return {{"id", id},
                {"graph", std::move(g)},
                {"playground", playground.members()},
                {"toMove", p3::to_string(to_move)},
                {"humanSide", p3::to_string(human)},
                {"engine", to_string(engine)},
                {"finished", finished},
                {"loser", loser ? json(p3::to_string(*loser)) : json(nullptr)},
                {"legalMoves", finished ? std::vector<Vertex>{}
                                        : detail::playable(graph, graph.all(), playground)},
                {"history", std::move(hist)},
                {"warnings", warnings}};
    }

    // Grundy value of a successor playground, or nullopt when the engine runs
    // out of time or positions.
    std::optional<Grundy> evaluate(const VertexSet& next, Clock::time_point deadline) {
        if (next.is_full()) return 0;
        try {
            if (engine == Engine::kOracle) {
                oracle->set_deadline(deadline);
                return oracle->grundy(next);
            }
            fast->set_deadline(deadline);
            return fast->grundy(next);
        } catch (const BudgetExceededError&) {
            return std::nullopt;
        }
    }

    struct Option {
        Vertex vertex;
        VertexSet next;
        std::optional<Grundy> grundy_after;
    };

    std::vector<Option> options(std::chrono::milliseconds budget) {
        const Clock::time_point deadline = Clock::now() + budget;
        std::vector<Option> out;
        for (Vertex x : detail::playable(graph, graph.all(), playground)) {
            VertexSet next = move_closure(graph, playground, x);
            std::optional<Grundy> value = evaluate(next, deadline);
            out.push_back({x, std::move(next), value});
        }
        return out;
    }

    void play(Vertex x) {
        playground = move_closure(graph, playground, x);
        history.push_back({to_move, x, playground});
        to_move = other(to_move);
        if (playground.is_full()) {
            finished = true;
            loser = to_move;
        }
    }
};

GameService::GameService(ServiceOptions options) : options_(options) {
    std::random_device rd;
    salt_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

GameService::~GameService() = default;

std::size_t GameService::session_count() const {
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

std::string GameService::fresh_id() {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(splitmix64(salt_ ^ ++counter_)));
    return buf;
}

std::shared_ptr<Session> GameService::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return nullptr;
    recency_.splice(recency_.begin(), recency_, it->second.position);
    return it->second.session;
}

ServiceResponse GameService::create_game(std::string_view body) {
    json req = json::parse(body, nullptr, false);
    if (req.is_discarded() || !req.is_object()) {
        return error_response(400, "bad-request", "request body is not a JSON object");
    }
    auto session = std::make_shared<Session>();
    try {
        if (req.contains("graph") == req.contains("family")) {
            return error_response(400, "bad-request", "exactly one of \"graph\" or \"family\" is required");
        }
        if (req.contains("graph")) {
            const json& g = req["graph"];
            if (g.is_string()) {
                session->graph = parse_graph(g.get<std::string>());
            } else if (g.is_object()) {
                session->graph = parse_graph(g.dump());
            } else {
                return error_response(400, "bad-request", "\"graph\" must be a string or an object");
            }
        } else {
            const json& f = req["family"];
            if (!f.is_object() || !f.contains("name") || !f["name"].is_string()) {
                return error_response(400, "bad-request", "\"family\" needs a \"name\"");
            }
            FamilySpec spec{parse_family(f["name"].get<std::string>()), {}, std::nullopt};
            for (const auto& p : f.value("params", json::array())) {
                if (!p.is_number_integer()) {
                    return error_response(400, "bad-request", "family params must be integers");
                }
                const auto v = p.get<std::int64_t>();
                if (v < 0 || v > options_.fast_max_n) {
                    return error_response(400, "budget-exceeded", "family parameter out of range");
                }
                spec.params.push_back(static_cast<int>(v));
            }
            if (f.contains("seed")) {
                if (!f["seed"].is_number_unsigned()) {
                    return error_response(400, "bad-request", "seed must be a non-negative integer");
                }
                spec.seed = f["seed"].get<std::uint64_t>();
            }
            session->graph = generate(spec);
        }

        const std::string side = req.value("humanSide", "first");
        if (side != "first" && side != "second") {
            return error_response(400, "bad-request", "humanSide must be \"first\" or \"second\"");
        }
        session->human = side == "first" ? Player::kFirst : Player::kSecond;
        const std::string engine = req.value("engine", "fast");
        if (engine != "oracle" && engine != "fast") {
            return error_response(400, "bad-request", "engine must be \"oracle\" or \"fast\"");
        }
        session->engine = engine == "oracle" ? Engine::kOracle : Engine::kFast;

        const Graph& g = session->graph;
        if (g.n() == 0) return error_response(400, "bad-request", "graph has no vertices");
        if (!is_connected(g)) throw DisconnectedGraphError();
        const int cap = session->engine == Engine::kOracle ? options_.oracle_max_n : options_.fast_max_n;
        if (g.n() > cap) {
            return error_response(400, "budget-exceeded",
                                  "graph has " + std::to_string(g.n()) + " vertices; the " + engine +
                                      " engine accepts at most " + std::to_string(cap));
        }
        if (req.value("chordalBipartiteOnly", false) && !is_chordal_bipartite(g).chordal_bipartite) {
            session->warnings.push_back(
                "graph is not chordal bipartite; the game is still defined on any connected graph");
        }
        session->playground = g.empty_set();
        if (session->engine == Engine::kOracle) {
            session->oracle = std::make_unique<OracleSolver>(g, GameVariant::kOrdinary, kServiceOracleBudget);
        } else {
            session->fast = std::make_unique<FastSolver>(g);
        }
    } catch (const Error& e) {
        return error_response(status_for(e), e.kind(), e.what());
    } catch (const json::exception& e) {
        return error_response(400, "bad-request", e.what());
    }

    json state;
    {
        std::lock_guard lock(mutex_);
        session->id = fresh_id();
        while (sessions_.size() >= options_.max_sessions && !recency_.empty()) {
            sessions_.erase(recency_.back());
            recency_.pop_back();
        }
        recency_.push_front(session->id);
        sessions_[session->id] = {session, recency_.begin()};
        state = session->state();
    }
    return {201, json{{"id", session->id}, {"state", std::move(state)}}.dump()};
}

ServiceResponse GameService::get_game(const std::string& id) {
    auto s = find(id);
    if (!s) return error_response(404, "unknown-session", "no session " + id);
    std::shared_lock lock(s->mutex);
    return {200, s->state().dump()};
}

ServiceResponse GameService::list_moves(const std::string& id) {
    auto s = find(id);
    if (!s) return error_response(404, "unknown-session", "no session " + id);
    std::unique_lock lock(s->mutex);
    if (s->finished) return error_response(409, "finished", "game is finished");
    json out = json::array();
    for (const auto& o : s->options(options_.eval_budget)) {
        out.push_back({{"vertex", o.vertex},
                       {"playground", o.next.members()},
                       {"grundyAfter", o.grundy_after ? json(*o.grundy_after) : json(nullptr)},
                       {"winning", o.grundy_after ? json(*o.grundy_after == 0) : json(nullptr)}});
    }
    return {200, out.dump()};
}

ServiceResponse GameService::apply_move(const std::string& id, std::string_view body) {
    auto s = find(id);
    if (!s) return error_response(404, "unknown-session", "no session " + id);
    json req = json::parse(body, nullptr, false);
    if (req.is_discarded() || !req.is_object() || !req.contains("vertex") ||
        !req["vertex"].is_number_integer()) {
        return error_response(400, "bad-request", "body must be {\"vertex\": <integer>}");
    }
    const auto x = req["vertex"].get<std::int64_t>();
    std::unique_lock lock(s->mutex);
    if (s->finished) return error_response(409, "finished", "game is finished");
    if (s->to_move != s->human) return error_response(409, "wrong-turn", "it is the engine's turn");
    if (x < 0 || x >= s->graph.n()) {
        return error_response(400, "illegal-move", "vertex out of range");
    }
    try {
        s->play(static_cast<Vertex>(x));
    } catch (const ContractError& e) {
        return error_response(400, "illegal-move", e.what());
    }
    return {200, s->state().dump()};
}

ServiceResponse GameService::engine_move(const std::string& id) {
    auto s = find(id);
    if (!s) return error_response(404, "unknown-session", "no session " + id);
    std::unique_lock lock(s->mutex);
    if (s->finished) return error_response(409, "finished", "game is finished");
    if (s->to_move == s->human) return error_response(409, "wrong-turn", "it is the human's turn");
    const auto options = s->options(options_.eval_budget);
    // options is never empty here: a non-full convex playground always has a move.
    Vertex choice = options.front().vertex;
    for (const auto& o : options) {
        if (o.grundy_after == Grundy{0}) {
            choice = o.vertex;
            break;
        }
    }
    s->play(choice);
    return {200, json{{"vertex", choice}, {"state", s->state()}}.dump()};
}

ServiceResponse GameService::families() const {
    json out = json::array();
    for (const auto& f : family_catalog()) {
        out.push_back({{"name", f.name}, {"params", f.params}, {"description", f.description}});
    }
    return {200, out.dump()};
}

struct HttpServer::Impl {
    httplib::Server server;
};

HttpServer::HttpServer(GameService& service, std::string static_dir) : impl_(std::make_unique<Impl>()) {
    auto& svr = impl_->server;
    auto reply = [](httplib::Response& res, const ServiceResponse& r) {
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    const std::string id = R"(/api/games/([0-9a-zA-Z]+))";
    svr.Post("/api/games", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.create_game(req.body));
    });
    svr.Get(id, [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.get_game(req.matches[1]));
    });
    svr.Get(id + "/moves", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.list_moves(req.matches[1]));
    });
    svr.Post(id + "/moves", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.apply_move(req.matches[1], req.body));
    });
    svr.Post(id + "/engine-move", [&service, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.engine_move(req.matches[1]));
    });
    svr.Get("/api/families", [&service, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, service.families());
    });
    svr.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) {
            res.set_content(json{{"error", "not-found"}, {"message", "no such route"}}.dump(),
                            "application/json");
        }
    });
    svr.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            message = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(json{{"error", "internal"}, {"message", message}}.dump(), "application/json");
    });
    if (!static_dir.empty()) svr.set_mount_point("/", static_dir);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace p3
