#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace p3 {

struct ServiceOptions {
    std::size_t max_sessions = 256;
    std::chrono::milliseconds eval_budget{2000};
    // Largest graph accepted per engine at session creation.
    int oracle_max_n = 40;
    int fast_max_n = 2000;
};

// HTTP-shaped result: status code and a JSON body.
struct ServiceResponse {
    int status = 200;
    std::string body;
};

struct Session;

// In-memory game sessions. Requests against one session are serialized by a
// per-session mutex; distinct sessions proceed independently.
class GameService {
public:
    explicit GameService(ServiceOptions options = {});
    ~GameService();
    GameService(const GameService&) = delete;
    GameService& operator=(const GameService&) = delete;

    ServiceResponse create_game(std::string_view body);
    ServiceResponse get_game(const std::string& id);
    ServiceResponse list_moves(const std::string& id);
    ServiceResponse apply_move(const std::string& id, std::string_view body);
    ServiceResponse engine_move(const std::string& id);
    ServiceResponse families() const;

    std::size_t session_count() const;

private:
    std::shared_ptr<Session> find(const std::string& id);
    std::string fresh_id();

    ServiceOptions options_;
    mutable std::mutex mutex_;
    std::list<std::string> recency_;  // front = most recently used
    struct Entry {
        std::shared_ptr<Session> session;
        std::list<std::string>::iterator position;
    };
    std::unordered_map<std::string, Entry> sessions_;
    std::uint64_t counter_ = 0;
    std::uint64_t salt_ = 0;
};

// Routes the service over HTTP. `static_dir`, when non-empty, is mounted at /.
class HttpServer {
public:
    explicit HttpServer(GameService& service, std::string static_dir = {});
    ~HttpServer();

    // Returns the bound port, or -1 on failure.
    int bind(const std::string& host, int port);
    // Blocks until stop() is called.
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace p3
