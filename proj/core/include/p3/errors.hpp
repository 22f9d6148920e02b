#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3 {

// Base for every domain error raised by the library. `kind()` is a stable
// machine-readable tag used by the CLI and the HTTP service.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("parse-error", "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Raised when an operation is called outside its precondition.
class ContractError : public Error {
public:
    explicit ContractError(const std::string& message) : Error("contract-violation", message) {}
};

class NotBipartiteError : public Error {
public:
    explicit NotBipartiteError(std::vector<int> cycle)
        : Error("not-bipartite", "graph contains an odd cycle of length " +
                                     std::to_string(cycle.size())),
          cycle_(std::move(cycle)) {}

    const std::vector<int>& cycle() const noexcept { return cycle_; }

private:
    std::vector<int> cycle_;
};

class DisconnectedGraphError : public Error {
public:
    DisconnectedGraphError() : Error("disconnected-graph", "graph is not connected") {}
};

// Exhaustive routines refuse inputs above their configured size cap.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& what, std::size_t value, std::size_t cap)
        : Error("cap-exceeded", what + " " + std::to_string(value) + " exceeds cap " +
                                    std::to_string(cap)) {}
};

class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& message) : Error("budget-exceeded", message) {}
};

}  // namespace p3
