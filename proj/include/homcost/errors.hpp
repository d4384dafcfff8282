#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homcost {

/// Malformed input text. `line()` is 1-based; 0 means the error is not tied
/// to a single line (e.g. the file ended early).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & what) :
        std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        _line(line)
    {
    }

    auto line() const -> std::size_t { return _line; }

private:
    std::size_t _line;
};

/// Raised by the transitive closure when loop-free output was demanded but the
/// input has a directed cycle through `vertex()`.
class CyclicClosureError : public std::invalid_argument {
public:
    explicit CyclicClosureError(int vertex) :
        std::invalid_argument("transitive closure would create a loop at vertex " + std::to_string(vertex)),
        _vertex(vertex)
    {
    }

    auto vertex() const -> int { return _vertex; }

private:
    int _vertex;
};

/// The brute-force oracle refused an instance larger than its budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}
