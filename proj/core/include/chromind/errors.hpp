#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromind {

// Exact-search budget exceeded (vertex guard or factorial guard).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A colouring is not proper; carries the offending edges.
class ImproperColoringError : public std::runtime_error {
public:
    ImproperColoringError(const std::string& what,
                          std::vector<std::pair<int, int>> edges)
        : std::runtime_error(what), violating_edges(std::move(edges)) {}

    std::vector<std::pair<int, int>> violating_edges;
};

// No witness colouring is defined for the requested combination.
class NoWitnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The claims data file could not be parsed; lists the offending lines.
class ClaimsFormatError : public std::runtime_error {
public:
    ClaimsFormatError(const std::string& what, std::vector<std::string> lines)
        : std::runtime_error(what), offending_lines(std::move(lines)) {}

    std::vector<std::string> offending_lines;
};

// Exact-search vertex budget. Defaults to 25; the environment variable
// CHROMIND_BUDGET_VERTICES overrides it.
int vertex_budget();

}  // namespace chromind
