#pragma once

#include <stdexcept>
#include <string>

namespace fracgreen {

/// A series or iteration failed to converge within its budget.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A symbolic series exceeded its term-count cap.
struct TermOverflowError : std::runtime_error {
    explicit TermOverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem-spec text could not be parsed.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line_, int column_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
    int line;
    int column;
};

/// Parsed input violates a structural invariant (e.g. non-decreasing orders).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fracgreen
