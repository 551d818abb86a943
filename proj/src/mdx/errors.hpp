#pragma once

#include <stdexcept>
#include <string>

namespace mdx {

// Raised for structurally invalid inputs: chart mismatches, bad degrees,
// unknown names, malformed statements that lex fine but make no sense.
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an operation is outside the supported fragment (for example
// the Hamiltonian solver on a non-constant ambient form).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the lexer/parser with a 1-based source position.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

}  // namespace mdx
