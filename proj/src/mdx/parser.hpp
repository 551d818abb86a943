#pragma once

#include "mdx/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mdx {

// Expression tree for the script language. Identifier resolution happens at
// evaluation time: a name can be a let binding, a chart variable, or a
// chart variable prefixed with d (coordinate 1-form).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Ident, Basis, Neg, Add, Sub, Mul, Wedge, Call };
    Kind kind;
    Rational number;             // Number
    std::string name;            // Ident, Basis (without "@"), Call (function)
    std::vector<ExprPtr> args;   // Neg, Add, Sub, Mul, Wedge, Call
    int line = 0;
    int column = 0;
};

struct Statement {
    enum class Kind { Chart, Ambient, Graph, Let, Assert, Print, ExprOnly };
    Kind kind;
    std::vector<std::string> names;  // Chart variables or the Let target
    int number = 0;                  // Ambient degree
    ExprPtr a;
    ExprPtr b;                       // Assert right-hand side
    int line = 0;
    int column = 0;
};

using Script = std::vector<Statement>;

// Parses a whole script; throws parse_error with a 1-based position and the
// expected-token set on bad input.
Script parse_script(const std::string& source);

// True for statement keywords and builtin function names, which cannot be
// chart variables or let targets.
bool reserved_word(const std::string& name);

// Renders the tree back in script syntax; parse_script(script_str(s)) gives
// a script with the same meaning.
std::string expr_str(const ExprPtr& e);
std::string script_str(const Script& s);

}  // namespace mdx
