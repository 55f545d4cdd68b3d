#ifndef LUMBRAL_PARSER_HPP
#define LUMBRAL_PARSER_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include "lumbral/series.hpp"

namespace lumbral {

/// Thrown on malformed input; `offset` is the byte position of the error.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression AST over one series variable with rational literals,
/// + - * / ^ (nonnegative integer exponents) and exp/log application.
struct Expr {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Exp, Log };
    Kind kind;
    Rational value;       // Number
    int exponent = 0;     // Pow
    char var = 't';       // Var
    ExprPtr lhs, rhs;     // operands; unary nodes use lhs only
};

/// Grammar (precedence low to high): sum -> term -> power -> atom.
/// '^' binds tighter than unary minus; '*' and '/' are left associative;
/// '/' is always exact series division. Only `var` may appear as the
/// variable; any other identifier besides exp/log is rejected.
ExprPtr expr_parse(const std::string& text, char var = 't');

/// Evaluate in the truncated series ring over the given variable.
Series expr_eval(const Expr& e, char var, int order);

/// Parenthesized rendering, stable under expr_parse round trips.
std::string expr_str(const Expr& e);

/// expr_eval(expr_parse(text, var), var, order) in one step.
Series series_parse(const std::string& text, char var, int order);

}  // namespace lumbral

#endif
