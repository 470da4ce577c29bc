#ifndef COBORDISM_EXPRESSION_HPP
#define COBORDISM_EXPRESSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "cobordism/fgl.hpp"
#include "cobordism/rational.hpp"
#include "cobordism/series.hpp"

namespace cobordism {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Syntax tree of the expression language:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' ['-'] int)?
//   atom   := rational | ident | call | '(' expr ')'
//   ident  := ('t'|'m'|'x') int
//   call   := F(expr, expr) | rho(expr) | nser(['-'] int, expr) | chern([ints])
struct Expr {
    enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Pow, Call };

    Kind kind = Kind::Number;
    Rational number;           // Number (never negative)
    char letter = 't';         // Ident
    long index = 0;            // Ident
    long exponent = 0;         // Pow
    std::string function;      // Call: "F", "rho", "nser" or "chern"
    std::vector<long> ints;    // nser: {n}; chern: the character
    std::vector<ExprPtr> args; // operands

    static ExprPtr make_number(const Rational& q);
    static ExprPtr make_ident(char letter, long index);
    static ExprPtr make_neg(ExprPtr a);
    static ExprPtr make_binary(Kind kind, ExprPtr a, ExprPtr b);
    static ExprPtr make_pow(ExprPtr base, long exponent);
    static ExprPtr make_call(std::string function, std::vector<long> ints, std::vector<ExprPtr> args);
};

bool operator==(const Expr& a, const Expr& b);

// Throws Error(Parse) with "line L, column C: ..." in the message.
ExprPtr parse_expression(const std::string& text);

// Text that parses back to the same tree, with the fewest parentheses.
std::string render_expression(const Expr& e);

struct EvalContext {
    const FGLContext* fgl = nullptr;
    std::vector<std::string> vars; // series variables, e.g. t1..tn or x1..xn
    int guarantee = 0;             // truncation of the result
};

TruncSeries evaluate(const Expr& e, const EvalContext& ctx);
TruncSeries evaluate(const std::string& text, const EvalContext& ctx);

} // namespace cobordism

#endif
