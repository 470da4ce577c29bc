#include "cobordism/expression.hpp"

#include <cctype>
#include <map>

#include "cobordism/equivariant.hpp"
#include "cobordism/errors.hpp"

namespace cobordism {

ExprPtr Expr::make_number(const Rational& q)
{
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Number;
    e->number = q;
    return e;
}

ExprPtr Expr::make_ident(char letter, long index)
{
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Ident;
    e->letter = letter;
    e->index = index;
    return e;
}

ExprPtr Expr::make_neg(ExprPtr a)
{
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Neg;
    e->args = {std::move(a)};
    return e;
}

ExprPtr Expr::make_binary(Kind kind, ExprPtr a, ExprPtr b)
{
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = {std::move(a), std::move(b)};
    return e;
}

ExprPtr Expr::make_pow(ExprPtr base, long exponent)
{
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->exponent = exponent;
    e->args = {std::move(base)};
    return e;
}

ExprPtr Expr::make_call(std::string function, std::vector<long> ints, std::vector<ExprPtr> args)
{
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Call;
    e->function = std::move(function);
    e->ints = std::move(ints);
    e->args = std::move(args);
    return e;
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Expr::Kind::Number:
        return a.number == b.number;
    case Expr::Kind::Ident:
        return a.letter == b.letter && a.index == b.index;
    case Expr::Kind::Pow:
        if (a.exponent != b.exponent) return false;
        break;
    case Expr::Kind::Call:
        if (a.function != b.function || a.ints != b.ints) return false;
        break;
    default:
        break;
    }
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!(*a.args[i] == *b.args[i])) return false;
    return true;
}

namespace {

enum class Tok { Number, Ident, Function, Plus, Minus, Star, Caret, LParen, RParen, Comma, LBracket, RBracket, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

[[noreturn]] void fail(int line, int column, const std::string& message)
{
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

std::vector<Token> tokenize(const std::string& text)
{
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = column;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j + 1 < text.size() && text[j] == '/' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            }
            tok.kind = Tok::Number;
            tok.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            std::string letters = text.substr(i, j - i);
            std::size_t k = j;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
            if (k > j && (letters == "t" || letters == "m" || letters == "x")) {
                tok.kind = Tok::Ident;
                tok.text = text.substr(i, k - i);
                advance(k - i);
            } else if (k == j && (letters == "F" || letters == "rho" || letters == "nser" || letters == "chern")) {
                tok.kind = Tok::Function;
                tok.text = letters;
                advance(j - i);
            } else {
                fail(line, column, "unknown identifier '" + text.substr(i, k - i) + "'");
            }
        } else {
            static const std::map<char, Tok> symbols{{'+', Tok::Plus},   {'-', Tok::Minus},  {'*', Tok::Star},
                                                     {'^', Tok::Caret},  {'(', Tok::LParen}, {')', Tok::RParen},
                                                     {',', Tok::Comma},  {'[', Tok::LBracket}, {']', Tok::RBracket}};
            auto it = symbols.find(c);
            if (it == symbols.end()) fail(line, column, std::string("unexpected character '") + c + "'");
            tok.kind = it->second;
            tok.text = std::string(1, c);
            advance(1);
        }
        out.push_back(tok);
    }
    Token end;
    end.line = line;
    end.column = column;
    end.text = "end of input";
    out.push_back(end);
    return out;
}

long to_long(const Token& tok)
{
    if (tok.text.size() > 15) fail(tok.line, tok.column, "integer '" + tok.text + "' is too large");
    return std::stol(tok.text);
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    ExprPtr parse()
    {
        ExprPtr e = expr(nullptr);
        if (peek().kind != Tok::End) fail(peek().line, peek().column, "unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    bool starts_operand() const
    {
        switch (peek().kind) {
        case Tok::Number:
        case Tok::Ident:
        case Tok::Function:
        case Tok::LParen:
        case Tok::Minus:
            return true;
        default:
            return false;
        }
    }

    // `op` is the operator just consumed; a missing operand is reported there.
    void require_operand(const Token* op)
    {
        if (starts_operand()) return;
        if (op) fail(op->line, op->column, "missing operand after '" + op->text + "'");
        fail(peek().line, peek().column, "expected an operand, found '" + peek().text + "'");
    }

    void expect(Tok kind, const char* what)
    {
        if (peek().kind != kind) fail(peek().line, peek().column, std::string("expected ") + what + ", found '" + peek().text + "'");
        take();
    }

    ExprPtr expr(const Token* op)
    {
        ExprPtr left = term(op);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& o = take();
            ExprPtr right = term(&o);
            left = Expr::make_binary(o.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, left, right);
        }
        return left;
    }

    ExprPtr term(const Token* op)
    {
        ExprPtr left = factor(op);
        while (peek().kind == Tok::Star) {
            const Token& o = take();
            left = Expr::make_binary(Expr::Kind::Mul, left, factor(&o));
        }
        return left;
    }

    ExprPtr factor(const Token* op)
    {
        require_operand(op);
        if (peek().kind == Tok::Minus) {
            const Token& o = take();
            return Expr::make_neg(factor(&o));
        }
        ExprPtr base = atom();
        if (peek().kind == Tok::Caret) {
            const Token& o = take();
            return Expr::make_pow(base, signed_int(&o));
        }
        return base;
    }

    long signed_int(const Token* op)
    {
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            take();
            negative = true;
        }
        if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos)
            fail(op->line, op->column, "expected an integer after '" + op->text + "'");
        long v = to_long(take());
        return negative ? -v : v;
    }

    ExprPtr atom()
    {
        const Token& tok = take();
        switch (tok.kind) {
        case Tok::Number: {
            Rational q;
            try {
                q = Rational(tok.text);
            } catch (const std::invalid_argument&) {
                fail(tok.line, tok.column, "malformed number '" + tok.text + "'");
            }
            if (q.get_den() == 0) fail(tok.line, tok.column, "zero denominator");
            q.canonicalize();
            return Expr::make_number(q);
        }
        case Tok::Ident: {
            Token digits = tok;
            digits.text = tok.text.substr(1);
            return Expr::make_ident(tok.text[0], to_long(digits));
        }
        case Tok::LParen: {
            ExprPtr e = expr(&tok);
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::Function:
            return call(tok);
        default:
            fail(tok.line, tok.column, "expected an operand, found '" + tok.text + "'");
        }
    }

    ExprPtr call(const Token& name)
    {
        expect(Tok::LParen, "'('");
        if (name.text == "F") {
            ExprPtr a = expr(&name);
            expect(Tok::Comma, "','");
            ExprPtr b = expr(&name);
            expect(Tok::RParen, "')'");
            return Expr::make_call("F", {}, {a, b});
        }
        if (name.text == "rho") {
            ExprPtr a = expr(&name);
            expect(Tok::RParen, "')'");
            return Expr::make_call("rho", {}, {a});
        }
        if (name.text == "nser") {
            long n = signed_int(&name);
            expect(Tok::Comma, "','");
            ExprPtr a = expr(&name);
            expect(Tok::RParen, "')'");
            return Expr::make_call("nser", {n}, {a});
        }
        expect(Tok::LBracket, "'['");
        std::vector<long> ints;
        if (peek().kind != Tok::RBracket) {
            const Token& open = toks_[pos_ - 1];
            ints.push_back(signed_int(&open));
            while (peek().kind == Tok::Comma) {
                const Token& comma = take();
                ints.push_back(signed_int(&comma));
            }
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::RParen, "')'");
        return Expr::make_call("chern", std::move(ints), {});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int precedence(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        return 0;
    case Expr::Kind::Mul:
        return 1;
    case Expr::Kind::Neg:
        return 2;
    case Expr::Kind::Pow:
        return 3;
    default:
        return 4;
    }
}

std::string render_at(const Expr& e, int min_prec)
{
    std::string s;
    switch (e.kind) {
    case Expr::Kind::Number:
        s = to_string(e.number);
        break;
    case Expr::Kind::Ident:
        s = std::string(1, e.letter) + std::to_string(e.index);
        break;
    case Expr::Kind::Neg:
        s = "-" + render_at(*e.args[0], 2);
        break;
    case Expr::Kind::Add:
        s = render_at(*e.args[0], 0) + " + " + render_at(*e.args[1], 1);
        break;
    case Expr::Kind::Sub:
        s = render_at(*e.args[0], 0) + " - " + render_at(*e.args[1], 1);
        break;
    case Expr::Kind::Mul:
        s = render_at(*e.args[0], 1) + "*" + render_at(*e.args[1], 2);
        break;
    case Expr::Kind::Pow:
        s = render_at(*e.args[0], 4) + "^" + std::to_string(e.exponent);
        break;
    case Expr::Kind::Call:
        if (e.function == "chern") {
            s = "chern([";
            for (std::size_t i = 0; i < e.ints.size(); ++i) s += (i ? "," : "") + std::to_string(e.ints[i]);
            s += "])";
        } else {
            s = e.function + "(";
            bool first = true;
            for (long n : e.ints) {
                s += std::to_string(n);
                first = false;
            }
            for (const auto& a : e.args) {
                s += (first ? "" : ", ") + render_at(*a, 0);
                first = false;
            }
            s += ")";
        }
        break;
    }
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

TruncSeries eval(const Expr& e, const EvalContext& ctx)
{
    const int G = ctx.guarantee;
    switch (e.kind) {
    case Expr::Kind::Number:
        return TruncSeries::constant(ctx.vars, GradedCoeff(e.number), G);
    case Expr::Kind::Ident: {
        std::string name = std::string(1, e.letter) + std::to_string(e.index);
        if (e.letter == 'm') {
            if (e.index < 1) throw Error(ErrorKind::InvalidArgument, "generator index must be >= 1 in '" + name + "'");
            GradedCoeff c = GradedCoeff::generator(static_cast<int>(e.index));
            if (ctx.fgl) c = ctx.fgl->specialize(c);
            return TruncSeries::constant(ctx.vars, c, G);
        }
        for (std::size_t i = 0; i < ctx.vars.size(); ++i)
            if (ctx.vars[i] == name) return TruncSeries::variable(ctx.vars, i, G);
        throw Error(ErrorKind::InvalidArgument, "variable '" + name + "' is not available here");
    }
    case Expr::Kind::Neg:
        return -eval(*e.args[0], ctx);
    case Expr::Kind::Add:
        return eval(*e.args[0], ctx) + eval(*e.args[1], ctx);
    case Expr::Kind::Sub:
        return eval(*e.args[0], ctx) - eval(*e.args[1], ctx);
    case Expr::Kind::Mul:
        return ts_mul(eval(*e.args[0], ctx), eval(*e.args[1], ctx), G);
    case Expr::Kind::Pow: {
        TruncSeries base = eval(*e.args[0], ctx);
        if (e.exponent < 0) base = ts_invert_unit(base);
        long k = e.exponent < 0 ? -e.exponent : e.exponent;
        TruncSeries out = TruncSeries::constant(ctx.vars, GradedCoeff(1), G);
        for (long i = 0; i < k; ++i) out = ts_mul(out, base, G);
        return out;
    }
    case Expr::Kind::Call:
        break;
    }
    if (!ctx.fgl) throw Error(ErrorKind::InvalidArgument, e.function + " needs a formal group law");
    const FGLContext& fgl = *ctx.fgl;
    if (e.function == "F") return fgl.add(eval(*e.args[0], ctx), eval(*e.args[1], ctx));
    if (e.function == "rho") return fgl.negate(eval(*e.args[0], ctx));
    if (e.function == "nser") return fgl.multiple(static_cast<int>(e.ints.at(0)), eval(*e.args[0], ctx));
    for (const auto& v : ctx.vars)
        if (v.empty() || v[0] != 't') throw Error(ErrorKind::InvalidArgument, "chern(...) needs torus variables t1..tn");
    return chern_in(fgl, ctx.vars, Character(e.ints));
}

} // namespace

ExprPtr parse_expression(const std::string& text)
{
    return Parser(text).parse();
}

std::string render_expression(const Expr& e)
{
    return render_at(e, 0);
}

TruncSeries evaluate(const Expr& e, const EvalContext& ctx)
{
    TruncSeries out = eval(e, ctx);
    return out.guarantee() > ctx.guarantee ? out.truncated(ctx.guarantee) : out;
}

TruncSeries evaluate(const std::string& text, const EvalContext& ctx)
{
    return evaluate(*parse_expression(text), ctx);
}

} // namespace cobordism
