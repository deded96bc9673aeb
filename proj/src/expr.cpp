#include "pgc/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

#include "pgc/errors.hpp"

namespace pgc {
namespace detail {

enum class Kind {
    Number,
    Variable,
    Add,
    Sub,
    Mul,
    Div,
    Pow, // exponent is a constant, stored in `number`
    Neg,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
    Exp,
    Log,
    Sqrt,
    Abs,
};

struct ExprNode {
    Kind kind;
    double number = 0.0;
    std::string name;
    NodePtr a;
    NodePtr b;
};

namespace {

NodePtr make_number(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Number;
    n->number = v;
    return n;
}

NodePtr make_variable(std::string name) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Variable;
    n->name = std::move(name);
    return n;
}

bool is_number(const NodePtr& n, double v) {
    return n->kind == Kind::Number && n->number == v;
}

NodePtr make_binary(Kind kind, NodePtr a, NodePtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr make_neg(NodePtr a);

NodePtr make_add(NodePtr a, NodePtr b) {
    if (a->kind == Kind::Number && b->kind == Kind::Number) {
        return make_number(a->number + b->number);
    }
    if (is_number(a, 0.0)) return b;
    if (is_number(b, 0.0)) return a;
    return make_binary(Kind::Add, std::move(a), std::move(b));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (a->kind == Kind::Number && b->kind == Kind::Number) {
        return make_number(a->number - b->number);
    }
    if (is_number(b, 0.0)) return a;
    if (is_number(a, 0.0)) return make_neg(std::move(b));
    return make_binary(Kind::Sub, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (a->kind == Kind::Number && b->kind == Kind::Number) {
        return make_number(a->number * b->number);
    }
    if (is_number(a, 0.0) || is_number(b, 0.0)) return make_number(0.0);
    if (is_number(a, 1.0)) return b;
    if (is_number(b, 1.0)) return a;
    if (is_number(a, -1.0)) return make_neg(std::move(b));
    if (is_number(b, -1.0)) return make_neg(std::move(a));
    return make_binary(Kind::Mul, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (a->kind == Kind::Number && b->kind == Kind::Number && b->number != 0.0) {
        return make_number(a->number / b->number);
    }
    if (is_number(b, 1.0)) return a;
    return make_binary(Kind::Div, std::move(a), std::move(b));
}

NodePtr make_pow(NodePtr base, double exponent) {
    if (exponent == 1.0) return base;
    if (exponent == 0.0) return make_number(1.0);
    if (base->kind == Kind::Number) {
        const double v = std::pow(base->number, exponent);
        if (std::isfinite(v)) return make_number(v);
    }
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Pow;
    n->number = exponent;
    n->a = std::move(base);
    return n;
}

NodePtr make_neg(NodePtr a) {
    if (a->kind == Kind::Number) return make_number(-a->number);
    if (a->kind == Kind::Neg) return a->a;
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Neg;
    n->a = std::move(a);
    return n;
}

NodePtr make_func(Kind kind, NodePtr a) {
    if (a->kind == Kind::Number) {
        double v = 0.0;
        const double x = a->number;
        switch (kind) {
        case Kind::Sin: v = std::sin(x); break;
        case Kind::Cos: v = std::cos(x); break;
        case Kind::Sinh: v = std::sinh(x); break;
        case Kind::Cosh: v = std::cosh(x); break;
        case Kind::Tanh: v = std::tanh(x); break;
        case Kind::Exp: v = std::exp(x); break;
        case Kind::Log: v = x > 0.0 ? std::log(x) : NAN; break;
        case Kind::Sqrt: v = x >= 0.0 ? std::sqrt(x) : NAN; break;
        case Kind::Abs: v = std::abs(x); break;
        default: break;
        }
        if (std::isfinite(v)) return make_number(v);
    }
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->a = std::move(a);
    return n;
}

std::string print(const NodePtr& n);

std::string print_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int precedence(const NodePtr& n) {
    switch (n->kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
    }
}

std::string print_child(const NodePtr& child, int parent_prec, bool tight) {
    std::string s = print(child);
    const bool need_parens =
        precedence(child) < parent_prec || (tight && precedence(child) == parent_prec);
    // A bare negative literal also needs parens so "a*-2" round-trips safely.
    if (!need_parens && child->kind == Kind::Number && child->number < 0.0) {
        return "(" + s + ")";
    }
    return need_parens ? "(" + s + ")" : s;
}

std::string print(const NodePtr& n) {
    switch (n->kind) {
    case Kind::Number: return print_number(n->number);
    case Kind::Variable: return n->name;
    case Kind::Add: return print_child(n->a, 1, false) + " + " + print_child(n->b, 1, false);
    case Kind::Sub: return print_child(n->a, 1, false) + " - " + print_child(n->b, 1, true);
    case Kind::Mul: return print_child(n->a, 2, false) + "*" + print_child(n->b, 2, false);
    case Kind::Div: return print_child(n->a, 2, false) + "/" + print_child(n->b, 2, true);
    case Kind::Neg: return "-" + print_child(n->a, 3, false);
    case Kind::Pow: {
        std::string e = print_number(n->number);
        if (n->number < 0.0) e = "(" + e + ")";
        return print_child(n->a, 4, true) + "^" + e;
    }
    case Kind::Sin: return "sin(" + print(n->a) + ")";
    case Kind::Cos: return "cos(" + print(n->a) + ")";
    case Kind::Sinh: return "sinh(" + print(n->a) + ")";
    case Kind::Cosh: return "cosh(" + print(n->a) + ")";
    case Kind::Tanh: return "tanh(" + print(n->a) + ")";
    case Kind::Exp: return "exp(" + print(n->a) + ")";
    case Kind::Log: return "ln(" + print(n->a) + ")";
    case Kind::Sqrt: return "sqrt(" + print(n->a) + ")";
    case Kind::Abs: return "abs(" + print(n->a) + ")";
    }
    return "?";
}

[[noreturn]] void domain_fail(const char* what, const NodePtr& n, double at) {
    throw DomainError(std::string(what) + " in '" + print(n) + "'", print(n), at);
}

double eval(const NodePtr& n, double value) {
    switch (n->kind) {
    case Kind::Number: return n->number;
    case Kind::Variable: return value;
    case Kind::Add: return eval(n->a, value) + eval(n->b, value);
    case Kind::Sub: return eval(n->a, value) - eval(n->b, value);
    case Kind::Mul: return eval(n->a, value) * eval(n->b, value);
    case Kind::Div: {
        const double den = eval(n->b, value);
        if (den == 0.0) domain_fail("division by zero", n, value);
        return eval(n->a, value) / den;
    }
    case Kind::Pow: {
        const double base = eval(n->a, value);
        const double v = std::pow(base, n->number);
        if (!std::isfinite(v)) domain_fail("power out of domain", n, value);
        return v;
    }
    case Kind::Neg: return -eval(n->a, value);
    case Kind::Sin: return std::sin(eval(n->a, value));
    case Kind::Cos: return std::cos(eval(n->a, value));
    case Kind::Sinh: {
        const double v = std::sinh(eval(n->a, value));
        if (!std::isfinite(v)) domain_fail("overflow", n, value);
        return v;
    }
    case Kind::Cosh: {
        const double v = std::cosh(eval(n->a, value));
        if (!std::isfinite(v)) domain_fail("overflow", n, value);
        return v;
    }
    case Kind::Tanh: return std::tanh(eval(n->a, value));
    case Kind::Exp: {
        const double v = std::exp(eval(n->a, value));
        if (!std::isfinite(v)) domain_fail("overflow", n, value);
        return v;
    }
    case Kind::Log: {
        const double arg = eval(n->a, value);
        if (arg <= 0.0) domain_fail("ln of nonpositive value", n, value);
        return std::log(arg);
    }
    case Kind::Sqrt: {
        const double arg = eval(n->a, value);
        if (arg < 0.0) domain_fail("sqrt of negative value", n, value);
        return std::sqrt(arg);
    }
    case Kind::Abs: return std::abs(eval(n->a, value));
    }
    return 0.0;
}

NodePtr diff(const NodePtr& n) {
    switch (n->kind) {
    case Kind::Number: return make_number(0.0);
    case Kind::Variable: return make_number(1.0);
    case Kind::Add: return make_add(diff(n->a), diff(n->b));
    case Kind::Sub: return make_sub(diff(n->a), diff(n->b));
    case Kind::Mul:
        return make_add(make_mul(diff(n->a), n->b), make_mul(n->a, diff(n->b)));
    case Kind::Div:
        // (u/v)' = (u'v - uv') / v^2
        return make_div(make_sub(make_mul(diff(n->a), n->b), make_mul(n->a, diff(n->b))),
                        make_pow(n->b, 2.0));
    case Kind::Pow:
        // constant exponent: (u^c)' = c u^(c-1) u'
        return make_mul(make_mul(make_number(n->number), make_pow(n->a, n->number - 1.0)),
                        diff(n->a));
    case Kind::Neg: return make_neg(diff(n->a));
    case Kind::Sin: return make_mul(make_func(Kind::Cos, n->a), diff(n->a));
    case Kind::Cos: return make_neg(make_mul(make_func(Kind::Sin, n->a), diff(n->a)));
    case Kind::Sinh: return make_mul(make_func(Kind::Cosh, n->a), diff(n->a));
    case Kind::Cosh: return make_mul(make_func(Kind::Sinh, n->a), diff(n->a));
    case Kind::Tanh:
        return make_mul(make_sub(make_number(1.0), make_pow(make_func(Kind::Tanh, n->a), 2.0)),
                        diff(n->a));
    case Kind::Exp: return make_mul(make_func(Kind::Exp, n->a), diff(n->a));
    case Kind::Log: return make_div(diff(n->a), n->a);
    case Kind::Sqrt:
        return make_div(diff(n->a), make_mul(make_number(2.0), make_func(Kind::Sqrt, n->a)));
    case Kind::Abs:
        // sign(u) u' written as u u' / |u|; undefined at u = 0, which
        // surfaces as a division-by-zero domain error on evaluation.
        return make_div(make_mul(n->a, diff(n->a)), make_func(Kind::Abs, n->a));
    }
    return make_number(0.0);
}

bool constant(const NodePtr& n) {
    if (n->kind == Kind::Variable) return false;
    if (n->a && !constant(n->a)) return false;
    if (n->b && !constant(n->b)) return false;
    return true;
}

NodePtr subst(const NodePtr& n, const NodePtr& replacement) {
    switch (n->kind) {
    case Kind::Number: return n;
    case Kind::Variable: return replacement;
    default: break;
    }
    auto out = std::make_shared<ExprNode>(*n);
    if (n->a) out->a = subst(n->a, replacement);
    if (n->b) out->b = subst(n->b, replacement);
    return out;
}

} // namespace
} // namespace detail

using detail::Kind;
using detail::NodePtr;

Expr::Expr() : node_(detail::make_number(0.0)) {}

Expr Expr::number(double value) { return Expr(detail::make_number(value)); }

Expr Expr::variable(std::string name) { return Expr(detail::make_variable(std::move(name))); }

double Expr::evaluate(double value) const { return detail::eval(node_, value); }

Expr Expr::derivative() const { return Expr(detail::diff(node_)); }

Expr Expr::substitute(const Expr& replacement) const {
    return Expr(detail::subst(node_, replacement.node_));
}

bool Expr::is_constant() const { return detail::constant(node_); }

std::string Expr::to_string() const { return detail::print(node_); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(detail::make_add(a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(detail::make_sub(a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(detail::make_mul(a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(detail::make_div(a.node_, b.node_)); }
Expr operator-(const Expr& a) { return Expr(detail::make_neg(a.node_)); }
Expr pow(const Expr& base, double exponent) { return Expr(detail::make_pow(base.node_, exponent)); }
Expr sin(const Expr& a) { return Expr(detail::make_func(Kind::Sin, a.node_)); }
Expr cos(const Expr& a) { return Expr(detail::make_func(Kind::Cos, a.node_)); }
Expr sinh(const Expr& a) { return Expr(detail::make_func(Kind::Sinh, a.node_)); }
Expr cosh(const Expr& a) { return Expr(detail::make_func(Kind::Cosh, a.node_)); }
Expr tanh(const Expr& a) { return Expr(detail::make_func(Kind::Tanh, a.node_)); }
Expr exp(const Expr& a) { return Expr(detail::make_func(Kind::Exp, a.node_)); }
Expr log(const Expr& a) { return Expr(detail::make_func(Kind::Log, a.node_)); }
Expr sqrt(const Expr& a) { return Expr(detail::make_func(Kind::Sqrt, a.node_)); }
Expr abs(const Expr& a) { return Expr(detail::make_func(Kind::Abs, a.node_)); }

// ---------------------------------------------------------------------------
// Parser: recursive descent over a token stream with 1-based columns.

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    int column; // 1-based
    double number = 0.0;
    std::string text;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = text.c_str() + i;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) {
                throw ParseError("syntax error at column " + std::to_string(col) +
                                     ": bad number",
                                 col);
            }
            out.push_back({Tok::Number, col, v, std::string(begin, static_cast<size_t>(end - begin))});
            i += static_cast<size_t>(end - begin);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Ident, col, 0.0, text.substr(i, j - i)});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
            throw ParseError("syntax error at column " + std::to_string(col) +
                                 ": unexpected character '" + std::string(1, c) + "'",
                             col);
        }
        out.push_back({k, col, 0.0, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, static_cast<int>(text.size()) + 1, 0.0, ""});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string varname)
        : tokens_(std::move(tokens)), varname_(std::move(varname)) {}

    Expr run() {
        Expr e = parse_sum();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& what) {
        const std::string shown = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError("syntax error at column " + std::to_string(t.column) + ": expected " +
                             what + ", found " + shown,
                         t.column);
    }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail(peek(), what);
        ++pos_;
    }

    Expr parse_sum() {
        Expr e = parse_product();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Tok op = take().kind;
            Expr rhs = parse_product();
            e = op == Tok::Plus ? e + rhs : e - rhs;
        }
        return e;
    }

    Expr parse_product() {
        Expr e = parse_unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Tok op = take().kind;
            Expr rhs = parse_unary();
            e = op == Tok::Star ? e * rhs : e / rhs;
        }
        return e;
    }

    Expr parse_unary() {
        if (peek().kind == Tok::Minus) {
            take();
            return -parse_unary();
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (peek().kind != Tok::Caret) return base;
        const Token caret = take();
        Expr exponent = parse_unary(); // right-assoc, allows x^-2
        if (!exponent.is_constant()) {
            throw ParseError("syntax error at column " + std::to_string(caret.column) +
                                 ": exponent must be constant (write exp(b*ln(a)) for "
                                 "general powers)",
                             caret.column);
        }
        return pow(base, exponent.evaluate(0.0));
    }

    Expr parse_atom() {
        const Token t = peek();
        switch (t.kind) {
        case Tok::Number:
            take();
            return Expr::number(t.number);
        case Tok::LParen: {
            take();
            Expr e = parse_sum();
            expect(Tok::RParen, "')'");
            return e;
        }
        case Tok::Ident: {
            take();
            if (t.text == varname_) return Expr::variable(varname_);
            Expr (*fn)(const Expr&) = nullptr;
            if (t.text == "sin") fn = static_cast<Expr (*)(const Expr&)>(&pgc::sin);
            else if (t.text == "cos") fn = &pgc::cos;
            else if (t.text == "sinh") fn = &pgc::sinh;
            else if (t.text == "cosh") fn = &pgc::cosh;
            else if (t.text == "tanh") fn = &pgc::tanh;
            else if (t.text == "exp") fn = &pgc::exp;
            else if (t.text == "ln") fn = &pgc::log;
            else if (t.text == "sqrt") fn = &pgc::sqrt;
            else if (t.text == "abs") fn = &pgc::abs;
            if (!fn) {
                throw ParseError("unknown identifier '" + t.text + "' at column " +
                                     std::to_string(t.column),
                                 t.column);
            }
            expect(Tok::LParen, "'(' after function name");
            Expr arg = parse_sum();
            expect(Tok::RParen, "')'");
            return fn(arg);
        }
        default:
            fail(t, "a number, '(' or identifier");
        }
    }

    std::vector<Token> tokens_;
    std::string varname_;
    size_t pos_ = 0;
};

} // namespace

Expr parse(const std::string& text, const std::string& varname) {
    return Parser(tokenize(text), varname).run();
}

} // namespace pgc
