#pragma once

#include <memory>
#include <string>

namespace pgc {

namespace detail {
struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;
} // namespace detail

/// An immutable single-variable expression tree: real literals, the named
/// variable, + - * /, ^ with a constant exponent, unary negation, and the
/// functions sin, cos, sinh, cosh, tanh, exp, ln, sqrt, abs. Values are
/// freely shareable; evaluation is reentrant.
class Expr {
public:
    Expr(); // the literal 0

    static Expr number(double value);
    static Expr variable(std::string name = "s");

    /// IEEE-double evaluation at the given variable value. Throws
    /// DomainError when a subexpression leaves its domain.
    double evaluate(double value) const;

    /// Exact symbolic derivative, closed under the same grammar.
    Expr derivative() const;

    /// Replaces every occurrence of the variable by `replacement`.
    Expr substitute(const Expr& replacement) const;

    bool is_constant() const;

    std::string to_string() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr pow(const Expr& base, double exponent);
    friend Expr sin(const Expr& a);
    friend Expr cos(const Expr& a);
    friend Expr sinh(const Expr& a);
    friend Expr cosh(const Expr& a);
    friend Expr tanh(const Expr& a);
    friend Expr exp(const Expr& a);
    friend Expr log(const Expr& a);
    friend Expr sqrt(const Expr& a);
    friend Expr abs(const Expr& a);

private:
    explicit Expr(detail::NodePtr node) : node_(std::move(node)) {}
    detail::NodePtr node_;
};

/// Parses a conventional infix expression in the variable `varname`.
/// Precedence ^ (right-assoc) > unary minus > * / > + -, parentheses,
/// no implicit multiplication. Throws ParseError with a 1-based column.
Expr parse(const std::string& text, const std::string& varname);

} // namespace pgc
