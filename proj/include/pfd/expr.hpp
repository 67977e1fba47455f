#pragma once

/**
 * @file expr.hpp
 * @brief Parsing rational-function expressions into RationalFunction values.
 *
 * Grammar (precedence high to low; ^ is right-associative, the rest left):
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary (('*' | '/') unary)*
 *     unary   := ('-' | '+') unary | power
 *     power   := primary ('^' exponent)?
 *     exponent:= ('-' | '+') exponent | primary ('^' exponent)?
 *     primary := integer | identifier | '(' expr ')'
 *
 * Exponents must fold to integer constants. "p/q" of two integer literals
 * becomes a rational literal; decimals are rejected. Identifiers other than
 * the decomposition variable and the declared parameters are errors.
 *
 * Evaluation keeps products and powers factored, so a denominator written
 * as (x^2+x+1)^2*(x^2-x+1)^2 arrives as exactly those two bases.
 */

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfd/decompose.hpp"
#include "pfd/factor_basis.hpp"
#include "pfd/param_rational.hpp"
#include "pfd/poly.hpp"
#include "pfd/rational.hpp"

namespace pfd {

/// Syntax or symbol error at a 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct Expr {
    enum class Kind { integer, rational, variable, parameter, add, sub, mul, div, neg, pow };

    Kind kind = Kind::integer;
    Rational value;          // integer / rational literals
    std::string name;        // variable / parameter
    long exponent = 0;       // pow
    std::vector<Expr> children;
    std::size_t position = 0;
};

inline constexpr long max_exponent = 1'000'000;

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, std::string_view var, const std::set<std::string>& params)
        : text_(text), var_(var), params_(params) {}

    Expr parse() {
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static Expr binary(Expr::Kind k, Expr a, Expr b, std::size_t pos) {
        Expr e;
        e.kind = k;
        e.position = pos;
        e.children.push_back(std::move(a));
        e.children.push_back(std::move(b));
        return e;
    }

    Expr parse_sum() {
        Expr lhs = parse_product();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            std::size_t at = pos_++;
            Expr rhs = parse_product();
            lhs = binary(c == '+' ? Expr::Kind::add : Expr::Kind::sub, std::move(lhs), std::move(rhs), at);
        }
    }

    Expr parse_product() {
        Expr lhs = parse_unary();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') return lhs;
            std::size_t at = pos_++;
            Expr rhs = parse_unary();
            if (c == '/' && lhs.kind == Expr::Kind::integer && rhs.kind == Expr::Kind::integer) {
                if (rhs.value.is_zero()) throw ParseError("division by zero", at);
                lhs.kind = Expr::Kind::rational;
                lhs.value = lhs.value / rhs.value;
                continue;
            }
            lhs = binary(c == '*' ? Expr::Kind::mul : Expr::Kind::div, std::move(lhs), std::move(rhs), at);
        }
    }

    Expr parse_unary() {
        char c = peek();
        if (c == '-' || c == '+') {
            std::size_t at = pos_++;
            Expr inner = parse_unary();
            if (c == '+') return inner;
            if (inner.kind == Expr::Kind::integer) {
                inner.value = -inner.value;
                inner.position = at;
                return inner;
            }
            Expr e;
            e.kind = Expr::Kind::neg;
            e.position = at;
            e.children.push_back(std::move(inner));
            return e;
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (!accept('^')) return base;
        std::size_t at = pos_;
        Expr e;
        e.kind = Expr::Kind::pow;
        e.position = at;
        e.exponent = parse_exponent();
        e.children.push_back(std::move(base));
        return e;
    }

    long parse_exponent() {
        char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            long v = parse_exponent();
            return c == '-' ? -v : v;
        }
        std::size_t at = pos_;
        Expr base = parse_primary();
        mpz_class v = fold_integer(base, at);
        if (accept('^')) {
            long e = parse_exponent();
            if (e < 0) throw ParseError("exponent must be an integer constant", at);
            if (abs(v) > 1 && e > 64) throw ParseError("exponent overflow", at);
            mpz_class r;
            mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
            v = r;
        }
        if (abs(v) > max_exponent) throw ParseError("exponent overflow", at);
        return v.get_si();
    }

    /// Integer value of a constant exponent subexpression.
    mpz_class fold_integer(const Expr& e, std::size_t at) {
        using K = Expr::Kind;
        switch (e.kind) {
            case K::integer: return e.value.num();
            case K::neg: return -fold_integer(e.children[0], at);
            case K::add: return fold_integer(e.children[0], at) + fold_integer(e.children[1], at);
            case K::sub: return fold_integer(e.children[0], at) - fold_integer(e.children[1], at);
            case K::mul: return fold_integer(e.children[0], at) * fold_integer(e.children[1], at);
            case K::pow: {
                if (e.exponent < 0) break;
                mpz_class b = fold_integer(e.children[0], at);
                if (abs(b) > 1 && e.exponent > 64) throw ParseError("exponent overflow", at);
                mpz_class r;
                mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e.exponent));
                return r;
            }
            default: break;
        }
        throw ParseError("exponent must be an integer constant", at);
    }

    Expr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '.')
                throw ParseError("decimal literals are not supported", pos_);
            Expr e;
            e.kind = Expr::Kind::integer;
            e.position = start;
            e.value = Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            Expr e;
            e.position = start;
            e.name = name;
            if (name == var_)
                e.kind = Expr::Kind::variable;
            else if (params_.count(name))
                e.kind = Expr::Kind::parameter;
            else
                throw ParseError("unknown symbol '" + name + "'", start);
            return e;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::string_view var_;
    const std::set<std::string>& params_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view input, std::string_view var, const std::set<std::string>& params = {}) {
    if (params.size() > 1) throw std::invalid_argument("at most one parameter is supported");
    if (params.count(std::string(var))) throw std::invalid_argument("parameter must differ from the variable");
    return detail::ExprParser(input, var, params).parse();
}

// ---------------------------------------------------------------------------
// Evaluation

/// unit * prod num / prod den, with bases monic and nonconstant.
template <Field F>
struct FactoredValue {
    F unit = F(1);
    std::vector<Factor<F>> num;
    std::vector<Factor<F>> den;

    bool is_zero() const { return unit.is_zero(); }
};

namespace detail {

template <Field F>
void add_factor(std::vector<Factor<F>>& list, const Poly<F>& base, unsigned mult) {
    for (auto& f : list)
        if (f.base == base) {
            f.multiplicity += mult;
            return;
        }
    list.push_back({base, mult});
}

template <Field F>
Poly<F> expand(const std::vector<Factor<F>>& list) {
    Poly<F> out{F(1)};
    for (const auto& f : list) out *= pow(f.base, f.multiplicity);
    return out;
}

template <Field F>
FactoredValue<F> from_poly(const Poly<F>& p) {
    FactoredValue<F> v;
    if (p.is_zero()) {
        v.unit = F(0);
        return v;
    }
    v.unit = p.lead();
    if (p.degree() >= 1) v.num.push_back({monic(p), 1});
    return v;
}

/// Cancels bases that appear verbatim on both sides.
template <Field F>
void cancel_identical(FactoredValue<F>& v) {
    for (auto& n : v.num)
        for (auto& d : v.den)
            if (n.base == d.base) {
                unsigned c = std::min(n.multiplicity, d.multiplicity);
                n.multiplicity -= c;
                d.multiplicity -= c;
            }
    std::erase_if(v.num, [](const Factor<F>& f) { return f.multiplicity == 0; });
    std::erase_if(v.den, [](const Factor<F>& f) { return f.multiplicity == 0; });
}

template <Field F>
FactoredValue<F> multiply(FactoredValue<F> a, const FactoredValue<F>& b) {
    if (a.is_zero() || b.is_zero()) return from_poly(Poly<F>{});
    a.unit = a.unit * b.unit;
    for (const auto& f : b.num) add_factor(a.num, f.base, f.multiplicity);
    for (const auto& f : b.den) add_factor(a.den, f.base, f.multiplicity);
    cancel_identical(a);
    return a;
}

template <Field F>
FactoredValue<F> reciprocal(const FactoredValue<F>& a, std::size_t position) {
    if (a.is_zero()) throw ParseError("division by zero", position);
    return {inverse(a.unit), a.den, a.num};
}

template <Field F>
FactoredValue<F> add(const FactoredValue<F>& a, const FactoredValue<F>& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? FactoredValue<F>{-b.unit, b.num, b.den} : b;
    // Common denominator: each distinct base at its larger multiplicity.
    std::vector<Factor<F>> common = a.den;
    for (const auto& f : b.den) {
        bool found = false;
        for (auto& c : common)
            if (c.base == f.base) {
                c.multiplicity = std::max(c.multiplicity, f.multiplicity);
                found = true;
            }
        if (!found) common.push_back(f);
    }
    auto cofactor = [&](const std::vector<Factor<F>>& den) {
        Poly<F> out{F(1)};
        for (const auto& c : common) {
            unsigned have = 0;
            for (const auto& f : den)
                if (f.base == c.base) have = f.multiplicity;
            out *= pow(c.base, c.multiplicity - have);
        }
        return out;
    };
    Poly<F> na = expand(a.num) * cofactor(a.den) * a.unit;
    Poly<F> nb = expand(b.num) * cofactor(b.den) * b.unit;
    FactoredValue<F> out = from_poly(subtract ? na - nb : na + nb);
    if (out.is_zero()) return out;
    out.den = std::move(common);
    cancel_identical(out);
    return out;
}

template <Field F>
FactoredValue<F> power(const FactoredValue<F>& a, long e, std::size_t position) {
    if (e == 0) return {};
    if (e < 0) return power(reciprocal(a, position), -e, position);
    if (a.is_zero()) return a;
    FactoredValue<F> out = a;
    F u(1);
    for (long k = 0; k < e; ++k) u = u * a.unit;
    out.unit = u;
    for (auto* list : {&out.num, &out.den})
        for (auto& f : *list) {
            if (static_cast<long>(f.multiplicity) * e > max_exponent) throw ParseError("exponent overflow", position);
            f.multiplicity *= static_cast<unsigned>(e);
        }
    return out;
}

template <Field F>
F literal_value(const Rational& r) {
    return F(r);
}

}  // namespace detail

template <Field F>
FactoredValue<F> evaluate(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::integer:
        case K::rational: return detail::from_poly(Poly<F>(detail::literal_value<F>(e.value)));
        case K::variable: return detail::from_poly(Poly<F>::x());
        case K::parameter:
            if constexpr (field_traits<F>::has_parameter)
                return detail::from_poly(Poly<F>(F::parameter()));
            else
                throw ParseError("parameter '" + e.name + "' needs a parameterized coefficient field", e.position);
        case K::neg: {
            auto v = evaluate<F>(e.children[0]);
            v.unit = -v.unit;
            return v;
        }
        case K::add: return detail::add(evaluate<F>(e.children[0]), evaluate<F>(e.children[1]), false);
        case K::sub: return detail::add(evaluate<F>(e.children[0]), evaluate<F>(e.children[1]), true);
        case K::mul: return detail::multiply(evaluate<F>(e.children[0]), evaluate<F>(e.children[1]));
        case K::div:
            return detail::multiply(evaluate<F>(e.children[0]),
                                    detail::reciprocal(evaluate<F>(e.children[1]), e.position));
        case K::pow: return detail::power(evaluate<F>(e.children[0]), e.exponent, e.position);
    }
    throw std::logic_error("unknown expression node");
}

/// The denominator bases exactly as written, before any refinement.
template <Field F>
std::vector<Factor<F>> written_denominator(const Expr& e) {
    return evaluate<F>(e).den;
}

/**
 * Expands the numerator, keeps the written denominator factors, then
 * squarefree-decomposes, coprime-refines and cancels.
 */
template <Field F>
RationalFunction<F> to_rational_function(const Expr& e) {
    auto v = evaluate<F>(e);
    if (v.is_zero()) return {};
    Poly<F> num = detail::expand(v.num) * v.unit;
    return make_rational_function(std::move(num), v.den);
}

template <Field F>
RationalFunction<F> parse_rational_function(std::string_view text, std::string_view var,
                                            const std::set<std::string>& params = {}) {
    return to_rational_function<F>(parse_expr(text, var, params));
}

}  // namespace pfd
