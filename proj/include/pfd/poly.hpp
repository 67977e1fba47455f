#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over an exact coefficient field.
 *
 * Coefficients are stored in ascending degree with no trailing zeros, so
 * the zero polynomial is the empty vector and structural equality is
 * mathematical equality. degree() of the zero polynomial is zero_degree
 * (-1), standing in for -infinity.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "pfd/field.hpp"
#include "pfd/interrupt.hpp"
#include "pfd/rational.hpp"

namespace pfd {

template <Field F>
class Poly {
public:
    using value_type = F;
    static constexpr long zero_degree = -1;

    Poly() = default;
    Poly(F constant) {  // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly x() { return monomial(F(1), 1); }
    static Poly monomial(F c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<F> v(k + 1, F(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == F(1); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == F(1); }

    const F& lead() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
    const std::vector<F>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const F& s) {
        if (s.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c = c * s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
            checkpoint();
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// x * p, cheaper than a general product.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<F> v(k, F(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

template <Field F>
struct DivRem {
    Poly<F> quotient;
    Poly<F> remainder;
};

/// n = q*d + r with deg r < deg d.
template <Field F>
DivRem<F> divrem(const Poly<F>& n, const Poly<F>& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    const long dd = d.degree();
    if (n.degree() < dd) return {Poly<F>{}, n};

    std::vector<F> r = n.coeffs();
    const auto& dc = d.coeffs();
    const long qdeg = n.degree() - dd;
    std::vector<F> q(static_cast<std::size_t>(qdeg + 1), F(0));
    const bool monic = d.is_monic();
    const F inv_lead = monic ? F(1) : inverse(d.lead());

    for (long k = qdeg; k >= 0; --k) {
        auto top = static_cast<std::size_t>(k + dd);
        if (r[top].is_zero()) continue;
        F c = monic ? r[top] : r[top] * inv_lead;
        for (long i = 0; i < dd; ++i) {
            if (dc[i].is_zero()) continue;
            auto idx = static_cast<std::size_t>(k + i);
            r[idx] = r[idx] - c * dc[i];
        }
        r[top] = F(0);
        q[static_cast<std::size_t>(k)] = std::move(c);
        checkpoint();
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <Field F>
Poly<F> operator%(const Poly<F>& n, const Poly<F>& d) {
    return divrem(n, d).remainder;
}

/// Exact quotient; throws if d does not divide n.
template <Field F>
Poly<F> exact_div(const Poly<F>& n, const Poly<F>& d) {
    auto [q, r] = divrem(n, d);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

template <Field F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero() || p.is_monic()) return p;
    return p * inverse(p.lead());
}

template <Field F>
struct ExtGcd {
    Poly<F> gcd;
    Poly<F> a1;
    Poly<F> a2;
};

/**
 * Extended Euclid: a1*p1 + a2*p2 = gcd(p1, p2), gcd monic.
 *
 * When the gcd is 1 the cofactors satisfy deg a1 < deg p2 and
 * deg a2 < deg p1 (for nonconstant inputs).
 */
template <Field F>
ExtGcd<F> ext_gcd(const Poly<F>& p1, const Poly<F>& p2) {
    if (p1.is_zero() && p2.is_zero()) throw std::domain_error("gcd of zero polynomials");
    Poly<F> r0 = p1, r1 = p2;
    Poly<F> s0{F(1)}, s1{};
    Poly<F> t0{}, t1{F(1)};
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    F inv = inverse(r0.lead());
    return {r0 * inv, s0 * inv, t0 * inv};
}

namespace detail {

// Integer polynomials for the primitive remainder sequence over Q.
using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& z) {
    while (!z.empty() && z.back() == 0) z.pop_back();
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(ZPoly& z) {
    mpz_class g = 0;
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
}

inline ZPoly primitive_integer(const Poly<Rational>& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z;
    z.reserve(p.size());
    for (const auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
    make_primitive(z);
    return z;
}

/// Primitive part of lc(b)^k * a mod b.
inline ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        const mpz_class la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
        trim(a);
        make_primitive(a);
        checkpoint();
    }
    return a;
}

/// gcd over Q via integer arithmetic, avoiding rational coefficient swell.
inline Poly<Rational> rational_gcd(const Poly<Rational>& p, const Poly<Rational>& q) {
    ZPoly a = primitive_integer(p), b = primitive_integer(q);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = primitive_prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const auto& c : a) out.emplace_back(c, a.back());
    return Poly<Rational>(std::move(out));
}

}  // namespace detail

/// Monic gcd by the Euclidean remainder sequence.
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of zero polynomials");
    if constexpr (std::is_same_v<F, Rational>) {
        if (a.degree() >= 1 && b.degree() >= 1) return detail::rational_gcd(a, b);
    }
    while (!b.is_zero()) {
        Poly<F> r = monic(a % b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <Field F>
Poly<F> derivative(const Poly<F>& p) {
    if (p.degree() < 1) return {};
    std::vector<F> v;
    v.reserve(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) v.push_back(p.coeffs()[k] * F(static_cast<long>(k)));
    return Poly<F>(std::move(v));
}

template <Field F>
F eval(const Poly<F>& p, const F& v) {
    F acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * v + *it;
    return acc;
}

template <Field F>
Poly<F> pow(Poly<F> base, unsigned long e) {
    Poly<F> result{F(1)};
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

/// Total order: degree first, then coefficients from the constant term up.
template <Field F>
std::strong_ordering poly_compare(const Poly<F>& a, const Poly<F>& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = canonical_compare(a.coeffs()[i], b.coeffs()[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

enum class TermOrder { ascending, descending };

/**
 * Text form such as "1 + x + x^2" (ascending, the canonical form) or
 * "x^2 + x + 1" (descending). Always re-parseable by the expression parser.
 */
template <Field F>
std::string to_string(const Poly<F>& p, std::string_view var = "x", std::string_view param = "t",
                      TermOrder order = TermOrder::ascending) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    auto emit = [&](std::size_t k) {
        const F& c = p.coeffs()[k];
        if (c.is_zero()) return;
        bool neg = is_negative(c);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        F mag = neg ? -c : c;
        std::string power;
        if (k == 1)
            power = std::string(var);
        else if (k > 1)
            power = std::string(var) + "^" + std::to_string(k);
        if (k > 0 && mag == F(1)) {
            out += power;
            return;
        }
        std::string cs = to_string(mag, param);
        if (field_traits<F>::needs_parens) cs = "(" + cs + ")";
        out += cs;
        if (k > 0) out += "*" + power;
    };
    if (order == TermOrder::ascending)
        for (std::size_t k = 0; k < p.size(); ++k) emit(k);
    else
        for (std::size_t k = p.size(); k-- > 0;) emit(k);
    return out;
}

}  // namespace pfd
