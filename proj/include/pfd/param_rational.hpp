#pragma once

/**
 * @file param_rational.hpp
 * @brief The one-parameter rational function field Q(t).
 *
 * A ParamRational is num(t)/den(t) with gcd(num, den) = 1 and den monic;
 * zero is 0/1. This makes representatives unique, so Poly<ParamRational>
 * gets structural equality just like Poly<Rational>.
 */

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "pfd/poly.hpp"
#include "pfd/rational.hpp"

namespace pfd {

class ParamRational {
public:
    using Numer = Poly<Rational>;

    ParamRational() : den_{Rational(1)} {}
    ParamRational(long n) : num_{Rational(n)}, den_{Rational(1)} {}  // NOLINT
    ParamRational(const Rational& c) : num_{c}, den_{Rational(1)} {}  // NOLINT
    ParamRational(Numer num, Numer den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// The parameter t itself.
    static ParamRational parameter() { return ParamRational(Numer::x(), Numer{Rational(1)}); }

    const Numer& num() const { return num_; }
    const Numer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    ParamRational operator-() const {
        ParamRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    // Henrici-style: gcds of the smaller cross pieces keep results reduced
    // without a gcd of the full products.
    friend ParamRational operator+(const ParamRational& a, const ParamRational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return ParamRational(a.num_ + b.num_, a.den_);
        if (a.den_.is_one()) return reduced(a.num_ * b.den_ + b.num_, b.den_);
        if (b.den_.is_one()) return reduced(a.num_ + b.num_ * a.den_, a.den_);
        Numer g = gcd(a.den_, b.den_);
        if (g.is_one()) return reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        Numer ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
        return ParamRational(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend ParamRational operator-(const ParamRational& a, const ParamRational& b) { return a + (-b); }
    friend ParamRational operator*(const ParamRational& a, const ParamRational& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) return reduced(a.num_ * b.num_, a.den_);
        Numer an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
        cancel(an, bd);
        cancel(bn, ad);
        return reduced(an * bn, ad * bd);
    }
    friend ParamRational operator/(const ParamRational& a, const ParamRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return a * inverse_of(b);
    }

    friend bool operator==(const ParamRational& a, const ParamRational& b) = default;

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("division by zero");
        if (num_.is_zero()) {
            den_ = Numer{Rational(1)};
            return;
        }
        if (!den_.is_constant()) {
            Numer g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        if (!den_.is_monic()) {
            Rational inv = inverse(den_.lead());
            num_ *= inv;
            den_ *= inv;
        }
    }

    static void cancel(Numer& n, Numer& d) {
        if (n.is_constant() || d.is_constant()) return;
        Numer g = gcd(n, d);
        if (g.is_one()) return;
        n = exact_div(n, g);
        d = exact_div(d, g);
    }

    /// num/den already coprime; only the leading coefficient is fixed up.
    static ParamRational reduced(Numer num, Numer den) {
        ParamRational r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        if (r.num_.is_zero()) {
            r.den_ = Numer{Rational(1)};
        } else if (!r.den_.is_monic()) {
            Rational inv = inverse(r.den_.lead());
            r.num_ *= inv;
            r.den_ *= inv;
        }
        return r;
    }

    static ParamRational inverse_of(const ParamRational& a) { return reduced(a.den_, a.num_); }

    friend ParamRational inverse(const ParamRational& a);

    Numer num_;
    Numer den_;
};

inline ParamRational inverse(const ParamRational& a) {
    if (a.is_zero()) throw std::domain_error("division by zero");
    return ParamRational::inverse_of(a);
}

/// "(num)/(den)" with both parts in ascending powers of the parameter.
inline std::string to_string(const ParamRational& a, std::string_view param = "t") {
    return "(" + to_string(a.num(), param) + ")/(" + to_string(a.den(), param) + ")";
}

inline std::strong_ordering canonical_compare(const ParamRational& a, const ParamRational& b) {
    if (auto c = poly_compare(a.num(), b.num()); c != 0) return c;
    return poly_compare(a.den(), b.den());
}

inline bool is_negative(const ParamRational&) { return false; }

template <>
struct field_traits<ParamRational> {
    static constexpr bool has_parameter = true;
    static constexpr bool needs_parens = true;
};

static_assert(Field<ParamRational>);

}  // namespace pfd
