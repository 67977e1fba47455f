#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision fractions backed by GMP.
 *
 * Every Rational is kept canonical: positive denominator, coprime
 * numerator and denominator, zero stored as 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "pfd/field.hpp"

namespace pfd {

class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const mpz_class& n) : value_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("division by zero");
        value_ = mpq_class(n, d);
        value_.canonicalize();
    }
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p" or "p/q" with optional leading sign; rejects decimals.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto parse_int = [](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("empty integer literal");
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) throw std::invalid_argument("empty integer literal");
            for (std::size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9')
                    throw std::invalid_argument("invalid integer literal '" + std::string(s) + "'");
            std::string digits(s[0] == '+' ? s.substr(1) : s);
            return mpz_class(digits, 10);
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

inline Rational rat_make(const mpz_class& n, const mpz_class& d) { return Rational(n, d); }

inline Rational inverse(const Rational& a) {
    if (a.is_zero()) throw std::domain_error("division by zero");
    return Rational(a.den(), a.num());
}

/// "p/q", with "/q" omitted for integers.
inline std::string to_string(const Rational& a, std::string_view = {}) {
    std::string s = a.num().get_str();
    if (!a.is_integer()) s += "/" + a.den().get_str();
    return s;
}

inline std::strong_ordering canonical_compare(const Rational& a, const Rational& b) { return a <=> b; }
inline bool is_negative(const Rational& a) { return a.sign() < 0; }

static_assert(Field<Rational>);

}  // namespace pfd
