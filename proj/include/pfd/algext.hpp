#pragma once

/**
 * @file algext.hpp
 * @brief Arithmetic in F[x]/(P) and truncated power series over it.
 *
 * For a monic squarefree P of degree n, F[alpha] = F[x]/(P) is stored in
 * the power basis 1, alpha, ..., alpha^(n-1). When P is irreducible this is
 * the field F(alpha); in general it is a product of fields and inversion
 * can meet a zero divisor, which is reported with the offending gcd so the
 * caller can split P.
 */

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pfd/poly.hpp"

namespace pfd {

/// Thrown when an element of F[x]/(P) shares a factor with P.
template <Field F>
class ZeroDivisorError : public std::domain_error {
public:
    explicit ZeroDivisorError(Poly<F> factor)
        : std::domain_error("non-invertible element: modulus has a nontrivial factor"),
          factor_(std::move(factor)) {}
    const Poly<F>& factor() const { return factor_; }

private:
    Poly<F> factor_;
};

/**
 * The quotient ring itself. Holds the modulus and the reduction table
 * alpha^n, ..., alpha^(2n-2) in the power basis. Built once, shared
 * read-only by every element.
 */
template <Field F>
class ExtensionRing {
public:
    explicit ExtensionRing(Poly<F> modulus) : modulus_(std::move(modulus)) {
        if (modulus_.degree() < 1) throw std::invalid_argument("extension modulus must be nonconstant");
        if (!modulus_.is_monic()) throw std::invalid_argument("extension modulus must be monic");
        const auto n = dim();
        // alpha^n = -(a_0 + ... + a_{n-1} alpha^{n-1}); further rows by shifting.
        std::vector<F> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = -modulus_.coeffs()[i];
        table_.push_back(row);
        for (std::size_t k = 1; k + 1 < n; ++k) table_.push_back(times_alpha(table_.back()));
    }

    std::size_t dim() const { return static_cast<std::size_t>(modulus_.degree()); }
    const Poly<F>& modulus() const { return modulus_; }

    /// Reduction of alpha^(n+k), k = 0..n-2.
    const std::vector<F>& table_row(std::size_t k) const { return table_.at(k); }

    /// coords * alpha, reduced.
    std::vector<F> times_alpha(const std::vector<F>& coords) const {
        const auto n = dim();
        std::vector<F> out(n, F(0));
        const F& top = coords[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) out[i] = coords[i - 1];
        if (!top.is_zero())
            for (std::size_t i = 0; i < n; ++i) out[i] = out[i] - top * modulus_.coeffs()[i];
        return out;
    }

    /// Reduces a full product vector of length up to 2n-1.
    std::vector<F> reduce_product(std::vector<F> wide) const {
        const auto n = dim();
        std::vector<F> out(n, F(0));
        for (std::size_t i = 0; i < n && i < wide.size(); ++i) out[i] = std::move(wide[i]);
        for (std::size_t k = n; k < wide.size(); ++k) {
            if (wide[k].is_zero()) continue;
            const auto& row = table_[k - n];
            for (std::size_t i = 0; i < n; ++i)
                if (!row[i].is_zero()) out[i] = out[i] + wide[k] * row[i];
        }
        return out;
    }

private:
    Poly<F> modulus_;
    std::vector<std::vector<F>> table_;
};

template <Field F>
using RingPtr = std::shared_ptr<const ExtensionRing<F>>;

template <Field F>
RingPtr<F> make_ring(const Poly<F>& modulus) {
    return std::make_shared<const ExtensionRing<F>>(modulus);
}

template <Field F>
class AlgebraicElement {
public:
    AlgebraicElement() = default;
    AlgebraicElement(RingPtr<F> ring, std::vector<F> coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
        if (coords_.size() != ring_->dim()) throw std::invalid_argument("coordinate count does not match modulus degree");
    }

    static AlgebraicElement constant(RingPtr<F> ring, const F& c) {
        std::vector<F> v(ring->dim(), F(0));
        v[0] = c;
        return {std::move(ring), std::move(v)};
    }
    static AlgebraicElement zero(RingPtr<F> ring) { return constant(std::move(ring), F(0)); }
    static AlgebraicElement one(RingPtr<F> ring) { return constant(std::move(ring), F(1)); }
    static AlgebraicElement alpha(RingPtr<F> ring) {
        std::vector<F> v(ring->dim(), F(0));
        if (v.size() > 1)
            v[1] = F(1);
        else
            v[0] = -ring->modulus().coeffs()[0];
        return {std::move(ring), std::move(v)};
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<F>& coords() const { return coords_; }
    const F& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// The unique representative polynomial of degree < n.
    Poly<F> lift() const { return Poly<F>(coords_); }

    AlgebraicElement times_alpha() const { return {ring_, ring_->times_alpha(coords_)}; }

    AlgebraicElement operator-() const {
        AlgebraicElement r = *this;
        for (auto& c : r.coords_) c = -c;
        return r;
    }
    AlgebraicElement& operator+=(const AlgebraicElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = coords_[i] + o.coords_[i];
        return *this;
    }
    AlgebraicElement& operator-=(const AlgebraicElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = coords_[i] - o.coords_[i];
        return *this;
    }
    friend AlgebraicElement operator+(AlgebraicElement a, const AlgebraicElement& b) { return a += b; }
    friend AlgebraicElement operator-(AlgebraicElement a, const AlgebraicElement& b) { return a -= b; }
    friend AlgebraicElement operator*(AlgebraicElement a, const F& s) {
        for (auto& c : a.coords_) c = c * s;
        return a;
    }
    friend AlgebraicElement operator*(const F& s, AlgebraicElement a) { return std::move(a) * s; }
    friend AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b) { return alg_mul(a, b); }

    friend bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) {
        return same_ring(a, b) && a.coords_ == b.coords_;
    }

    friend bool same_ring(const AlgebraicElement& a, const AlgebraicElement& b) {
        return a.ring_ == b.ring_ || (a.ring_ && b.ring_ && a.ring_->modulus() == b.ring_->modulus());
    }

    friend AlgebraicElement alg_mul(const AlgebraicElement& a, const AlgebraicElement& b) {
        a.check_same(b);
        const auto n = a.coords_.size();
        std::vector<F> wide(2 * n - 1, F(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coords_[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b.coords_[j].is_zero()) wide[i + j] = wide[i + j] + a.coords_[i] * b.coords_[j];
        }
        checkpoint();
        return {a.ring_, a.ring_->reduce_product(std::move(wide))};
    }

private:
    void check_same(const AlgebraicElement& o) const {
        if (!same_ring(*this, o)) throw std::invalid_argument("modulus mismatch");
    }

    RingPtr<F> ring_;
    std::vector<F> coords_;
};

/// n(alpha) in the power basis, via n mod P.
template <Field F>
AlgebraicElement<F> alg_reduce(const Poly<F>& n, const RingPtr<F>& ring) {
    Poly<F> r = n.degree() >= static_cast<long>(ring->dim()) ? divrem(n, ring->modulus()).remainder : n;
    std::vector<F> coords(ring->dim(), F(0));
    for (std::size_t i = 0; i < r.size(); ++i) coords[i] = r.coeffs()[i];
    return {ring, std::move(coords)};
}

template <Field F>
AlgebraicElement<F> alg_reduce(const Poly<F>& n, const Poly<F>& modulus) {
    return alg_reduce(n, make_ring(modulus));
}

/**
 * Inverse by extended Euclid on (lift(a), P). Throws ZeroDivisorError
 * carrying gcd(lift(a), P) when that gcd is nontrivial.
 */
template <Field F>
AlgebraicElement<F> alg_inverse(const AlgebraicElement<F>& a) {
    const auto& P = a.ring()->modulus();
    Poly<F> lifted = a.lift();
    if (lifted.is_zero()) throw ZeroDivisorError<F>(P);
    auto eg = ext_gcd(lifted, P);
    if (!eg.gcd.is_one()) throw ZeroDivisorError<F>(eg.gcd);
    return alg_reduce(eg.a1, a.ring());
}

template <Field F>
AlgebraicElement<F> inverse(const AlgebraicElement<F>& a) {
    return alg_inverse(a);
}

template <Field F>
std::string to_string(const AlgebraicElement<F>& a, std::string_view param = "t") {
    return to_string(a.lift(), "α", param);
}

// ---------------------------------------------------------------------------
// Truncated power series in a local variable s = x - alpha.
//
// The helpers are generic over the coefficient ring: they run over F itself
// for the linear fast path and over AlgebraicElement<F> for general bases.

template <typename T>
struct AlgSeries {
    std::vector<T> coeffs;

    std::size_t order() const { return coeffs.size(); }
    const T& operator[](std::size_t k) const { return coeffs[k]; }

    friend bool operator==(const AlgSeries&, const AlgSeries&) = default;
};

namespace detail {

template <Field F>
F zero_like(const F&) {
    return F(0);
}
template <Field F>
AlgebraicElement<F> zero_like(const AlgebraicElement<F>& a) {
    return AlgebraicElement<F>::zero(a.ring());
}

template <Field F>
F one_like(const F&) {
    return F(1);
}
template <Field F>
AlgebraicElement<F> one_like(const AlgebraicElement<F>& a) {
    return AlgebraicElement<F>::one(a.ring());
}

}  // namespace detail

/// Cauchy product truncated at the common order.
template <typename T>
AlgSeries<T> series_mul(const AlgSeries<T>& a, const AlgSeries<T>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series truncation order mismatch");
    const auto n = a.order();
    if (n == 0) return {};
    std::vector<T> out(n, detail::zero_like(a[0]));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!b[j].is_zero()) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return {std::move(out)};
}

/// a * result = 1 + O(s^order). Needs an invertible constant term.
template <typename T>
AlgSeries<T> series_inverse(const AlgSeries<T>& a) {
    const auto n = a.order();
    if (n == 0) return {};
    using pfd::inverse;
    T inv0 = inverse(a[0]);
    std::vector<T> out;
    out.reserve(n);
    out.push_back(inv0);
    for (std::size_t k = 1; k < n; ++k) {
        T acc = detail::zero_like(a[0]);
        for (std::size_t i = 1; i <= k; ++i)
            if (!a[i].is_zero()) acc = acc + a[i] * out[k - i];
        out.push_back(-(acc * inv0));
    }
    return {std::move(out)};
}

template <typename T>
AlgSeries<T> series_pow(AlgSeries<T> base, unsigned long e) {
    AlgSeries<T> result{std::vector<T>(base.order(), detail::zero_like(base[0]))};
    if (base.order() == 0) return result;
    result.coeffs[0] = detail::one_like(base[0]);
    while (e > 0) {
        if (e & 1UL) result = series_mul(result, base);
        e >>= 1;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

/**
 * Taylor data of p at the formal root: [p(alpha), p'(alpha), p''(alpha)/2!, ...]
 * with `order` entries, i.e. the coefficients of p(alpha + s).
 *
 * Computed by Horner's rule in F[alpha][s]: each step multiplies the
 * running series by (alpha + s), which only needs the cheap alpha shift.
 */
template <Field F>
std::vector<AlgebraicElement<F>> taylor_at_alpha(const Poly<F>& p, const RingPtr<F>& ring, std::size_t order) {
    if (order == 0) throw std::invalid_argument("taylor order must be positive");
    const auto zero = AlgebraicElement<F>::zero(ring);
    std::vector<AlgebraicElement<F>> acc(order, zero);
    for (std::size_t k = p.size(); k-- > 0;) {
        for (std::size_t i = order; i-- > 0;) {
            AlgebraicElement<F> next = acc[i].times_alpha();
            if (i > 0) next += acc[i - 1];
            acc[i] = std::move(next);
        }
        if (!p.coeffs()[k].is_zero()) acc[0] += AlgebraicElement<F>::constant(ring, p.coeffs()[k]);
        checkpoint();
    }
    return acc;
}

template <Field F>
std::vector<AlgebraicElement<F>> taylor_at_alpha(const Poly<F>& p, const Poly<F>& modulus, std::size_t order) {
    return taylor_at_alpha(p, make_ring(modulus), order);
}

/// Scalar Taylor coefficients of p at x = a (the degree-one specialization).
template <Field F>
std::vector<F> taylor_at_point(const Poly<F>& p, const F& a, std::size_t order) {
    if (order == 0) throw std::invalid_argument("taylor order must be positive");
    std::vector<F> acc(order, F(0));
    for (std::size_t k = p.size(); k-- > 0;) {
        for (std::size_t i = order; i-- > 0;) {
            F next = acc[i] * a;
            if (i > 0) next = next + acc[i - 1];
            acc[i] = std::move(next);
        }
        acc[0] = acc[0] + p.coeffs()[k];
    }
    return acc;
}

}  // namespace pfd
