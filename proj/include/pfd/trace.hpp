#pragma once

/**
 * @file trace.hpp
 * @brief Summing a pole part over all roots of a base polynomial.
 *
 * Given b in F[alpha] and a power j, the sum over the roots alpha_i of P of
 * b(alpha_i)/(x - alpha_i)^j is a rational function in F(x) with
 * denominator P^j. It is assembled from the trace functions
 *
 *     u_k(x) = sum_i alpha_i^k / (x - alpha_i) = row_k(x) / P(x),
 *
 * whose numerators row_k (deg < n) come from Newton power sums, followed by
 * j - 1 derivative lifts of the form C/P^r -> (C' P - r C P') / P^(r+1).
 */

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfd/algext.hpp"
#include "pfd/poly.hpp"

namespace pfd {

template <Field F>
struct PowerSums {
    std::vector<F> values;  // values[j] = sum_i alpha_i^j
    Poly<F> modulus;
};

/**
 * S_0 .. S_{count-1} from Newton's identities. For monic
 * P = x^n + a_{n-1} x^{n-1} + ... + a_0 and 1 <= j <= n:
 *     S_j = -(j a_{n-j} + sum_{i=1}^{j-1} a_{n-i} S_{j-i}).
 */
template <Field F>
PowerSums<F> newton_power_sums(const Poly<F>& p, std::size_t count) {
    if (!p.is_monic()) throw std::invalid_argument("newton_power_sums requires a monic polynomial");
    const auto n = static_cast<std::size_t>(p.degree());
    if (count > n) throw std::invalid_argument("power sum count exceeds degree");
    const auto& a = p.coeffs();
    PowerSums<F> out{{}, p};
    if (count == 0) return out;
    out.values.push_back(F(static_cast<long>(n)));
    for (std::size_t j = 1; j < count; ++j) {
        F s = F(static_cast<long>(j)) * a[n - j];
        for (std::size_t i = 1; i < j; ++i) s = s + a[n - i] * out.values[j - i];
        out.values.push_back(-s);
    }
    return out;
}

template <Field F>
struct TraceNumerators {
    std::vector<Poly<F>> rows;  // u_k = rows[k] / P, k = 0..n-1
    Poly<F> modulus;
};

/**
 * row_k = x^k P' - P * sum_{l=1}^{k} S_{k-l} x^(l-1), which lands in degree
 * at most n-1. Row 0 is P'.
 */
template <Field F>
TraceNumerators<F> trace_numerators(const Poly<F>& p) {
    const auto n = static_cast<std::size_t>(p.degree());
    auto sums = newton_power_sums(p, n);
    const Poly<F> dp = derivative(p);
    TraceNumerators<F> out{{}, p};
    out.rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<F> geo(k, F(0));
        for (std::size_t l = 1; l <= k; ++l) geo[l - 1] = sums.values[k - l];
        Poly<F> row = dp.shifted(k) - p * Poly<F>(std::move(geo));
        if (row.degree() >= static_cast<long>(n)) throw std::logic_error("trace numerator degree overflow");
        out.rows.push_back(std::move(row));
    }
    return out;
}

template <Field F>
struct Term {
    Poly<F> numerator;
    unsigned power = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

/// sum_l terms[l].numerator / base^terms[l].power, powers increasing.
template <Field F>
struct RationalPart {
    Poly<F> base;
    std::vector<Term<F>> terms;

    friend bool operator==(const RationalPart&, const RationalPart&) = default;

    bool empty() const { return terms.empty(); }

    RationalPart& operator+=(const RationalPart& o) {
        std::map<unsigned, Poly<F>> acc;
        for (const auto& t : terms) acc[t.power] += t.numerator;
        for (const auto& t : o.terms) acc[t.power] += t.numerator;
        terms.clear();
        for (auto& [power, num] : acc)
            if (!num.is_zero()) terms.push_back({std::move(num), power});
        return *this;
    }
};

template <Field F>
struct NormalizedPower {
    RationalPart<F> part;
    Poly<F> overflow;  // polynomial left over after the power-1 step
};

/**
 * Rewrites a / base^m as sum_{l=1}^{m} N_l / base^l + overflow with
 * deg N_l < deg base, by the divrem cascade a = q base + r.
 */
template <Field F>
NormalizedPower<F> normalize_over_power(const Poly<F>& a, const Poly<F>& base, unsigned m) {
    if (base.degree() < 1) throw std::invalid_argument("normalize_over_power needs a nonconstant base");
    if (m == 0) throw std::invalid_argument("normalize_over_power needs m >= 1");
    NormalizedPower<F> out;
    out.part.base = base;
    Poly<F> cur = a;
    std::vector<Term<F>> rev;
    for (unsigned power = m; power >= 1 && !cur.is_zero(); --power) {
        auto [q, r] = divrem(cur, base);
        if (!r.is_zero()) rev.push_back({std::move(r), power});
        cur = std::move(q);
    }
    out.overflow = std::move(cur);
    out.part.terms.assign(rev.rbegin(), rev.rend());
    return out;
}

/// Per-base precomputation shared read-only by every pole_sum call.
template <Field F>
struct TraceTable {
    RingPtr<F> ring;
    TraceNumerators<F> numerators;
    Poly<F> derivative;

    explicit TraceTable(RingPtr<F> r)
        : ring(std::move(r)), numerators(trace_numerators(ring->modulus())), derivative(pfd::derivative(ring->modulus())) {}
};

/**
 * sum_i b(alpha_i) / (x - alpha_i)^j over all roots of the base, returned
 * in canonical form over powers 1..j of the base.
 */
template <Field F>
RationalPart<F> pole_sum(const AlgebraicElement<F>& b, unsigned j, const TraceTable<F>& table) {
    if (j == 0) throw std::invalid_argument("pole_sum needs j >= 1");
    const Poly<F>& P = table.ring->modulus();
    RationalPart<F> out{P, {}};
    if (b.is_zero()) return out;

    // B/P = sum_k b_k u_k
    Poly<F> c;
    for (std::size_t k = 0; k < b.coords().size(); ++k)
        if (!b[k].is_zero()) c += table.numerators.rows[k] * b[k];

    // (-1)^(j-1)/(j-1)! d^(j-1)/dx^(j-1) (C/P)
    F scale(1);
    for (unsigned r = 1; r < j; ++r) {
        c = derivative(c) * P - c * table.derivative * F(static_cast<long>(r));
        scale = scale * F(-1) / F(static_cast<long>(r));
        checkpoint();
    }
    auto norm = normalize_over_power(c * scale, P, j);
    if (!norm.overflow.is_zero()) throw std::logic_error("pole_sum produced a polynomial part");
    return norm.part;
}

template <Field F>
RationalPart<F> pole_sum(const AlgebraicElement<F>& b, unsigned j) {
    TraceTable<F> table(b.ring());
    return pole_sum(b, j, table);
}

}  // namespace pfd
