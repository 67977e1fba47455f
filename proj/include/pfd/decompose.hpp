#pragma once

/**
 * @file decompose.hpp
 * @brief Partial fraction decomposition over a coprime factor basis.
 *
 * f = N / (unit * prod P_i^m_i) is rewritten as
 *
 *     F(x) + sum_i sum_{j=1}^{m_i} N_ij(x) / P_i(x)^j,   deg N_ij < deg P_i.
 *
 * Four routes produce the same canonical result:
 *   - linear: Laurent expansion at each rational root (all bases degree 1)
 *   - galois: Laurent expansion at a formal root alpha of each base, then
 *             summation over the roots via trace functions
 *   - euclid: Bezout splitting of the powered factors and divrem cascades
 *   - linsys: an ansatz solved as a square linear system (the oracle)
 * The polynomial part F is the quotient of N by the expanded denominator.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfd/algext.hpp"
#include "pfd/factor_basis.hpp"
#include "pfd/parallel.hpp"
#include "pfd/poly.hpp"
#include "pfd/trace.hpp"

namespace pfd {

/// Raised when the requested method cannot handle the input.
class MethodError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <Field F>
struct RationalFunction {
    Poly<F> numerator;
    FactoredDenominator<F> denominator;

    bool is_zero() const { return numerator.is_zero(); }
};

/**
 * Builds a RationalFunction from a numerator and an arbitrary factor list:
 * squarefree decomposition, coprime refinement, then cancellation of any
 * common factor between the numerator and a base.
 */
template <Field F>
RationalFunction<F> make_rational_function(Poly<F> numerator, const std::vector<Factor<F>>& raw,
                                           F unit = F(1)) {
    if (unit.is_zero()) throw std::domain_error("division by zero");
    if (numerator.is_zero()) return {};
    auto fd = make_coprime_basis(raw, std::move(unit));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Factor<F>> next;
        for (auto& f : fd.factors) {
            Poly<F> g = gcd(numerator, f.base);
            if (g.degree() < 1) {
                next.push_back(std::move(f));
                continue;
            }
            changed = true;
            numerator = exact_div(numerator, g);
            Poly<F> rest = exact_div(f.base, g);
            if (f.multiplicity > 1) next.push_back({g, f.multiplicity - 1});
            if (rest.degree() >= 1) next.push_back({std::move(rest), f.multiplicity});
        }
        fd.factors = std::move(next);
    }
    sort_factors(fd.factors);
    return {std::move(numerator), std::move(fd)};
}

/// Exact equality of the rational functions, by cross-multiplication.
template <Field F>
bool same_function(const RationalFunction<F>& a, const RationalFunction<F>& b) {
    return a.numerator * b.denominator.expand() == b.numerator * a.denominator.expand();
}

template <Field F>
struct Decomposition {
    Poly<F> polynomial_part;
    std::vector<RationalPart<F>> groups;  // one per basis factor, basis order

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// deg N_ij < deg P_i and strictly increasing powers in every group.
template <Field F>
bool check_degree_bounds(const Decomposition<F>& d) {
    for (const auto& g : d.groups) {
        unsigned last = 0;
        for (const auto& t : g.terms) {
            if (t.numerator.degree() >= g.base.degree()) return false;
            if (t.power <= last) return false;
            last = t.power;
        }
    }
    return true;
}

enum class Method { automatic, linear, euclid, galois, linsys };

inline std::string_view to_string(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::linear: return "linear";
        case Method::euclid: return "euclid";
        case Method::galois: return "galois";
        case Method::linsys: return "linsys";
    }
    return "?";
}

inline Method parse_method(std::string_view s) {
    if (s == "auto") return Method::automatic;
    if (s == "linear") return Method::linear;
    if (s == "euclid") return Method::euclid;
    if (s == "galois") return Method::galois;
    if (s == "linsys") return Method::linsys;
    throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

/// How the Euclidean route obtains F.
enum class PolyPartMode { infinity, accumulate };

struct DecomposeOptions {
    Method method = Method::automatic;
    unsigned jobs = 1;
    PolyPartMode poly_part = PolyPartMode::infinity;
};

template <Field F>
struct PolynomialSplit {
    Poly<F> polynomial;
    RationalFunction<F> remainder;
};

/// F = N div (unit * D); the remainder keeps the same denominator.
template <Field F>
PolynomialSplit<F> polynomial_part(const RationalFunction<F>& f) {
    if (f.denominator.factors.empty()) {
        return {f.numerator * inverse(f.denominator.unit), {}};
    }
    auto [q, r] = divrem(f.numerator, f.denominator.expand());
    RationalFunction<F> rem;
    if (!r.is_zero()) rem = {std::move(r), f.denominator};
    return {std::move(q), std::move(rem)};
}

namespace detail {

template <Field F>
Decomposition<F> empty_groups(const RationalFunction<F>& f, Poly<F> poly) {
    Decomposition<F> d;
    d.polynomial_part = std::move(poly);
    for (const auto& fac : f.denominator.factors) d.groups.push_back({fac.base, {}});
    return d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Linear fast path

/// Pole coefficients c_1..c_m at the root a of the i-th (degree one) base.
template <Field F>
std::vector<F> linear_pole_coefficients(const RationalFunction<F>& f, std::size_t i) {
    const auto& fs = f.denominator.factors;
    const unsigned m = fs[i].multiplicity;
    const F a = -fs[i].base.coeffs()[0];
    AlgSeries<F> num{taylor_at_point(f.numerator, a, m)};
    AlgSeries<F> den{std::vector<F>(m, F(0))};
    den.coeffs[0] = f.denominator.unit;
    for (std::size_t l = 0; l < fs.size(); ++l) {
        if (l == i) continue;
        den = series_mul(den, series_pow(AlgSeries<F>{taylor_at_point(fs[l].base, a, m)}, fs[l].multiplicity));
    }
    auto g = series_mul(num, series_inverse(den));
    std::vector<F> c(m);
    for (unsigned j = 1; j <= m; ++j) c[j - 1] = g[m - j];
    return c;
}

template <Field F>
Decomposition<F> decompose_linear(const RationalFunction<F>& f, unsigned jobs = 1) {
    for (const auto& fac : f.denominator.factors)
        if (fac.base.degree() != 1) throw MethodError("method requires linear factors");
    auto [poly, rem] = polynomial_part(f);
    Decomposition<F> d = detail::empty_groups(f, std::move(poly));
    if (f.is_zero()) return d;
    auto parts = parallel_map(f.denominator.factors.size(), jobs, [&](std::size_t i) {
        auto c = linear_pole_coefficients(f, i);
        RationalPart<F> part{f.denominator.factors[i].base, {}};
        for (unsigned j = 1; j <= c.size(); ++j)
            if (!c[j - 1].is_zero()) part.terms.push_back({Poly<F>(c[j - 1]), j});
        return part;
    });
    d.groups = std::move(parts);
    return d;
}

// ---------------------------------------------------------------------------
// Galois / trace route

/// Local data at the formal root alpha of one base P with multiplicity m.
template <Field F>
struct LocalExpansion {
    RingPtr<F> ring;
    AlgSeries<AlgebraicElement<F>> q;        // Q(alpha + s), Q = f * P^m
    AlgSeries<AlgebraicElement<F>> s;        // S(alpha + s), S = P / (x - alpha)
    AlgebraicElement<F> s_inverse;           // S(alpha)^-1
    std::vector<AlgebraicElement<F>> pole;   // pole[j-1] = coefficient of (x - alpha)^-j
};

/**
 * Pole part of f at a root of the i-th base: the series of
 * Q / S^m = numerator / (unit * prod_{l != i} P_l^m_l * S^m), truncated at
 * order m, read back to front.
 */
template <Field F>
LocalExpansion<F> local_expansion(const RationalFunction<F>& f, std::size_t i, RingPtr<F> ring = nullptr) {
    const auto& fs = f.denominator.factors;
    const unsigned m = fs[i].multiplicity;
    if (!ring) ring = make_ring(fs[i].base);

    using Elem = AlgebraicElement<F>;
    using Series = AlgSeries<Elem>;

    Series others{std::vector<Elem>(m, Elem::zero(ring))};
    others.coeffs[0] = Elem::constant(ring, f.denominator.unit);
    for (std::size_t l = 0; l < fs.size(); ++l) {
        if (l == i) continue;
        others = series_mul(others, series_pow(Series{taylor_at_alpha(fs[l].base, ring, m)}, fs[l].multiplicity));
    }
    Series q = series_mul(Series{taylor_at_alpha(f.numerator, ring, m)}, series_inverse(others));

    auto p_taylor = taylor_at_alpha(fs[i].base, ring, m + 1);
    Series s{std::vector<Elem>(p_taylor.begin() + 1, p_taylor.end())};
    Series s_inv = series_inverse(s);

    Series g = series_mul(q, series_pow(s_inv, m));
    std::vector<Elem> pole;
    pole.reserve(m);
    for (unsigned j = 1; j <= m; ++j) pole.push_back(g[m - j]);
    Elem s0_inv = s_inv[0];
    return {std::move(ring), std::move(q), std::move(s), std::move(s0_inv), std::move(pole)};
}

namespace detail {

template <Field F>
RationalPart<F> galois_group(const RationalFunction<F>& f, std::size_t i) {
    auto ring = make_ring(f.denominator.factors[i].base);
    auto local = local_expansion(f, i, ring);
    TraceTable<F> table(ring);
    RationalPart<F> part{f.denominator.factors[i].base, {}};
    for (unsigned j = 1; j <= local.pole.size(); ++j) part += pole_sum(local.pole[j - 1], j, table);
    return part;
}

}  // namespace detail

template <Field F>
Decomposition<F> decompose_galois(const RationalFunction<F>& input, unsigned jobs = 1) {
    RationalFunction<F> f = input;
    const long max_retries = f.denominator.degree();
    for (long attempt = 0;; ++attempt) {
        auto [poly, rem] = polynomial_part(f);
        Decomposition<F> d = detail::empty_groups(f, std::move(poly));
        if (f.is_zero()) return d;
        try {
            d.groups = parallel_map(f.denominator.factors.size(), jobs,
                                    [&](std::size_t i) { return detail::galois_group(f, i); });
            return d;
        } catch (const ZeroDivisorError<F>& e) {
            // A reducible base met a zero divisor: split it by the gcd and retry.
            if (attempt >= max_retries) throw;
            std::vector<Factor<F>> raw;
            bool split = false;
            for (const auto& fac : f.denominator.factors) {
                Poly<F> g = gcd(fac.base, e.factor());
                if (!split && g.degree() >= 1 && g.degree() < fac.base.degree()) {
                    raw.push_back({g, fac.multiplicity});
                    raw.push_back({exact_div(fac.base, g), fac.multiplicity});
                    split = true;
                } else {
                    raw.push_back(fac);
                }
            }
            if (!split) throw;
            f = make_rational_function(f.numerator, raw, f.denominator.unit);
        }
    }
}

// ---------------------------------------------------------------------------
// Euclidean route

template <Field F>
Decomposition<F> decompose_euclid(const RationalFunction<F>& f, PolyPartMode mode = PolyPartMode::infinity) {
    const auto& fs = f.denominator.factors;
    Decomposition<F> d = detail::empty_groups(f, Poly<F>{});
    if (f.is_zero()) return d;
    if (fs.empty()) {
        d.polynomial_part = polynomial_part(f).polynomial;
        return d;
    }
    const bool accumulate = mode == PolyPartMode::accumulate;

    std::vector<Poly<F>> powered;
    powered.reserve(fs.size());
    for (const auto& fac : fs) powered.push_back(pow(fac.base, fac.multiplicity));

    Poly<F> current = f.numerator * inverse(f.denominator.unit);
    Poly<F> accumulated;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Poly<F> part;
        if (i + 1 == fs.size()) {
            part = std::move(current);
        } else {
            Poly<F> rest{F(1)};
            for (std::size_t l = i + 1; l < fs.size(); ++l) rest *= powered[l];
            // U P_i^m_i + V rest = 1  =>  N/(P_i^m_i rest) = N V/P_i^m_i + N U/rest
            auto eg = ext_gcd(powered[i], rest);
            if (!eg.gcd.is_one()) throw std::invalid_argument("factor basis is not coprime; refine first");
            if (accumulate) {
                part = current * eg.a2;
                current = current * eg.a1;
            } else {
                part = ((current % powered[i]) * eg.a2) % powered[i];
                current = ((current % rest) * eg.a1) % rest;
            }
        }
        auto norm = normalize_over_power(part, fs[i].base, fs[i].multiplicity);
        d.groups[i] = std::move(norm.part);
        if (accumulate) accumulated += norm.overflow;
    }
    d.polynomial_part = accumulate ? std::move(accumulated) : polynomial_part(f).polynomial;
    return d;
}

// ---------------------------------------------------------------------------
// Linear-system oracle

namespace detail {

/// Solves the square system M x = rhs by fraction-free (Bareiss) elimination.
template <Field F>
std::vector<F> bareiss_solve(std::vector<std::vector<F>> m, std::vector<F> rhs) {
    const std::size_t n = m.size();
    for (std::size_t r = 0; r < n; ++r) m[r].push_back(std::move(rhs[r]));
    F prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("linear system is singular");
        if (pivot != k) std::swap(m[pivot], m[k]);
        const F inv_prev = inverse(prev);
        for (std::size_t i = k + 1; i < n; ++i) {
            const F lead = m[i][k];
            for (std::size_t j = k + 1; j <= n; ++j) {
                F v = m[k][k] * m[i][j];
                if (!lead.is_zero()) v = v - lead * m[k][j];
                m[i][j] = v * inv_prev;
            }
            m[i][k] = F(0);
            checkpoint();
        }
        prev = m[k][k];
    }
    std::vector<F> x(n, F(0));
    for (std::size_t i = n; i-- > 0;) {
        F acc = m[i][n];
        for (std::size_t j = i + 1; j < n; ++j)
            if (!m[i][j].is_zero()) acc = acc - m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return x;
}

}  // namespace detail

/**
 * Ansatz N_ij = sum_k c_ijk x^k; clearing denominators gives
 * sum c_ijk x^k D / P_i^j = R with R the proper remainder, one equation per
 * monomial of degree < deg D.
 */
template <Field F>
Decomposition<F> decompose_linsys(const RationalFunction<F>& f) {
    auto [poly, rem] = polynomial_part(f);
    Decomposition<F> d = detail::empty_groups(f, std::move(poly));
    if (rem.is_zero()) return d;
    const auto& fs = f.denominator.factors;
    const Poly<F> D = f.denominator.expand_monic();
    const Poly<F> R = rem.numerator * inverse(f.denominator.unit);
    const auto n = static_cast<std::size_t>(D.degree());

    struct Unknown {
        std::size_t factor;
        unsigned power;
        std::size_t k;
    };
    std::vector<Unknown> unknowns;
    std::vector<Poly<F>> columns;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const Poly<F> cofactor = exact_div(D, pow(fs[i].base, fs[i].multiplicity));
        Poly<F> col = cofactor;  // D / P_i^j for j = m_i, then multiplied up
        for (unsigned j = fs[i].multiplicity; j >= 1; --j) {
            for (std::size_t k = 0; k < static_cast<std::size_t>(fs[i].base.degree()); ++k) {
                unknowns.push_back({i, j, k});
                columns.push_back(col.shifted(k));
            }
            if (j > 1) col *= fs[i].base;
        }
    }
    if (unknowns.size() != n) throw std::logic_error("ansatz size does not match denominator degree");

    std::vector<std::vector<F>> m(n, std::vector<F>(n, F(0)));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < columns[c].size(); ++r) m[r][c] = columns[c].coeffs()[r];
    std::vector<F> rhs(n, F(0));
    for (std::size_t r = 0; r < R.size(); ++r) rhs[r] = R.coeffs()[r];

    auto x = detail::bareiss_solve(std::move(m), std::move(rhs));

    std::vector<std::vector<std::vector<F>>> coeffs(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        coeffs[i].assign(fs[i].multiplicity, std::vector<F>(static_cast<std::size_t>(fs[i].base.degree()), F(0)));
    for (std::size_t u = 0; u < n; ++u) coeffs[unknowns[u].factor][unknowns[u].power - 1][unknowns[u].k] = x[u];
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (unsigned j = 1; j <= fs[i].multiplicity; ++j) {
            Poly<F> num(coeffs[i][j - 1]);
            if (!num.is_zero()) d.groups[i].terms.push_back({std::move(num), j});
        }
    return d;
}

// ---------------------------------------------------------------------------
// Dispatch and recombination

/// The method `automatic` resolves to for this input.
template <Field F>
Method choose_method(const RationalFunction<F>& f) {
    const auto& fs = f.denominator.factors;
    bool all_linear = true;
    std::size_t raised = 0;
    for (const auto& fac : fs) {
        all_linear = all_linear && fac.base.degree() == 1;
        if (fac.multiplicity > 1) ++raised;
    }
    if (all_linear) return Method::linear;
    if (raised == 1) return Method::euclid;
    return Method::galois;
}

template <Field F>
Decomposition<F> decompose(const RationalFunction<F>& f, const DecomposeOptions& opts = {}) {
    if (opts.jobs == 0) throw std::invalid_argument("jobs must be at least 1");
    Method m = opts.method == Method::automatic ? choose_method(f) : opts.method;
    switch (m) {
        case Method::linear: return decompose_linear(f, opts.jobs);
        case Method::euclid: return decompose_euclid(f, opts.poly_part);
        case Method::galois: return decompose_galois(f, opts.jobs);
        case Method::linsys: return decompose_linsys(f);
        case Method::automatic: break;
    }
    throw std::logic_error("unreachable method");
}

/// Sums all terms over the common denominator of `basis` (unit ignored).
template <Field F>
RationalFunction<F> recombine(const Decomposition<F>& d, const FactoredDenominator<F>& basis) {
    const Poly<F> D = basis.expand_monic();
    Poly<F> num = d.polynomial_part * D;
    for (const auto& g : d.groups) {
        unsigned mult = 0;
        for (const auto& fac : basis.factors)
            if (fac.base == g.base) mult = fac.multiplicity;
        for (const auto& t : g.terms) {
            if (t.power > mult) throw std::invalid_argument("term power exceeds basis multiplicity");
            num += t.numerator * exact_div(D, pow(g.base, t.power));
        }
    }
    return make_rational_function(std::move(num), basis.factors);
}

/// Recombination using the highest power present in each group.
template <Field F>
RationalFunction<F> recombine(const Decomposition<F>& d) {
    FactoredDenominator<F> basis;
    for (const auto& g : d.groups)
        if (!g.terms.empty()) basis.factors.push_back({g.base, g.terms.back().power});
    return recombine(d, basis);
}

}  // namespace pfd
