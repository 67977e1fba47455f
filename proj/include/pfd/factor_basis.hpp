#pragma once

/**
 * @file factor_basis.hpp
 * @brief Squarefree and coprime (gcd-free) factor bases for denominators.
 *
 * A FactoredDenominator holds unit * prod base_i^mult_i where every base is
 * monic, nonconstant, squarefree and coprime to every other base. No
 * irreducible factorization is attempted: a user-supplied factorization is
 * kept as given and only refined where gcds force it.
 */

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfd/poly.hpp"

namespace pfd {

template <Field F>
struct Factor {
    Poly<F> base;
    unsigned multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

template <Field F>
struct FactoredDenominator {
    std::vector<Factor<F>> factors;
    F unit = F(1);

    friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;

    long degree() const {
        long d = 0;
        for (const auto& f : factors) d += f.base.degree() * static_cast<long>(f.multiplicity);
        return d;
    }

    /// prod base^mult, without the unit.
    Poly<F> expand_monic() const {
        Poly<F> out{F(1)};
        for (const auto& f : factors) out *= pow(f.base, f.multiplicity);
        return out;
    }

    Poly<F> expand() const { return expand_monic() * unit; }
};

/// Deterministic factor ordering: by degree, then coefficients from x^0 up.
template <Field F>
void sort_factors(std::vector<Factor<F>>& factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor<F>& a, const Factor<F>& b) {
        return poly_compare(a.base, b.base) < 0;
    });
}

template <Field F>
bool is_squarefree(const Poly<F>& p) {
    if (p.degree() < 1) return true;
    return gcd(p, derivative(p)).is_one();
}

/**
 * Yun's algorithm: p = unit * prod a_i^i with each a_i squarefree and the
 * a_i pairwise coprime.
 */
template <Field F>
FactoredDenominator<F> squarefree_decompose(const Poly<F>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
    FactoredDenominator<F> out;
    out.unit = p.lead();
    if (p.degree() < 1) return out;

    Poly<F> f = monic(p);
    Poly<F> df = derivative(f);
    Poly<F> a0 = gcd(f, df);
    Poly<F> b = exact_div(f, a0);
    Poly<F> c = exact_div(df, a0);
    Poly<F> d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() >= 1) {
        Poly<F> a = gcd(b, d);
        if (a.degree() >= 1) out.factors.push_back({a, i});
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - derivative(b);
        ++i;
    }
    sort_factors(out.factors);
    return out;
}

namespace detail {

template <Field F>
void merge_identical(std::vector<Factor<F>>& fs) {
    sort_factors(fs);
    std::vector<Factor<F>> merged;
    for (auto& f : fs) {
        if (!merged.empty() && merged.back().base == f.base)
            merged.back().multiplicity += f.multiplicity;
        else
            merged.push_back(std::move(f));
    }
    fs = std::move(merged);
}

}  // namespace detail

/**
 * Splits bases by pairwise gcds until all pairs are coprime. Bases must
 * already be squarefree; divisors of squarefree polynomials stay squarefree.
 */
template <Field F>
FactoredDenominator<F> coprime_basis_refine(FactoredDenominator<F> fd) {
    auto& fs = fd.factors;
    for (auto& f : fs) {
        if (!f.base.is_monic() && !f.base.is_zero()) {
            F lc = f.base.lead();
            for (unsigned k = 0; k < f.multiplicity; ++k) fd.unit = fd.unit * lc;
            f.base = monic(f.base);
        }
    }
    std::erase_if(fs, [](const Factor<F>& f) { return f.base.degree() < 1 || f.multiplicity == 0; });
    detail::merge_identical(fs);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < fs.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < fs.size() && !changed; ++j) {
                Poly<F> g = gcd(fs[i].base, fs[j].base);
                if (g.degree() < 1) continue;
                Factor<F> common{g, fs[i].multiplicity + fs[j].multiplicity};
                fs[i].base = exact_div(fs[i].base, g);
                fs[j].base = exact_div(fs[j].base, g);
                fs.push_back(std::move(common));
                std::erase_if(fs, [](const Factor<F>& f) { return f.base.degree() < 1; });
                detail::merge_identical(fs);
                changed = true;
            }
        }
    }
    sort_factors(fs);
    return fd;
}

/**
 * Full preprocessing of an arbitrary factor list: squarefree-decompose each
 * entry, then refine the union into a coprime basis.
 */
template <Field F>
FactoredDenominator<F> make_coprime_basis(const std::vector<Factor<F>>& raw, F unit = F(1)) {
    FactoredDenominator<F> fd;
    fd.unit = std::move(unit);
    for (const auto& r : raw) {
        if (r.base.is_zero()) throw std::domain_error("division by zero polynomial");
        auto sq = squarefree_decompose(r.base);
        for (unsigned k = 0; k < r.multiplicity; ++k) fd.unit = fd.unit * sq.unit;
        for (auto& f : sq.factors) fd.factors.push_back({f.base, f.multiplicity * r.multiplicity});
    }
    return coprime_basis_refine(std::move(fd));
}

template <Field F>
bool pairwise_coprime(const std::vector<Factor<F>>& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (!gcd(fs[i].base, fs[j].base).is_one()) return false;
    return true;
}

/// True iff fd satisfies every basis invariant and expands to `original`.
template <Field F>
bool validate_factorization(const FactoredDenominator<F>& fd, const Poly<F>& original) {
    for (const auto& f : fd.factors) {
        if (f.multiplicity == 0 || f.base.degree() < 1 || !f.base.is_monic()) return false;
        if (!is_squarefree(f.base)) return false;
    }
    if (!pairwise_coprime(fd.factors)) return false;
    return fd.expand() == original;
}

}  // namespace pfd
