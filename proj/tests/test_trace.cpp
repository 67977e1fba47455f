#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <random>

#include "test_util.hpp"

using namespace pfd;
using namespace pfd::testing;

namespace {

using Alg = AlgebraicElement<Q>;
using cd = std::complex<double>;

const QPoly cyclo = P({1, 1, 1});

Alg elem(const RingPtr<Q>& ring, std::vector<Q> coords) {
    coords.resize(ring->dim(), R(0));
    return Alg(ring, std::move(coords));
}

/// Roots of a monic polynomial as companion-matrix eigenvalues.
std::vector<cd> numeric_roots(const QPoly& p) {
    const auto n = static_cast<Eigen::Index>(p.degree());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[static_cast<std::size_t>(i)].mpq().get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(c);
    std::vector<cd> out;
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

double eval_d(const QPoly& p, double x) {
    double acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + it->mpq().get_d();
    return acc;
}

double eval_part(const RationalPart<Q>& part, double x) {
    double b = eval_d(part.base, x), acc = 0;
    for (const auto& t : part.terms) acc += eval_d(t.numerator, x) / std::pow(b, t.power);
    return acc;
}

RationalPart<Q> part_of(QPoly base, std::vector<Term<Q>> terms) { return {std::move(base), std::move(terms)}; }

}  // namespace

TEST(Newton, PowerSums) {
    EXPECT_EQ(newton_power_sums(cyclo, 2).values, (std::vector<Q>{R(2), R(-1)}));
    EXPECT_EQ(newton_power_sums(P({1, 0, 1}), 2).values, (std::vector<Q>{R(2), R(0)}));
    EXPECT_EQ(newton_power_sums(P({-5, 1}), 1).values, (std::vector<Q>{R(1)}));
    EXPECT_THROW(newton_power_sums(P({1, 2}), 1), std::invalid_argument);
}

TEST(TraceNumerators, CyclotomicRows) {
    auto t = trace_numerators(cyclo);
    ASSERT_EQ(t.rows.size(), 2U);
    EXPECT_EQ(t.rows[0], P({1, 2}));
    EXPECT_EQ(t.rows[1], P({-2, -1}));
    EXPECT_EQ(t.rows[0] + t.rows[1], P({-1, 1}));
    EXPECT_EQ(t.rows[1] * R(-19) + t.rows[0] * R(4), P({42, 27}));
}

TEST(PoleSum, SimplePole) {
    auto ring = make_ring(cyclo);
    auto part = pole_sum(elem(ring, {R(4, 36), R(-19, 36)}), 1);
    EXPECT_EQ(part, part_of(cyclo, {{QPoly({R(14, 12), R(9, 12)}), 1}}));
}

TEST(PoleSum, DoublePole) {
    auto ring = make_ring(cyclo);
    auto part = pole_sum(elem(ring, {R(1, 12), R(1, 12)}), 2);
    EXPECT_EQ(part, part_of(cyclo, {{QPoly{R(1, 12)}, 1}, {QPoly({R(-1, 4), R(-1, 4)}), 2}}));
}

TEST(PoleSum, ZeroInput) {
    auto ring = make_ring(cyclo);
    EXPECT_TRUE(pole_sum(Alg::zero(ring), 3).empty());
    EXPECT_THROW(pole_sum(Alg::one(ring), 0), std::invalid_argument);
}

TEST(NormalizeOverPower, Cascade) {
    auto n = normalize_over_power(P({0, 0, 0, 1}), cyclo, 2);
    EXPECT_TRUE(n.overflow.is_zero());
    EXPECT_EQ(n.part.terms, (std::vector<Term<Q>>{{P({-1, 1}), 1}, {P({1}), 2}}));

    auto one = normalize_over_power(P({1}), cyclo, 3);
    EXPECT_EQ(one.part.terms, (std::vector<Term<Q>>{{P({1}), 3}}));

    auto self = normalize_over_power(cyclo, cyclo, 2);
    EXPECT_EQ(self.part.terms, (std::vector<Term<Q>>{{P({1}), 1}}));

    auto big = normalize_over_power(QPoly::monomial(R(1), 5), cyclo, 1);
    EXPECT_FALSE(big.overflow.is_zero());
}

TEST(NormalizeOverPower, ReExpansionRandom) {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        QPoly base = monic(random_int_poly(rng, random_int(rng, 1, 3)));
        auto m = static_cast<unsigned>(random_int(rng, 1, 4));
        QPoly a = random_rational_poly(rng, random_int(rng, 0, 14));
        auto n = normalize_over_power(a, base, m);
        QPoly back = n.overflow * pow(base, m);
        for (const auto& t : n.part.terms) {
            EXPECT_LT(t.numerator.degree(), base.degree());
            back += t.numerator * pow(base, m - t.power);
        }
        EXPECT_EQ(back, a);
    }
}

TEST(PoleSum, LinearityRandom) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        QPoly mod = monic(random_int_poly(rng, random_int(rng, 1, 4)));
        if (!is_squarefree(mod)) continue;
        auto ring = make_ring(mod);
        TraceTable<Q> table(ring);
        Alg b1 = alg_reduce(random_rational_poly(rng, 3), ring);
        Alg b2 = alg_reduce(random_rational_poly(rng, 3), ring);
        auto j = static_cast<unsigned>(random_int(rng, 1, 4));
        auto sum = pole_sum(b1, j, table);
        sum += pole_sum(b2, j, table);
        EXPECT_EQ(pole_sum(b1 + b2, j, table), sum);
    }
}

TEST(PoleSum, NumericRootOracle) {
    std::mt19937_64 rng(43);
    int checked = 0;
    while (checked < 50) {
        QPoly mod = monic(random_int_poly(rng, random_int(rng, 1, 4), -5, 5));
        if (!is_squarefree(mod)) continue;
        ++checked;
        auto roots = numeric_roots(mod);
        auto ring = make_ring(mod);
        TraceTable<Q> table(ring);
        const auto n = static_cast<std::size_t>(mod.degree());
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Q> coords(n, R(0));
            coords[k] = R(1);
            Alg b(ring, coords);
            for (unsigned j = 1; j <= 3; ++j) {
                auto part = pole_sum(b, j, table);
                for (int s = 0; s < 5; ++s) {
                    // Rational sample points away from the real roots.
                    double x = static_cast<double>(random_int(rng, -40, 40)) / 7.0 + 0.05;
                    cd expected = 0;
                    for (cd r : roots) expected += std::pow(r, static_cast<int>(k)) / std::pow(cd(x) - r, static_cast<int>(j));
                    double got = eval_part(part, x);
                    double scale = std::max(1.0, std::abs(expected));
                    EXPECT_NEAR(got, expected.real(), 1e-6 * scale) << to_string(mod) << " k=" << k << " j=" << j << " x=" << x;
                    EXPECT_NEAR(expected.imag(), 0.0, 1e-6 * scale);
                }
            }
        }
    }
}
