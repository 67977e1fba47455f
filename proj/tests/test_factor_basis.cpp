#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace pfd;
using namespace pfd::testing;

namespace {

using Factors = std::vector<Factor<Q>>;

FactoredDenominator<Q> fd_of(Factors fs, Q unit = R(1)) { return {std::move(fs), unit}; }

}  // namespace

TEST(Squarefree, RepeatedRoot) {
    auto fd = squarefree_decompose(P({0, 0, -1, 1}));
    EXPECT_EQ(fd.unit, R(1));
    EXPECT_EQ(fd.factors, (Factors{{P({-1, 1}), 1}, {P({0, 1}), 2}}));
}

TEST(Squarefree, AlreadySquarefree) {
    auto fd = squarefree_decompose(P({1, 1, 1}));
    EXPECT_EQ(fd.factors, (Factors{{P({1, 1, 1}), 1}}));
}

TEST(Squarefree, UnitExtracted) {
    auto fd = squarefree_decompose(P({0, 0, 2}));
    EXPECT_EQ(fd.unit, R(2));
    EXPECT_EQ(fd.factors, (Factors{{P({0, 1}), 2}}));
    EXPECT_THROW(squarefree_decompose(QPoly{}), std::domain_error);
}

TEST(Refine, SplitsSharedFactor) {
    auto fd = coprime_basis_refine(fd_of({{P({-1, 0, 1}), 1}, {P({-1, 1}), 1}}));
    EXPECT_EQ(fd.factors, (Factors{{P({-1, 1}), 2}, {P({1, 1}), 1}}));
}

TEST(Refine, CoprimeUnchanged) {
    Factors in{{P({1, -1, 1}), 2}, {P({1, 1, 1}), 2}};
    EXPECT_EQ(coprime_basis_refine(fd_of(in)).factors, in);
    Factors single{{P({0, 1}), 3}};
    EXPECT_EQ(coprime_basis_refine(fd_of(single)).factors, single);
}

TEST(Refine, LeadingCoefficientsMoveToUnit) {
    auto fd = coprime_basis_refine(fd_of({{P({1, 2}), 2}}));
    EXPECT_EQ(fd.unit, R(4));
    EXPECT_EQ(fd.factors, (Factors{{QPoly({R(1, 2), R(1)}), 2}}));
}

TEST(Validate, Examples) {
    QPoly p1 = P({1, 1, 1}), p2 = P({1, -1, 1});
    EXPECT_TRUE(validate_factorization(fd_of({{p2, 2}, {p1, 2}}), pow(p1, 2) * pow(p2, 2)));
    EXPECT_FALSE(validate_factorization(fd_of({{P({-1, 1}), 1}}), P({-2, 1})));
    EXPECT_FALSE(validate_factorization(fd_of({{P({-1, 0, 1}), 1}, {P({1, 1}), 1}}), P({-1, -1, 1, 1})));
}

TEST(Refine, ProductPreservedRandom) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Factors raw;
        QPoly expected = P({1});
        Q unit = R(random_int(rng, 1, 5));
        const long count = random_int(rng, 1, 4);
        // Build factors that often share pieces so refinement has work to do.
        std::vector<QPoly> atoms;
        for (int k = 0; k < 3; ++k) atoms.push_back(random_int_poly(rng, random_int(rng, 1, 2)));
        for (long k = 0; k < count; ++k) {
            QPoly base = atoms[random_int(rng, 0, 2)];
            if (random_int(rng, 0, 1)) base *= atoms[random_int(rng, 0, 2)];
            auto mult = static_cast<unsigned>(random_int(rng, 1, 3));
            raw.push_back({base, mult});
            expected *= pow(base, mult);
        }
        auto fd = make_coprime_basis(raw, unit);
        EXPECT_TRUE(validate_factorization(fd, expected * unit));
        EXPECT_TRUE(pairwise_coprime(fd.factors));
        for (const auto& f : fd.factors) EXPECT_TRUE(is_squarefree(f.base));
        EXPECT_EQ(coprime_basis_refine(fd), fd);
    }
}
