#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace pfd;
using namespace pfd::testing;

TEST(Rational, MakeNormalizes) {
    EXPECT_EQ(to_string(rat_make(2, 4)), "1/2");
    EXPECT_EQ(to_string(rat_make(3, -6)), "-1/2");
    auto z = rat_make(0, 7);
    EXPECT_EQ(z.num(), 0);
    EXPECT_EQ(z.den(), 1);
    EXPECT_EQ(to_string(z), "0");
}

TEST(Rational, ZeroDenominator) {
    EXPECT_THROW(rat_make(1, 0), std::domain_error);
    try {
        rat_make(1, 0);
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "division by zero");
    }
    EXPECT_THROW(R(1) / R(0), std::domain_error);
}

TEST(Rational, Inverse) {
    EXPECT_EQ(inverse(R(3, 4)), R(4, 3));
    EXPECT_EQ(inverse(R(-1, 2)), R(-2));
    EXPECT_EQ(to_string(inverse(R(-1, 2))), "-2");
    EXPECT_THROW(inverse(R(0)), std::domain_error);
}

TEST(Rational, ParseText) {
    EXPECT_EQ(Rational::parse("-6/4"), R(-3, 2));
    EXPECT_EQ(Rational::parse("17"), R(17));
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, FieldAxiomsRandom) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        Q a = random_rational(rng, 1000), b = random_rational(rng, 1000);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
        if (!a.is_zero()) EXPECT_EQ(a * inverse(a), R(1));
    }
}

namespace {

ParamRational random_param(std::mt19937_64& rng) {
    QPoly num = random_rational_poly(rng, random_int(rng, 0, 2));
    QPoly den = random_int_poly(rng, random_int(rng, 0, 2), -4, 4);
    if (den.is_zero()) den = P({1});
    return ParamRational(num, den);
}

}  // namespace

TEST(ParamRational, Inverse) {
    ParamRational t_plus_1(P({1, 1}), P({1}));
    ParamRational inv = inverse(t_plus_1);
    EXPECT_EQ(inv.num(), P({1}));
    EXPECT_EQ(inv.den(), P({1, 1}));
    EXPECT_EQ(t_plus_1 * inv, ParamRational(1));
    EXPECT_THROW(inverse(ParamRational()), std::domain_error);
}

TEST(ParamRational, CanonicalForm) {
    // (2t^2 - 2) / (4t - 4) = (t + 1) / 2
    ParamRational v(P({-2, 0, 2}), P({-4, 4}));
    EXPECT_EQ(v.den(), P({1}));
    EXPECT_EQ(v.num(), QPoly({R(1, 2), R(1, 2)}));
    ParamRational zero(QPoly{}, P({3, 1}));
    EXPECT_EQ(zero.den(), P({1}));
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(to_string(ParamRational::parameter() + ParamRational(1), "t"), "(1 + t)/(1)");
    EXPECT_THROW(ParamRational(P({1}), QPoly{}), std::domain_error);
}

TEST(ParamRational, NormalizationIdempotent) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        ParamRational a = random_param(rng);
        ParamRational again(a.num(), a.den());
        EXPECT_EQ(again, a);
        EXPECT_TRUE(a.den().is_monic());
        EXPECT_TRUE(gcd(a.num().is_zero() ? P({1}) : a.num(), a.den()).is_one());
    }
}

TEST(ParamRational, FieldAxiomsRandom) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        ParamRational a = random_param(rng), b = random_param(rng);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
        if (!a.is_zero()) EXPECT_EQ(a * inverse(a), ParamRational(1));
    }
}
