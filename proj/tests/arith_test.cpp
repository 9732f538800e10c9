#include <gtest/gtest.h>

#include <random>

#include "hgf/errors.hpp"
#include "hgf/modarith.hpp"
#include "hgf/rational.hpp"
#include "oracles.hpp"

using namespace hgf;

TEST(ModArith, PowAndInverseAgreeWithOracle) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const mod::u64 m = rng() % 1000000 + 2;
        const mod::u64 a = rng() % m;
        const mod::u64 e = rng() % 100000;
        EXPECT_EQ(mod::powmod(a, e, m), oracle::powm(a, e, m));
        if (std::gcd(a, m) == 1) {
            EXPECT_EQ(mod::mulmod(a, mod::invmod(a, m), m), 1 % m);
        } else {
            EXPECT_THROW(mod::invmod(a, m), Error);
        }
    }
}

TEST(ModArith, ReduceAndBalanced) {
    EXPECT_EQ(mod::reduce(-1, 7), 6u);
    EXPECT_EQ(mod::reduce(-14, 7), 0u);
    EXPECT_EQ(mod::balanced(6, 7), -1);
    EXPECT_EQ(mod::balanced(3, 7), 3);
    EXPECT_EQ(mod::balanced(4, 7), -3);
}

TEST(ModArith, PrimalityMatchesTrialDivision) {
    for (mod::u64 n = 0; n < 5000; ++n) EXPECT_EQ(mod::is_prime(n), oracle::is_prime(n)) << n;
}

TEST(ModArith, CheckedPowerOverflows) {
    EXPECT_EQ(mod::ipow_checked(5, 4), 625u);
    EXPECT_EQ(mod::ipow_checked(47, 0), 1u);
    EXPECT_THROW(mod::ipow_checked(47, 12), ModulusOverflow);
}

TEST(ModArith, Valuation) {
    EXPECT_EQ(mod::valuation(250, 5), 3);
    EXPECT_EQ(mod::valuation(-49, 7), 2);
    EXPECT_EQ(mod::valuation(3, 7), 0);
}

TEST(Rational, NormalizesSignAndGcd) {
    const Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(8, 4).to_string(), "2");
}

TEST(Rational, ArithmeticAndOrder) {
    const Rational a(1, 4), b(3, 4);
    EXPECT_EQ(a + b, Rational(1));
    EXPECT_EQ(a - b, Rational(-1, 2));
    EXPECT_EQ(a * b, Rational(3, 16));
    EXPECT_EQ(a / b, Rational(1, 3));
    EXPECT_LT(a, b);
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(Rational, FloorAndFractionalPart) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-4).floor(), -4);
    EXPECT_EQ(frac(Rational(-1, 4)), Rational(3, 4));
    EXPECT_EQ(frac(Rational(5, 4)), Rational(1, 4));
    EXPECT_EQ(frac(Rational(3)), Rational(0));
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "1", "-5", "1/4", "-3/8", "12/7"}) {
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    }
    EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
    for (const char* s : {"", "1/", "/2", "a", "1/0", "1.5", "1/-2 "}) {
        EXPECT_THROW(Rational::parse(s), std::invalid_argument) << s;
    }
}

TEST(Rational, Errors) {
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(INT64_MAX) + Rational(1), std::overflow_error);
}
