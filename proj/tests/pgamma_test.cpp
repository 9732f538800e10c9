#include <gtest/gtest.h>

#include <random>

#include "hgf/errors.hpp"
#include "hgf/pgamma.hpp"
#include "oracles.hpp"

using namespace hgf;

namespace {

std::vector<Rational> small_rationals(std::uint64_t p) {
    std::vector<Rational> out;
    for (std::int64_t s = 1; s <= 12; ++s) {
        if (s % static_cast<std::int64_t>(p) == 0) continue;
        for (std::int64_t r = 0; r <= s; ++r) out.emplace_back(r, s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST(GammaInt, MatchesDirectProduct) {
    for (std::uint64_t p : {3u, 5u, 7u}) {
        const std::uint64_t bound = oracle::ipow(p, 3);
        for (std::uint64_t m = 0; m < bound; ++m) EXPECT_EQ(gamma_p_int(m, p, 4), oracle::gamma_int_direct(m, p, 4)) << p << " " << m;
    }
}

TEST(GammaInt, LargeArgumentsNearTheLimit) {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {3u, 5u}) {
        const int K = 3;
        const std::uint64_t limit = oracle::ipow(p, K + 2);
        for (int i = 0; i < 50; ++i) {
            const std::uint64_t m = rng() % limit;
            EXPECT_EQ(gamma_p_int(m, p, K), oracle::gamma_int_direct(m, p, K));
        }
        EXPECT_EQ(gamma_p_int(limit - 1, p, K), oracle::gamma_int_direct(limit - 1, p, K));
        EXPECT_THROW(gamma_p_int(limit, p, K), ArgumentTooLarge);
    }
    EXPECT_EQ(gamma_p_int(5, 5, 2), 1u);
    EXPECT_THROW(gamma_p_int(3, 5, 0), PrecisionExhausted);
}

TEST(GammaInt, UnitProductRange) {
    const std::uint64_t p = 7, M = oracle::ipow(p, 3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t a = rng() % 3000, b = rng() % 3000;
        if (a > b) std::swap(a, b);
        std::uint64_t expect = 1;
        for (std::uint64_t j = a; j < b; ++j)
            if (j % p) expect = oracle::mulm(expect, j % M, M);
        EXPECT_EQ(unit_product_range(a, b, p, 3), expect) << a << " " << b;
    }
}

TEST(GammaRational, FrozenValues) {
    EXPECT_EQ(gamma_p_rational(Rational(1, 4), 5, 4).residue(4), 21u);
    EXPECT_EQ(gamma_p_rational(Rational(3, 4), 5, 4).residue(4), 506u);
    EXPECT_EQ(gamma_p_rational(Rational(1, 2), 7, 4).residue(4), 2400u);
    EXPECT_EQ(gamma_p_rational(Rational(1, 4), 13, 3).residue(3), 2143u);
    EXPECT_EQ(gamma_p_rational(Rational(1, 3), 11, 4).residue(4), 11402u);
    EXPECT_EQ(gamma_p_rational(Rational(1, 4), 5, 4).to_string(), "21 (mod 5^4)");
}

TEST(GammaRational, MatchesNaivePrefixTable) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
        const int N = 4;
        const oracle::NaiveGamma G(p, N);
        for (const auto& x : small_rationals(p)) {
            const auto v = gamma_p_rational(x, p, N);
            EXPECT_EQ(v.precision(), N);
            EXPECT_EQ(v.residue(N), G.at(x.num(), x.den())) << p << " " << x.to_string();
        }
    }
}

TEST(GammaRational, GuardDigitsDoNotChangeTheValue) {
    for (std::uint64_t p : {5u, 13u, 31u}) {
        for (const auto& x : small_rationals(p)) {
            EXPECT_TRUE(eq_to_prec(gamma_p_rational(x, p, 4, 1), gamma_p_rational(x, p, 4, 3)));
        }
    }
}

TEST(GammaRational, FunctionalEquation) {
    const std::uint64_t p = 7;
    for (const auto& x : small_rationals(p)) {
        const auto lhs = gamma_p_rational(x + Rational(1), p, 4);
        const auto gx = gamma_p_rational(x, p, 4);
        const bool unit = (x.num() % 7) != 0;
        const auto rhs = unit ? -(PadicNum::from_rational(x.num(), x.den(), p, 4) * gx) : -gx;
        EXPECT_TRUE(eq_to_prec(lhs, rhs)) << x.to_string();
    }
}

TEST(GammaRational, Errors) {
    EXPECT_THROW(gamma_p_rational(Rational(1, 5), 5, 4), DenominatorDivisibleByP);
    EXPECT_THROW(gamma_p_rational(Rational(1, 2), 5, 0), PrecisionExhausted);
}

TEST(GammaHelpers, LiftAndA0) {
    EXPECT_EQ(padic_lift(Rational(1, 4), 5, 4), oracle::inv(4, 625));
    EXPECT_EQ(padic_lift(Rational(-1, 2), 7, 2), oracle::red(-oracle::inv(2, 49), 49));
    EXPECT_EQ(a0(Rational(0), 5), 5u);
    EXPECT_EQ(a0(Rational(1, 4), 5), 4u);
    EXPECT_EQ(a0(Rational(3, 4), 5), 2u);
    EXPECT_EQ(a0(Rational(1), 5), 1u);
}

TEST(GammaTable, Basics) {
    GammaTable t(5, 3);
    EXPECT_EQ(t.unit(Rational(0)), 1u);
    EXPECT_EQ(t.unit(Rational(1)), 124u);
    EXPECT_THROW(t.unit(Rational(1, 2)), std::out_of_range);
    EXPECT_THROW(t.insert(Rational(3, 2), 1), std::out_of_range);
    EXPECT_THROW(t.insert(Rational(1, 2), 5), Error);
    t.insert(Rational(1, 2), 7);
    EXPECT_EQ(t.truncated(2).unit(Rational(1, 2)), 7u);
    EXPECT_EQ(t.truncated(1).unit(Rational(1, 2)), 2u);
    EXPECT_THROW(t.truncated(4), Error);
}

TEST(GammaTable, BatchMatchesSingleEvaluation) {
    for (std::uint64_t p : {5u, 7u, 13u, 31u}) {
        const auto args = small_rationals(p);
        const auto table = batch_gamma(args, p, 4);
        for (const auto& x : args) {
            EXPECT_EQ(table.unit(x), gamma_p_rational(x, p, 4).residue(4)) << p << " " << x.to_string();
        }
    }
}

TEST(GammaIdentities, ReflectionProductsAndMultiplication) {
    for (auto p : oracle::odd_primes(3, 31)) {
        EXPECT_TRUE(verify_reflection(p, 4)) << p;
        for (std::uint64_t m : {2u, 3u, 4u}) {
            if (p % m == 0) continue;
            EXPECT_TRUE(verify_prod1(p, m, 4)) << p << " m=" << m;
        }
        for (std::uint64_t t : {2u, 3u, 4u}) {
            if (p % t == 0) continue;
            EXPECT_TRUE(verify_prod2(p, t, 4)) << p << " t=" << t;
        }
    }
}

TEST(GammaIdentities, ReflectionAgainstOracle) {
    for (std::uint64_t p : {5u, 7u, 13u}) {
        const oracle::NaiveGamma G(p, 4);
        const auto M = G.modulus();
        for (const auto& x : reflection_arguments(p)) {
            const Rational y = Rational(1) - x;
            const auto prod = oracle::mulm(G.at(x.num(), x.den()), G.at(y.num(), y.den()), M);
            const auto a = a0(x, p);
            EXPECT_EQ(prod, a % 2 ? M - 1 : 1u) << p << " " << x.to_string();
        }
    }
}
