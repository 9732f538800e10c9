#include <gtest/gtest.h>

#include <set>

#include "hgf/errors.hpp"
#include "hgf/ff_chars.hpp"
#include "oracles.hpp"

using namespace hgf;

TEST(FieldCtx, LeastPrimitiveRoot) {
    EXPECT_EQ(make_field(5).generator(), 2u);
    EXPECT_EQ(make_field(7).generator(), 3u);
    for (auto p : oracle::odd_primes(3, 400)) {
        EXPECT_EQ(make_field(static_cast<std::int64_t>(p)).generator(), oracle::least_primitive_root(p)) << p;
    }
}

TEST(FieldCtx, RejectsNonPrimes) {
    for (std::int64_t n : {-7, 0, 1, 2, 4, 9, 15, 561, 1 << 20}) EXPECT_THROW(make_field(n), NotAnOddPrime) << n;
    EXPECT_NO_THROW(make_field(1048573));
}

TEST(FieldCtx, DlogTableIsBijective) {
    for (auto p : oracle::odd_primes(3, 47)) {
        const FieldCtx ctx(static_cast<std::int64_t>(p));
        std::set<std::uint32_t> seen;
        for (std::uint32_t x = 1; x < p; ++x) {
            const auto e = ctx.dlog(x);
            EXPECT_LT(e, p - 1);
            EXPECT_EQ(oracle::powm(ctx.generator(), e, p), x);
            EXPECT_EQ(ctx.exp(e), x);
            seen.insert(e);
        }
        EXPECT_EQ(seen.size(), p - 1);
    }
}

TEST(FieldCtx, DlogIsAHomomorphism) {
    for (auto p : oracle::odd_primes(3, 47)) {
        const FieldCtx ctx(static_cast<std::int64_t>(p));
        for (std::uint32_t x = 1; x < p; ++x)
            for (std::uint32_t y = 1; y < p; ++y)
                EXPECT_EQ(ctx.dlog(ctx.mul(x, y)), (ctx.dlog(x) + ctx.dlog(y)) % (p - 1));
    }
}

TEST(FieldCtx, InverseAndElem) {
    const FieldCtx ctx(13);
    EXPECT_EQ(ctx.elem(-1), 12u);
    EXPECT_EQ(ctx.elem(27), 1u);
    for (std::uint32_t x = 1; x < 13; ++x) EXPECT_EQ(ctx.mul(x, ctx.inv(x)), 1u);
    EXPECT_THROW(ctx.inv(0), ZeroArgument);
    EXPECT_EQ(ctx.reduce_exponent(-1), 11u);
}

TEST(CharValue, Examples) {
    const FieldCtx ctx(7);
    EXPECT_EQ(char_value(ctx, 3, 6), CharValue::RootOfUnity(3));
    for (std::int64_t j = 0; j < 6; ++j) {
        EXPECT_EQ(char_value(ctx, j, 1), CharValue::RootOfUnity(0));
        EXPECT_EQ(char_value(ctx, j, 0), CharValue::Zero());
    }
    EXPECT_EQ(char_value(ctx, -1, 3), CharValue::RootOfUnity(5));
}

TEST(CharValue, TotallyMultiplicative) {
    for (auto p : oracle::odd_primes(3, 31)) {
        const FieldCtx ctx(static_cast<std::int64_t>(p));
        for (std::int64_t j = 0; j < static_cast<std::int64_t>(p) - 1; ++j)
            for (std::uint32_t x = 1; x < p; ++x)
                for (std::uint32_t y = 1; y < p; ++y) {
                    const auto cx = char_value(ctx, j, x), cy = char_value(ctx, j, y);
                    EXPECT_EQ(char_value(ctx, j, ctx.mul(x, y)).exponent, (cx.exponent + cy.exponent) % (p - 1));
                }
    }
}

TEST(Quadratic, AgreesWithSquareEnumeration) {
    EXPECT_EQ(quadratic_residue_class(make_field(7), 2), 1);
    EXPECT_EQ(quadratic_residue_class(make_field(7), 0), 0);
    EXPECT_EQ(quadratic_residue_class(make_field(13), -1), 1);
    for (auto p : oracle::odd_primes(3, 47)) {
        const FieldCtx ctx(static_cast<std::int64_t>(p));
        for (std::int64_t x = 0; x < static_cast<std::int64_t>(p); ++x) {
            const int q = quadratic_residue_class(ctx, x);
            EXPECT_EQ(q, oracle::legendre(x, p));
            if (x) {
                const auto c = char_value(ctx, ctx.quadratic_exponent(), x);
                EXPECT_EQ(q, c.exponent == 0 ? 1 : -1);
            }
            const auto r = square_root(ctx, x);
            EXPECT_EQ(r.has_value(), q >= 0);
            if (r) EXPECT_EQ(ctx.mul(*r, *r), static_cast<std::uint32_t>(x));
        }
    }
}

TEST(Teichmuller, Examples) {
    const FieldCtx f5(5);
    EXPECT_EQ(teichmuller(f5, 2, 2).residue(2), 7u);
    EXPECT_EQ(teichmuller(f5, 1, 6).residue(6), 1u);
    EXPECT_THROW(teichmuller(f5, 0, 3), ZeroArgument);
    EXPECT_THROW(teichmuller(f5, 10, 3), ZeroArgument);
}

TEST(Teichmuller, RootOfUnityAndMultiplicative) {
    for (auto p : oracle::odd_primes(3, 31)) {
        const FieldCtx ctx(static_cast<std::int64_t>(p));
        const int N = 3;
        const auto M = oracle::ipow(p, N);
        for (std::uint32_t x = 1; x < p; ++x) {
            const auto wx = teichmuller(ctx, x, N).residue(N);
            EXPECT_EQ(wx % p, x);
            EXPECT_EQ(oracle::powm(wx, p - 1, M), 1u);
            for (std::uint32_t y = 1; y < p; ++y) {
                const auto wy = teichmuller(ctx, y, N).residue(N);
                EXPECT_EQ(oracle::mulm(wx, wy, M), teichmuller(ctx, ctx.mul(x, y), N).residue(N));
            }
        }
    }
}
