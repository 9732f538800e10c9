#include "hgf/gseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgf/errors.hpp"
#include "hgf/modarith.hpp"

namespace hgf {

using mod::u64;

namespace {

std::vector<Rational> fractional_parts(std::vector<Rational> xs) {
    for (auto& x : xs) x = frac(x);
    return xs;
}

void require_in_zp(const Rational& x, u64 p) {
    if (x.den() % static_cast<std::int64_t>(p) == 0) {
        throw DenominatorDivisibleByP("parameter " + x.to_string() + " is not in Z_" +
                                      std::to_string(p));
    }
}

std::int64_t checked_floor(const Rational& x, std::int64_t lo, std::int64_t hi) {
    std::int64_t f = x.floor();
    if (f < lo || f > hi) throw std::logic_error("floor out of range for parameters in [0,1)");
    return f;
}

}  // namespace

GParams::GParams(std::vector<Rational> a_in, std::vector<Rational> b_in)
    : a(fractional_parts(std::move(a_in))), b(fractional_parts(std::move(b_in))) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument("nGn needs n >= 1 top and bottom parameters");
    }
}

GSeries::GSeries(GParams params, u64 p, int N, const GammaSupplier& supplier)
    : params_(std::move(params)), p_(p), N_(N) {
    if (N < 2) throw std::invalid_argument("nGn precision must be at least 2");
    for (const auto& x : params_.a) require_in_zp(x, p);
    for (const auto& x : params_.b) require_in_zp(x, p);

    const std::int64_t order = static_cast<std::int64_t>(p) - 1;
    const std::size_t n = params_.n();

    std::vector<int> exponents(order, 0);
    for (std::int64_t a = 0; a < order; ++a) {
        const Rational s(a, order);
        for (std::size_t k = 0; k < n; ++k) {
            exponents[a] += static_cast<int>(-checked_floor(params_.a[k] - s, -1, 0) -
                                             checked_floor(frac(-params_.b[k]) + s, 0, 1));
        }
    }
    const std::vector<Rational> args = gamma_arguments(params_, p);

    const int min_e = *std::min_element(exponents.begin(), exponents.end());
    W_ = N_ + std::max(0, -min_e);

    GammaTable table = supplier(p, W_, args);
    if (table.precision() < W_) throw PrecisionExhausted("gamma table below working precision");
    if (table.precision() > W_) table = table.truncated(W_);

    coef_.reserve(order);
    for (std::int64_t a = 0; a < order; ++a) {
        const Rational s(a, order);
        PadicNum c = PadicNum::from_integer(1, p, W_);
        for (std::size_t k = 0; k < n; ++k) {
            const Rational ak = params_.a[k];
            const Rational mbk = frac(-params_.b[k]);
            c *= table.at(frac(ak - s)) * table.at(ak).inverse();
            c *= table.at(frac(mbk + s)) * table.at(mbk).inverse();
        }
        const int e = exponents[a];
        // (-1)^{an} (-p)^e
        if ((a * static_cast<std::int64_t>(n) + e) % 2 != 0) c = -c;
        coef_.push_back(c.shifted(e));
    }
}

std::vector<Rational> gamma_arguments(const GParams& params, u64 p) {
    const std::int64_t order = static_cast<std::int64_t>(p) - 1;
    std::vector<Rational> args;
    for (std::int64_t a = 0; a < order; ++a) {
        const Rational s(a, order);
        for (std::size_t k = 0; k < params.n(); ++k) {
            const Rational mbk = frac(-params.b[k]);
            args.push_back(frac(params.a[k] - s));
            args.push_back(frac(mbk + s));
            args.push_back(params.a[k]);
            args.push_back(mbk);
        }
    }
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    return args;
}

GValue GSeries::value(std::int64_t t) const {
    const std::int64_t pp = static_cast<std::int64_t>(p_);
    const std::int64_t tt = ((t % pp) + pp) % pp;
    if (tt == 0) throw TZero();

    // omega-bar^a(t) = omega(t)^{-a}
    const PadicNum w_inv = teichmuller_lift(static_cast<u64>(tt), p_, W_).inverse();
    PadicNum power = PadicNum::from_integer(1, p_, W_);
    PadicNum acc = PadicNum::zero(p_);
    for (const auto& c : coef_) {
        acc += c * power;
        power *= w_inv;
    }
    acc = acc * PadicNum::from_rational(-1, pp - 1, p_, W_);
    if (acc.absolute_precision() < N_) throw PrecisionExhausted("nGn value lost precision");
    return GValue{acc.truncated(N_), p_, tt, params_, N_};
}

GValue g_function(const GParams& params, std::int64_t t, u64 p, int N, const GammaSupplier& supplier) {
    return GSeries(params, p, N, supplier).value(t);
}

GParams g22_params(Lower lower) {
    const Rational b2 = lower == Lower::Half ? Rational(1, 2) : Rational(0);
    return GParams({Rational(1, 4), Rational(3, 4)}, {Rational(0), b2});
}

GValue g22_family(std::int64_t t, u64 p, int N, Lower lower, const GammaSupplier& supplier) {
    return g_function(g22_params(lower), t, p, N, supplier);
}

std::set<std::uint32_t> zero_locus(u64 p, int N, const GammaSupplier& supplier) {
    GSeries series(g22_params(Lower::Half), p, N, supplier);
    std::set<std::uint32_t> zeros;
    for (u64 t = 1; t < p; ++t) {
        if (series.value(static_cast<std::int64_t>(t)).value.is_zero()) {
            zeros.insert(static_cast<std::uint32_t>(t));
        }
    }
    return zeros;
}

PadicNum cyc_to_padic(const GroupRingElem& e, const FieldCtx& ctx, int N) {
    if (e.conductor() != ctx.order()) throw ConductorMismatch(e.conductor(), ctx.order());
    const u64 p = ctx.p();
    const u64 modulus = mod::ipow_checked(p, N);
    const u64 zeta = teichmuller(ctx, ctx.generator(), N).residue(N);
    u64 acc = 0;
    u64 power = 1 % modulus;
    for (std::int64_t c : e.coeffs()) {
        acc = mod::addmod(acc, mod::mulmod(mod::reduce(c, modulus), power, modulus), modulus);
        power = mod::mulmod(power, zeta, modulus);
    }
    return PadicNum::from_residue(p, acc, N);
}

PadicNum cyc_to_padic(const CycScaled& e, const FieldCtx& ctx, int N) {
    const u64 p = ctx.p();
    const int v = mod::valuation(static_cast<u64>(e.den), p);
    PadicNum num = cyc_to_padic(e.num, ctx, N + v);
    PadicNum den = PadicNum::from_integer(e.den, p, N + v);
    return (num * den.inverse()).truncated(N);
}

}  // namespace hgf
