#include "hgf/ff_chars.hpp"

#include "hgf/errors.hpp"
#include "hgf/modarith.hpp"

namespace hgf {
namespace {

constexpr std::int64_t kMaxPrime = std::int64_t{1} << 20;

bool has_full_order(std::uint32_t g, std::uint32_t p) {
    std::uint32_t n = p - 1;
    std::uint32_t rest = n;
    for (std::uint32_t q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        if (mod::powmod(g, n / q, p) == 1) return false;
    }
    if (rest > 1 && mod::powmod(g, n / rest, p) == 1) return false;
    return true;
}

}  // namespace

FieldCtx::FieldCtx(std::int64_t p) {
    if (p < 3 || p >= kMaxPrime || !mod::is_prime(static_cast<std::uint64_t>(p))) {
        throw NotAnOddPrime(p);
    }
    p_ = static_cast<std::uint32_t>(p);
    g_ = 2;
    while (!has_full_order(g_, p_)) ++g_;
    dlog_.assign(p_, 0);
    pow_.assign(p_ - 1, 0);
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e < p_ - 1; ++e) {
        pow_[e] = x;
        dlog_[x] = e;
        x = mul(x, g_);
    }
}

std::uint32_t FieldCtx::elem(std::int64_t a) const {
    return static_cast<std::uint32_t>(mod::reduce(a, p_));
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw ZeroArgument("inverse of 0 in F_p");
    return pow_[(p_ - 1 - dlog_[a]) % (p_ - 1)];
}

std::uint32_t FieldCtx::reduce_exponent(std::int64_t e) const {
    return static_cast<std::uint32_t>(mod::reduce(e, p_ - 1));
}

CharValue char_value(const FieldCtx& ctx, std::int64_t j, std::int64_t x) {
    std::uint32_t y = ctx.elem(x);
    if (y == 0) return CharValue::Zero();
    std::uint64_t e = static_cast<std::uint64_t>(ctx.reduce_exponent(j)) * ctx.dlog(y);
    return CharValue::RootOfUnity(static_cast<std::uint32_t>(e % ctx.order()));
}

int quadratic_residue_class(const FieldCtx& ctx, std::int64_t x) {
    std::uint32_t y = ctx.elem(x);
    if (y == 0) return 0;
    return ctx.dlog(y) % 2 == 0 ? 1 : -1;
}

std::optional<std::uint32_t> square_root(const FieldCtx& ctx, std::int64_t x) {
    std::uint32_t y = ctx.elem(x);
    if (y == 0) return 0u;
    std::uint32_t e = ctx.dlog(y);
    if (e % 2 != 0) return std::nullopt;
    return ctx.exp(e / 2);
}

PadicNum teichmuller(const FieldCtx& ctx, std::int64_t x, int N) {
    std::uint32_t y = ctx.elem(x);
    if (y == 0) throw ZeroArgument("Teichmuller lift of 0");
    return teichmuller_lift(y, ctx.p(), N);
}

}  // namespace hgf
