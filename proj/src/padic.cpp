#include "hgf/padic.hpp"

#include <algorithm>
#include <cstdlib>

#include "hgf/errors.hpp"
#include "hgf/modarith.hpp"

namespace hgf {

using mod::u64;

namespace {

void require_same_prime(u64 a, u64 b) {
    if (a != b) throw Error("p-adic operands over different primes");
}

// Strips the p-part of a residue modulo p^prec; returns the resulting value.
PadicNum normalized(u64 p, int val, u64 residue, int prec) {
    if (prec <= 0) return PadicNum::zero(p, val + std::max(prec, 0));
    u64 m = mod::ipow_checked(p, prec);
    residue %= m;
    if (residue == 0) return PadicNum::zero(p, val + prec);
    int k = 0;
    while (residue % p == 0) {
        residue /= p;
        ++k;
    }
    return PadicNum::from_unit(p, val + k, residue, prec - k);
}

}  // namespace

PadicNum PadicNum::zero(u64 p, int abs_prec) {
    return PadicNum(p, std::min(abs_prec, kExact), 0, 0);
}

PadicNum PadicNum::from_rational(std::int64_t r, std::int64_t s, u64 p, int N) {
    if (s == 0) throw Error("zero denominator");
    if (s % static_cast<std::int64_t>(p) == 0) {
        throw DenominatorDivisibleByP("denominator " + std::to_string(s) + " divisible by p=" +
                                      std::to_string(p));
    }
    if (r == 0) return zero(p);
    if (N < 1) throw PrecisionExhausted("requested precision below one digit");
    int v = mod::valuation(r, p);
    std::int64_t rr = r;
    for (int i = 0; i < v; ++i) rr /= static_cast<std::int64_t>(p);
    u64 m = mod::ipow_checked(p, N);
    u64 unit = mod::mulmod(mod::reduce(rr, m), mod::invmod(mod::reduce(s, m), m), m);
    return PadicNum(p, v, unit, N);
}

PadicNum PadicNum::from_unit(u64 p, int val, u64 unit, int prec) {
    if (prec <= 0) return zero(p, val);
    u64 m = mod::ipow_checked(p, prec);
    unit %= m;
    if (unit % p == 0) throw Error("from_unit: residue is not a p-adic unit");
    return PadicNum(p, val, unit, prec);
}

PadicNum PadicNum::from_residue(u64 p, u64 residue, int abs_prec) {
    return normalized(p, 0, residue, abs_prec);
}

PadicNum PadicNum::operator-() const {
    if (is_zero()) return *this;
    return PadicNum(p_, val_, mod::negmod(unit_, mod::ipow_checked(p_, prec_)), prec_);
}

PadicNum PadicNum::operator+(const PadicNum& o) const {
    require_same_prime(p_, o.p_);
    int abs = std::min(absolute_precision(), o.absolute_precision());
    if (is_zero() && o.is_zero()) return zero(p_, abs);
    if (is_zero()) return o.truncated(abs);
    if (o.is_zero()) return truncated(abs);
    int v = std::min(val_, o.val_);
    if (abs <= v) return zero(p_, abs);
    int rel = abs - v;
    u64 m = mod::ipow_checked(p_, rel);
    auto lift = [&](const PadicNum& x) -> u64 {
        int shift = x.val_ - v;
        if (shift >= rel) return 0;
        return mod::mulmod(x.unit_ % m, mod::ipow_checked(p_, shift), m);
    };
    return normalized(p_, v, mod::addmod(lift(*this), lift(o), m), rel);
}

PadicNum PadicNum::operator*(const PadicNum& o) const {
    require_same_prime(p_, o.p_);
    if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
    if (is_zero() || o.is_zero()) {
        long long bound = static_cast<long long>(val_) + o.val_;
        return zero(p_, static_cast<int>(std::min<long long>(bound, kExact)));
    }
    int prec = std::min(prec_, o.prec_);
    u64 m = mod::ipow_checked(p_, prec);
    return PadicNum(p_, val_ + o.val_, mod::mulmod(unit_ % m, o.unit_ % m, m), prec);
}

PadicNum PadicNum::inverse() const {
    if (is_zero()) throw PrecisionExhausted("cannot invert a value with no provable digits");
    u64 m = mod::ipow_checked(p_, prec_);
    return PadicNum(p_, -val_, mod::invmod(unit_, m), prec_);
}

PadicNum PadicNum::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return PadicNum(p_, 0, 1, is_zero() ? kExact : prec_);
    if (is_zero()) {
        long long bound = static_cast<long long>(val_) * e;
        return zero(p_, static_cast<int>(std::min<long long>(bound, kExact)));
    }
    u64 m = mod::ipow_checked(p_, prec_);
    return PadicNum(p_, static_cast<int>(val_ * e), mod::powmod(unit_, static_cast<u64>(e), m),
                    prec_);
}

PadicNum PadicNum::shifted(int e) const {
    if (is_exact_zero()) return *this;
    return PadicNum(p_, val_ + e, unit_, prec_);
}

PadicNum PadicNum::truncated(int abs_prec) const {
    if (abs_prec >= absolute_precision()) return *this;
    if (is_zero() || abs_prec <= val_) return zero(p_, abs_prec);
    int prec = abs_prec - val_;
    return PadicNum(p_, val_, unit_ % mod::ipow_checked(p_, prec), prec);
}

u64 PadicNum::residue(int n) const {
    if (n > absolute_precision()) {
        throw PrecisionExhausted("residue mod p^" + std::to_string(n) + " requested from value known mod p^" +
                                 std::to_string(absolute_precision()));
    }
    u64 m = mod::ipow_checked(p_, n);
    if (is_zero() || val_ >= n) return 0;
    if (val_ < 0) throw Error("residue of a non-integral p-adic number");
    return mod::mulmod(unit_ % m, mod::ipow_checked(p_, val_), m);
}

std::string PadicNum::to_string() const {
    std::string ps = std::to_string(p_);
    if (is_exact_zero()) return "0";
    int abs = absolute_precision();
    std::string tag = " (mod " + ps + "^" + std::to_string(abs) + ")";
    if (is_zero()) return "0" + tag;
    if (val_ >= 0) {
        u64 m = mod::ipow_checked(p_, abs);
        return std::to_string(mod::balanced(residue(abs), m)) + tag;
    }
    u64 m = mod::ipow_checked(p_, prec_);
    return std::to_string(mod::balanced(unit_, m)) + "*" + ps + "^" + std::to_string(val_) + tag;
}

bool eq_to_prec(const PadicNum& a, const PadicNum& b) { return (a - b).is_zero(); }

PadicNum teichmuller_lift(u64 x, u64 p, int N) {
    if (x % p == 0) throw ZeroArgument("Teichmuller lift of a multiple of p");
    u64 m = mod::ipow_checked(p, N);
    u64 y = x % m;
    // Each step gains one p-adic digit, so N + 1 iterations reach the fixed point.
    for (int i = 0; i <= N + 1; ++i) {
        u64 next = mod::powmod(y, p, m);
        if (next == y) break;
        y = next;
    }
    return PadicNum::from_unit(p, 0, y, N);
}

}  // namespace hgf
