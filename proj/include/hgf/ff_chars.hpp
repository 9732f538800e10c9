#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgf/padic.hpp"

namespace hgf {

/**
 * Prime field F_p together with its least primitive root g and the full
 * discrete-log table. Characters are named by exponents: omega^j sends
 * g^e to zeta_{p-1}^{j e}. Immutable after construction.
 */
class FieldCtx {
public:
    // Throws NotAnOddPrime unless p is an odd prime below 2^20.
    explicit FieldCtx(std::int64_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t order() const { return p_ - 1; }  // |F_p^x|
    std::uint32_t generator() const { return g_; }

    // e with g^e = x, for 1 <= x < p.
    std::uint32_t dlog(std::uint32_t x) const { return dlog_[x]; }
    // g^e for any integer e.
    std::uint32_t exp(std::int64_t e) const { return pow_[reduce_exponent(e)]; }

    // Representative of a in [0, p).
    std::uint32_t elem(std::int64_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    // Exponent arithmetic modulo p-1.
    std::uint32_t reduce_exponent(std::int64_t e) const;

    // Exponent of the quadratic character phi = omega^{(p-1)/2}.
    std::uint32_t quadratic_exponent() const { return (p_ - 1) / 2; }

private:
    std::uint32_t p_;
    std::uint32_t g_;
    std::vector<std::uint32_t> dlog_;
    std::vector<std::uint32_t> pow_;
};

inline FieldCtx make_field(std::int64_t p) { return FieldCtx(p); }

// Value of a character: 0 (only at the argument 0) or zeta_{p-1}^exponent.
struct CharValue {
    bool zero = true;
    std::uint32_t exponent = 0;

    static CharValue Zero() { return {}; }
    static CharValue RootOfUnity(std::uint32_t e) { return {false, e}; }
    bool operator==(const CharValue&) const = default;
};

// omega^j(x) with the convention chi(0) = 0 for every chi, the trivial one included.
CharValue char_value(const FieldCtx& ctx, std::int64_t j, std::int64_t x);

// Legendre symbol: 0, +1 or -1.
int quadratic_residue_class(const FieldCtx& ctx, std::int64_t x);

// Some a with a^2 = x, if x is a square (a = 0 for x = 0).
std::optional<std::uint32_t> square_root(const FieldCtx& ctx, std::int64_t x);

// Teichmuller lift omega(x) in Z_p to N digits; throws ZeroArgument for x = 0.
PadicNum teichmuller(const FieldCtx& ctx, std::int64_t x, int N);

}  // namespace hgf
