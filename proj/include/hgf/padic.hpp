#pragma once

#include <cstdint>
#include <string>

namespace hgf {

/**
 * Fixed-precision element of Q_p stored as p^val * unit.
 *
 * A nonzero value carries a unit residue modulo p^prec, so it is known
 * modulo p^(val + prec) ("absolute precision"). A value indistinguishable
 * from zero keeps only its absolute precision: it is known to lie in
 * p^val Z_p. Exact zero uses val == kExact.
 *
 * Every operation propagates the smallest precision its inputs justify;
 * in particular cancellation in a sum lowers the relative precision of
 * the result instead of inventing digits.
 */
class PadicNum {
public:
    static constexpr int kExact = 1 << 28;

    PadicNum() = default;

    static PadicNum zero(std::uint64_t p, int abs_prec = kExact);
    // r / s with relative precision N. Throws DenominatorDivisibleByP if p | s.
    static PadicNum from_rational(std::int64_t r, std::int64_t s, std::uint64_t p, int N);
    static PadicNum from_integer(std::int64_t r, std::uint64_t p, int N) {
        return from_rational(r, 1, p, N);
    }
    // p^val * unit where unit is read modulo p^prec; throws if p | unit.
    static PadicNum from_unit(std::uint64_t p, int val, std::uint64_t unit, int prec);
    // Nonnegative-valuation value given as a residue modulo p^abs_prec.
    static PadicNum from_residue(std::uint64_t p, std::uint64_t residue, int abs_prec);

    std::uint64_t prime() const { return p_; }
    bool is_zero() const { return prec_ == 0; }
    bool is_exact_zero() const { return is_zero() && val_ >= kExact; }
    // For zero this is the absolute precision (lower bound on the valuation).
    int valuation() const { return val_; }
    std::uint64_t unit() const { return unit_; }
    int precision() const { return prec_; }
    int absolute_precision() const { return is_zero() ? val_ : val_ + prec_; }

    PadicNum operator+(const PadicNum& o) const;
    PadicNum operator-(const PadicNum& o) const { return *this + (-o); }
    PadicNum operator*(const PadicNum& o) const;
    PadicNum operator-() const;
    PadicNum& operator+=(const PadicNum& o) { return *this = *this + o; }
    PadicNum& operator*=(const PadicNum& o) { return *this = *this * o; }

    // Throws PrecisionExhausted when the value has no provable digits.
    PadicNum inverse() const;
    PadicNum pow(std::int64_t e) const;
    // Multiplication by p^e (exact, e may be negative).
    PadicNum shifted(int e) const;
    // Forget digits beyond absolute precision n.
    PadicNum truncated(int abs_prec) const;

    // Value modulo p^n for a p-adic integer; needs valuation >= 0 and n <= absolute precision.
    std::uint64_t residue(int n) const;

    // "-2 (mod 7^4)" for integral values, "3*5^-1 (mod 5^3)" otherwise,
    // "0 (mod 5^4)" for zero to precision.
    std::string to_string() const;

private:
    PadicNum(std::uint64_t p, int val, std::uint64_t unit, int prec)
        : p_(p), val_(val), unit_(unit), prec_(prec) {}

    std::uint64_t p_ = 0;
    int val_ = kExact;
    std::uint64_t unit_ = 0;
    int prec_ = 0;
};

// Equality at the smaller of the two absolute precisions.
bool eq_to_prec(const PadicNum& a, const PadicNum& b);

// The root of unity congruent to x mod p, found as the fixed point of y -> y^p
// modulo p^N. Throws ZeroArgument when p | x.
PadicNum teichmuller_lift(std::uint64_t x, std::uint64_t p, int N);

}  // namespace hgf
