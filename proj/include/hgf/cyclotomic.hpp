#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgf {

// Phi_m as a monic integer polynomial, coefficients lowest degree first.
struct CyclotomicPoly {
    std::uint32_t m = 1;
    std::vector<std::int64_t> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
};

// Throws ConductorTooLarge unless 1 <= m <= 10000. Results are memoized.
const CyclotomicPoly& cyclotomic_poly(std::int64_t m);

/**
 * Element of the group ring Z[x]/(x^m - 1); index k holds the coefficient
 * of zeta_m^k. Arithmetic is exact and overflow-checked (CoefficientOverflow).
 * Equality in Z[zeta_m] requires reduction modulo Phi_m, see reduce().
 */
class GroupRingElem {
public:
    explicit GroupRingElem(std::uint32_t m = 1);

    static GroupRingElem constant(std::uint32_t m, std::int64_t c);
    static GroupRingElem monomial(std::uint32_t m, std::int64_t k, std::int64_t c = 1);

    std::uint32_t conductor() const { return m_; }
    std::int64_t coeff(std::int64_t k) const { return c_[index(k)]; }
    std::span<const std::int64_t> coeffs() const { return c_; }
    bool is_zero() const;

    // coefficient of zeta^k += c
    void add_term(std::int64_t k, std::int64_t c);

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    GroupRingElem operator*(std::int64_t s) const;
    GroupRingElem& operator+=(const GroupRingElem& o);
    GroupRingElem& operator-=(const GroupRingElem& o);

    // Multiplication by zeta_m^k (a cyclic shift of the coefficients).
    GroupRingElem times_monomial(std::int64_t k) const;
    // Image under zeta_m -> zeta_M^(M/m); requires m | M.
    GroupRingElem embed(std::uint32_t M) const;

    // Identity of group-ring representatives, not equality in Z[zeta_m].
    bool operator==(const GroupRingElem&) const = default;

private:
    std::size_t index(std::int64_t k) const;

    std::uint32_t m_;
    std::vector<std::int64_t> c_;
};

// Canonical representative modulo Phi_m: all coefficients at indices >= phi(m) vanish.
GroupRingElem reduce(const GroupRingElem& e);

// a == b in Z[zeta_m].
bool equal_in_ring(const GroupRingElem& a, const GroupRingElem& b);

// The integer c when e == c in Z[zeta_m].
std::optional<std::int64_t> as_rational(const GroupRingElem& e);

// "[c0, c1, ...]" of the reduced representative, trailing zeros dropped.
std::string to_string(const GroupRingElem& e);

// num / den with den > 0: values of Greene binomials and 2F1.
struct CycScaled {
    GroupRingElem num;
    std::int64_t den = 1;

    CycScaled() = default;
    CycScaled(GroupRingElem n, std::int64_t d);

    CycScaled operator+(const CycScaled& o) const;
    CycScaled operator*(const CycScaled& o) const;
};

// Cross-multiplied comparison in Z[zeta_m].
bool equal_in_ring(const CycScaled& a, const CycScaled& b);

// "[c0, c1, ...]/den"
std::string to_string(const CycScaled& e);

// Euler's totient.
std::uint32_t euler_phi(std::uint32_t m);

}  // namespace hgf
