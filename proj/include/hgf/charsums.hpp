#pragma once

#include <cstdint>
#include <vector>

#include "hgf/cyclotomic.hpp"
#include "hgf/ff_chars.hpp"

namespace hgf {

// Gauss sums live in conductor p(p-1) with zeta_{p-1} = zeta^p and
// zeta_p = zeta^(p-1); Jacobi sums and Greene functions in conductor p-1.
inline std::uint32_t gauss_conductor(const FieldCtx& ctx) { return ctx.p() * (ctx.p() - 1); }

// g(omega^j) = sum_x omega^j(x) zeta_p^x.
GroupRingElem gauss_sum(const FieldCtx& ctx, std::int64_t j);

// All p-1 Gauss sums of one prime; read-only after construction.
class GaussTable {
public:
    explicit GaussTable(FieldCtx ctx);

    const FieldCtx& field() const { return ctx_; }
    std::uint32_t conductor() const { return gauss_conductor(ctx_); }
    const GroupRingElem& operator()(std::int64_t j) const { return g_[ctx_.reduce_exponent(j)]; }

    // zeta_{p-1}^e embedded in the Gauss-sum conductor.
    GroupRingElem root_of_unity(std::int64_t e) const;

private:
    FieldCtx ctx_;
    std::vector<GroupRingElem> g_;
};

// J(omega^j, omega^k) = sum_y omega^j(y) omega^k(1-y), conductor p-1.
GroupRingElem jacobi_sum(const FieldCtx& ctx, std::int64_t j, std::int64_t k);

// Greene's binomial (A choose B) = B(-1)/p * J(A, conj B), den = p.
CycScaled binomial(const FieldCtx& ctx, std::int64_t jA, std::int64_t jB);

// Greene's 2F1(A, B; C | t) over F_p, den = p(p-1).
CycScaled greene_2f1(const FieldCtx& ctx, std::int64_t jA, std::int64_t jB, std::int64_t jC,
                     std::int64_t t);

// 2F1(A, B; C | .) with the chi-dependent products precomputed, for sweeps over t.
class Greene2F1 {
public:
    Greene2F1(const FieldCtx& ctx, std::int64_t jA, std::int64_t jB, std::int64_t jC);

    // p(p-1) * 2F1(t), an element of Z[zeta_{p-1}].
    GroupRingElem scaled_value(std::int64_t t) const;
    CycScaled value(std::int64_t t) const;

private:
    FieldCtx ctx_;
    std::vector<GroupRingElem> terms_;  // indexed by the exponent of chi
};

// A(x) = sum_chi g(phi chi^2) g(phi conj chi) g(conj chi) chi(x/4).
// The per-chi triple products do not depend on x and are built once.
class TripleProductSum {
public:
    explicit TripleProductSum(const GaussTable& table);

    // A(x) before reduction, conductor p(p-1).
    GroupRingElem element(std::int64_t x) const;
    // A(x) as an integer; throws NonRationalResult if it is not rational.
    std::int64_t value(std::int64_t x) const;

private:
    const GaussTable* table_;
    std::vector<GroupRingElem> products_;
};

std::int64_t char_sum_A(const GaussTable& table, std::int64_t x);

// sum_j omega^j(x) in Z[zeta_{p-1}].
GroupRingElem orthogonality_sum(const FieldCtx& ctx, std::int64_t x);

// g(chi) g(conj chi) == p chi(-1) - (p-1) delta(chi)
bool check_inverse_relation(const GaussTable& table, std::int64_t j);

// J(chi1, chi2) g(chi1 chi2) == g(chi1) g(chi2) + (p-1) chi2(-1) delta(chi1 chi2) g(chi1 chi2)
bool check_gauss_jacobi(const GaussTable& table, std::int64_t j1, std::int64_t j2);

// Outcome of the Hasse-Davenport product check for an order-m chi and a psi.
struct HasseDavenportCheck {
    bool classical = false;  // prod_{i=0}^{m-1} g(psi chi^i) == RHS
    bool displayed = false;  // prod_{i=0}^{m} g(psi chi^i) == RHS
};

// RHS = g(psi^m) psi^{-m}(m) prod_{i=1}^{m-1} g(chi^i), chi = omega^{(p-1)/m}.
// Requires m | p-1.
HasseDavenportCheck verify_hasse_davenport(const GaussTable& table, std::uint32_t m,
                                           std::int64_t j_psi);

}  // namespace hgf
