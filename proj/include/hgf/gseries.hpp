#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hgf/cyclotomic.hpp"
#include "hgf/ff_chars.hpp"
#include "hgf/padic.hpp"
#include "hgf/pgamma.hpp"
#include "hgf/rational.hpp"

namespace hgf {

// Parameters a_1..a_n; b_1..b_n of nGn, stored as fractional parts.
struct GParams {
    std::vector<Rational> a;
    std::vector<Rational> b;

    GParams() = default;
    GParams(std::vector<Rational> a, std::vector<Rational> b);

    std::size_t n() const { return a.size(); }
    bool operator==(const GParams&) const = default;
};

struct GValue {
    PadicNum value;
    std::uint64_t p = 0;
    std::int64_t t = 0;
    GParams params;
    int precision = 0;
};

/**
 * McCarthy's nGn[a; b | t] at a fixed prime and precision.
 *
 * The t-independent part of each summand (sign, power of -p and the gamma
 * quotients) is computed once, so a sweep over t costs one Teichmuller lift
 * and p-1 multiplications per point.
 */
class GSeries {
public:
    // Throws DenominatorDivisibleByP if a parameter is not in Z_p, and
    // std::invalid_argument for N < 2.
    GSeries(GParams params, std::uint64_t p, int N,
            const GammaSupplier& supplier = default_gamma_supplier());

    const GParams& params() const { return params_; }
    std::uint64_t prime() const { return p_; }
    int precision() const { return N_; }
    // Digits carried by the gamma table: N plus the deepest negative power of p.
    int working_precision() const { return W_; }

    // Throws TZero when p | t.
    GValue value(std::int64_t t) const;

private:
    GParams params_;
    std::uint64_t p_;
    int N_;
    int W_ = 0;
    std::vector<PadicNum> coef_;  // indexed by a = 0..p-2
};

// Distinct gamma arguments, all in [0, 1), that nGn[params | .] reads at p.
std::vector<Rational> gamma_arguments(const GParams& params, std::uint64_t p);

GValue g_function(const GParams& params, std::int64_t t, std::uint64_t p, int N,
                  const GammaSupplier& supplier = default_gamma_supplier());

enum class Lower { Half, Zero };

// a = (1/4, 3/4) with b = (0, 1/2) for Half, b = (0, 0) for Zero.
GParams g22_params(Lower lower);
GValue g22_family(std::int64_t t, std::uint64_t p, int N, Lower lower,
                  const GammaSupplier& supplier = default_gamma_supplier());

// All t in F_p^x where the Half family vanishes to precision N.
std::set<std::uint32_t> zero_locus(std::uint64_t p, int N,
                                   const GammaSupplier& supplier = default_gamma_supplier());

// Ring map Z[zeta_{p-1}] -> Z_p sending zeta_{p-1} to the Teichmuller lift of
// the primitive root. Throws ConductorMismatch unless the conductor is p-1.
PadicNum cyc_to_padic(const GroupRingElem& e, const FieldCtx& ctx, int N);
// num/den with the result known to absolute precision N.
PadicNum cyc_to_padic(const CycScaled& e, const FieldCtx& ctx, int N);

}  // namespace hgf
