#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hgf/padic.hpp"
#include "hgf/rational.hpp"

namespace hgf {

inline constexpr int kGammaGuardDigits = 1;

// prod_{a <= j < b, p !| j} j  mod p^K.
std::uint64_t unit_product_range(std::uint64_t a, std::uint64_t b, std::uint64_t p, int K);

// Morita's Gamma_p(m) = (-1)^m prod_{0<j<m, p!|j} j mod p^K, Gamma_p(0) = 1.
// Throws ArgumentTooLarge when m >= p^(K+2).
std::uint64_t gamma_p_int(std::uint64_t m, std::uint64_t p, int K);

// Gamma_p(x) for rational x with p !| den(x), evaluated at the integer lift of
// x modulo p^(N+guard) and truncated to N digits.
PadicNum gamma_p_rational(const Rational& x, std::uint64_t p, int N,
                          int guard = kGammaGuardDigits);

// Representative of x mod p in {1, ..., p}.
std::uint32_t a0(const Rational& x, std::uint64_t p);

// Integer m in [0, p^K) congruent to x modulo p^K.
std::uint64_t padic_lift(const Rational& x, std::uint64_t p, int K);

/**
 * Gamma_p values at rational arguments in [0, 1], as units mod p^K.
 * The entries for 0 and 1 are always present.
 */
class GammaTable {
public:
    GammaTable() = default;
    GammaTable(std::uint64_t p, int K);

    std::uint64_t prime() const { return p_; }
    int precision() const { return K_; }
    const std::map<Rational, std::uint64_t>& entries() const { return entries_; }

    bool contains(const Rational& x) const { return entries_.count(x) != 0; }
    // Throws std::out_of_range for arguments outside [0,1] or not in the table.
    std::uint64_t unit(const Rational& x) const;
    PadicNum at(const Rational& x) const;

    void insert(const Rational& x, std::uint64_t unit);
    // Copy reduced to K' <= K digits.
    GammaTable truncated(int K) const;

private:
    std::uint64_t p_ = 0;
    int K_ = 0;
    std::map<Rational, std::uint64_t> entries_;
};

// One ascending pass over the sorted lifts of all arguments, snapshotting the
// running product at each lift. Matches gamma_p_rational entry by entry.
GammaTable batch_gamma(const std::vector<Rational>& args, std::uint64_t p, int K);

// Source of gamma tables; the CLI plugs its cache in here.
using GammaSupplier =
    std::function<GammaTable(std::uint64_t p, int K, const std::vector<Rational>& args)>;

GammaSupplier default_gamma_supplier();

// Both sides of the multiplication formula at x = r/(p-1).
std::pair<PadicNum, PadicNum> prod1_sides(std::uint64_t p, std::uint64_t m, std::uint32_t r, int N);
// Both sides of the t-fold product formula at j.
std::pair<PadicNum, PadicNum> prod2_sides(std::uint64_t p, std::uint64_t t, std::uint32_t j, int N);
// Gamma_p(x) Gamma_p(1-x) and (-1)^{a0(x)}.
std::pair<PadicNum, PadicNum> reflection_sides(std::uint64_t p, const Rational& x, int N);

// Reflection arguments: r/(p-1) for 0 <= r <= p-1 and r/4 for 0 <= r <= 4.
std::vector<Rational> reflection_arguments(std::uint64_t p);

bool verify_prod1(std::uint64_t p, std::uint64_t m, int N);
bool verify_prod2(std::uint64_t p, std::uint64_t t, int N);
bool verify_reflection(std::uint64_t p, int N);

}  // namespace hgf
