#pragma once

// Word-sized modular arithmetic shared by the field, p-adic and gamma code.
// Moduli are kept below 2^62 so that a sum of two residues never wraps.

#include <cstdint>

namespace hgf::mod {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kMaxModulus = u64{1} << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) {
    return a >= b ? a - b : a + (m - b);
}

inline u64 negmod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

u64 powmod(u64 base, u64 exp, u64 m);

// Reduces a signed integer into [0, m).
u64 reduce(i64 a, u64 m);

// Inverse of a modulo m; throws hgf::Error when gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);

// p^k, throwing hgf::ModulusOverflow when the result would reach kMaxModulus.
u64 ipow_checked(u64 p, int k);

// Trial division; exact for every 64-bit input but only intended for n < 2^20.
bool is_prime(u64 n);

// Largest e with p^e | n, for n != 0.
int valuation(i64 n, u64 p);

// Representative of a residue in (-m/2, m/2].
i64 balanced(u64 a, u64 m);

}  // namespace hgf::mod
