#include "hgf/modarith.hpp"

#include "hgf/errors.hpp"

namespace hgf::mod {

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 reduce(i64 a, u64 m) {
    if (a >= 0) return static_cast<u64>(a) % m;
    // -(a + 1) avoids overflow at INT64_MIN.
    u64 r = static_cast<u64>(-(a + 1)) % m;
    return m - 1 - r;
}

u64 invmod(u64 a, u64 m) {
    i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw Error("value is not invertible modulo " + std::to_string(m));
    return reduce(old_s, m);
}

u64 ipow_checked(u64 p, int k) {
    u64 r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > (kMaxModulus - 1) / p) {
            throw ModulusOverflow(std::to_string(p) + "^" + std::to_string(k) +
                                  " exceeds the 62-bit modulus limit");
        }
        r *= p;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

int valuation(i64 n, u64 p) {
    int v = 0;
    while (n != 0 && n % static_cast<i64>(p) == 0) {
        n /= static_cast<i64>(p);
        ++v;
    }
    return v;
}

i64 balanced(u64 a, u64 m) {
    a %= m;
    return a > m / 2 ? -static_cast<i64>(m - a) : static_cast<i64>(a);
}

}  // namespace hgf::mod
