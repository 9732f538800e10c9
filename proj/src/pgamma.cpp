#include "hgf/pgamma.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hgf/errors.hpp"
#include "hgf/modarith.hpp"

namespace hgf {

using mod::u64;

namespace {

// Products of units over aligned blocks [c p^k, (c+1) p^k) are polynomials in c:
//   B_k(c) = prod_{0 < j < p^k, p !| j} (c p^k + j).
// The coefficient of c^i carries p^{ki}, so modulo p^K only degrees < K survive,
// and B_{k+1}(c) = prod_{b < p} B_k(p c + b) can be built level by level.
class BlockProducts {
public:
    BlockProducts(u64 p, int K) : p_(p), K_(K), m_(mod::ipow_checked(p, K)) {
        Poly first{1 % m_};
        for (u64 j = 1; j < p_; ++j) first = times_linear(first, j % m_, p_ % m_);
        levels_.push_back(Poly{1 % m_});  // level 0 is handled directly
        levels_.push_back(std::move(first));
    }

    u64 modulus() const { return m_; }
    u64 prime() const { return p_; }

    // B_k(c); k >= 1.
    u64 block(int k, u64 c) {
        while (static_cast<int>(levels_.size()) <= k) extend();
        const Poly& poly = levels_[k];
        u64 y = c % m_;
        u64 acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = mod::addmod(mod::mulmod(acc, y, m_), poly[i], m_);
        return acc;
    }

private:
    using Poly = std::vector<u64>;

    // poly * (c0 + c1 y), truncated to degree < K.
    Poly times_linear(const Poly& poly, u64 c0, u64 c1) const {
        Poly r(std::min<std::size_t>(poly.size() + 1, K_), 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (i < r.size()) r[i] = mod::addmod(r[i], mod::mulmod(poly[i], c0, m_), m_);
            if (i + 1 < r.size()) r[i + 1] = mod::addmod(r[i + 1], mod::mulmod(poly[i], c1, m_), m_);
        }
        return r;
    }

    Poly times(const Poly& a, const Poly& b) const {
        Poly r(std::min<std::size_t>(a.size() + b.size() - 1, K_), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j) {
                r[i + j] = mod::addmod(r[i + j], mod::mulmod(a[i], b[j], m_), m_);
            }
        }
        return r;
    }

    void extend() {
        const Poly prev = levels_.back();
        Poly acc{1 % m_};
        for (u64 b = 0; b < p_; ++b) {
            // prev(p y + b) by Horner's rule.
            Poly sub{prev.back()};
            for (std::size_t i = prev.size() - 1; i-- > 0;) {
                sub = times_linear(sub, b % m_, p_ % m_);
                sub[0] = mod::addmod(sub[0], prev[i], m_);
            }
            acc = times(acc, sub);
        }
        levels_.push_back(std::move(acc));
    }

    u64 p_;
    int K_;
    u64 m_;
    std::vector<Poly> levels_;
};

std::shared_ptr<BlockProducts> block_products(u64 p, int K) {
    static std::mutex mu;
    static std::map<std::pair<u64, int>, std::shared_ptr<BlockProducts>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, K}];
    if (!slot) slot = std::make_shared<BlockProducts>(p, K);
    return slot;
}

std::mutex& block_mutex() {
    static std::mutex mu;
    return mu;
}

void require_unit_denominator(const Rational& x, u64 p) {
    if (x.den() % static_cast<std::int64_t>(p) == 0) {
        throw DenominatorDivisibleByP("argument " + x.to_string() + " is not in Z_" +
                                      std::to_string(p));
    }
}

u64 sign_adjust(u64 value, u64 m, u64 modulus) {
    return (m % 2 == 1) ? mod::negmod(value, modulus) : value;
}

}  // namespace

u64 unit_product_range(u64 a, u64 b, u64 p, int K) {
    auto blocks = block_products(p, K);
    const u64 modulus = blocks->modulus();
    u64 acc = 1 % modulus;
    // Level polynomials are extended lazily; serialize access.
    std::lock_guard lock(block_mutex());
    u64 cur = a;
    while (cur < b) {
        int k = 0;
        u64 size = 1;
        // Grow the block while it stays aligned and inside [cur, b).
        while (size <= (b - cur) / p && cur % (size * p) == 0) {
            size *= p;
            ++k;
        }
        if (k == 0) {
            if (cur % p != 0) acc = mod::mulmod(acc, cur % modulus, modulus);
        } else {
            acc = mod::mulmod(acc, blocks->block(k, cur / size), modulus);
        }
        cur += size;
    }
    return acc;
}

u64 gamma_p_int(u64 m, u64 p, int K) {
    if (K < 1) throw PrecisionExhausted("gamma_p_int needs at least one digit");
    u64 bound = mod::ipow_checked(p, K + 2);
    if (m >= bound) {
        throw ArgumentTooLarge("gamma_p_int argument " + std::to_string(m) + " >= p^(K+2)");
    }
    u64 modulus = mod::ipow_checked(p, K);
    if (m == 0) return 1 % modulus;
    return sign_adjust(unit_product_range(1, m, p, K), m, modulus);
}

u64 padic_lift(const Rational& x, u64 p, int K) {
    require_unit_denominator(x, p);
    u64 modulus = mod::ipow_checked(p, K);
    return mod::mulmod(mod::reduce(x.num(), modulus), mod::invmod(mod::reduce(x.den(), modulus), modulus),
                       modulus);
}

PadicNum gamma_p_rational(const Rational& x, u64 p, int N, int guard) {
    if (N < 1) throw PrecisionExhausted("gamma_p needs at least one digit");
    int work = N + guard;
    u64 m = padic_lift(x, p, work);
    u64 g = gamma_p_int(m, p, work);
    return PadicNum::from_unit(p, 0, g % mod::ipow_checked(p, N), N);
}

std::uint32_t a0(const Rational& x, u64 p) {
    u64 r = padic_lift(x, p, 1);
    return static_cast<std::uint32_t>(r == 0 ? p : r);
}

GammaTable::GammaTable(u64 p, int K) : p_(p), K_(K) {
    u64 modulus = mod::ipow_checked(p, K);
    entries_[Rational(0)] = 1 % modulus;
    entries_[Rational(1)] = modulus - 1;
}

u64 GammaTable::unit(const Rational& x) const {
    auto it = entries_.find(x);
    if (it == entries_.end()) {
        throw std::out_of_range("Gamma_" + std::to_string(p_) + "(" + x.to_string() +
                                ") missing from table");
    }
    return it->second;
}

PadicNum GammaTable::at(const Rational& x) const { return PadicNum::from_unit(p_, 0, unit(x), K_); }

void GammaTable::insert(const Rational& x, u64 unit) {
    if (x < Rational(0) || x > Rational(1)) throw std::out_of_range("gamma table argument outside [0,1]");
    if (unit % p_ == 0) throw Error("gamma table entry is not a unit");
    entries_[x] = unit % mod::ipow_checked(p_, K_);
}

GammaTable GammaTable::truncated(int K) const {
    if (K > K_) throw PrecisionExhausted("cannot extend a gamma table beyond its precision");
    GammaTable t(p_, K);
    u64 modulus = mod::ipow_checked(p_, K);
    for (const auto& [x, u] : entries_) t.entries_[x] = u % modulus;
    return t;
}

GammaTable batch_gamma(const std::vector<Rational>& args, u64 p, int K) {
    GammaTable table(p, K);
    const int work = K + kGammaGuardDigits;
    const u64 work_mod = mod::ipow_checked(p, work);
    const u64 out_mod = mod::ipow_checked(p, K);

    std::vector<std::pair<u64, Rational>> lifts;
    lifts.reserve(args.size());
    for (const auto& x : args) {
        if (x < Rational(0) || x > Rational(1)) {
            throw std::out_of_range("batch_gamma argument " + x.to_string() + " outside [0,1]");
        }
        lifts.emplace_back(padic_lift(x, p, work), x);
    }
    std::sort(lifts.begin(), lifts.end());

    u64 position = 1;  // running product covers 0 < j < position
    u64 running = 1 % work_mod;
    for (const auto& [m, x] : lifts) {
        if (m == 0) {
            table.insert(x, 1 % out_mod);
            continue;
        }
        running = mod::mulmod(running, unit_product_range(position, m, p, work), work_mod);
        position = m;
        table.insert(x, sign_adjust(running, m, work_mod) % out_mod);
    }
    return table;
}

GammaSupplier default_gamma_supplier() {
    return [](u64 p, int K, const std::vector<Rational>& args) { return batch_gamma(args, p, K); };
}

std::pair<PadicNum, PadicNum> prod1_sides(u64 p, u64 m, std::uint32_t r, int N) {
    if (m == 0 || m % p == 0) throw Error("prod-1 needs p !| m");
    if (r > p - 1) throw Error("prod-1 needs 0 <= r <= p-1");
    const Rational x(r, static_cast<std::int64_t>(p - 1));
    const auto mm = static_cast<std::int64_t>(m);
    PadicNum lhs = PadicNum::from_integer(1, p, N);
    for (std::int64_t h = 0; h < mm; ++h) lhs *= gamma_p_rational((x + Rational(h)) / Rational(mm), p, N);
    // (1 - x)(1 - p) = r - (p - 1) is an integer on this domain.
    const std::int64_t e = static_cast<std::int64_t>(r) - static_cast<std::int64_t>(p - 1);
    PadicNum rhs = teichmuller_lift(m % p, p, N).pow(e) * gamma_p_rational(x, p, N);
    for (std::int64_t h = 1; h < mm; ++h) rhs *= gamma_p_rational(Rational(h, mm), p, N);
    return {lhs, rhs};
}

std::pair<PadicNum, PadicNum> prod2_sides(u64 p, u64 t, std::uint32_t j, int N) {
    if (t == 0 || t % p == 0) throw Error("prod-2 needs p !| t");
    const auto tt = static_cast<std::int64_t>(t);
    const Rational step(j, static_cast<std::int64_t>(p - 1));
    PadicNum lhs = teichmuller_lift(t % p, p, N).pow(-tt * j) *
                   gamma_p_rational(frac(-Rational(tt) * step), p, N);
    for (std::int64_t h = 1; h < tt; ++h) lhs *= gamma_p_rational(Rational(h, tt), p, N);
    PadicNum rhs = PadicNum::from_integer(1, p, N);
    for (std::int64_t h = 1; h <= tt; ++h) rhs *= gamma_p_rational(frac(Rational(h, tt) - step), p, N);
    return {lhs, rhs};
}

std::pair<PadicNum, PadicNum> reflection_sides(u64 p, const Rational& x, int N) {
    PadicNum lhs = gamma_p_rational(x, p, N) * gamma_p_rational(Rational(1) - x, p, N);
    PadicNum rhs = PadicNum::from_integer(a0(x, p) % 2 == 0 ? 1 : -1, p, N);
    return {lhs, rhs};
}

std::vector<Rational> reflection_arguments(u64 p) {
    std::vector<Rational> xs;
    for (u64 r = 0; r <= p - 1; ++r) xs.emplace_back(r, p - 1);
    for (int r = 0; r <= 4; ++r) xs.emplace_back(r, 4);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

bool verify_prod1(u64 p, u64 m, int N) {
    for (std::uint32_t r = 0; r <= p - 1; ++r) {
        auto [l, rr] = prod1_sides(p, m, r, N);
        if (!eq_to_prec(l, rr)) return false;
    }
    return true;
}

bool verify_prod2(u64 p, u64 t, int N) {
    for (std::uint32_t j = 0; j + 1 < p; ++j) {
        auto [l, r] = prod2_sides(p, t, j, N);
        if (!eq_to_prec(l, r)) return false;
    }
    return true;
}

bool verify_reflection(u64 p, int N) {
    for (const auto& x : reflection_arguments(p)) {
        auto [l, r] = reflection_sides(p, x, N);
        if (!eq_to_prec(l, r)) return false;
    }
    return true;
}

}  // namespace hgf
