#include "hgf/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hgf/errors.hpp"

namespace hgf {
namespace {

std::int64_t add_ck(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
}

std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
    return r;
}

void require_same(std::uint32_t a, std::uint32_t b) {
    if (a != b) throw ConductorMismatch(a, b);
}

using Poly128 = std::vector<__int128>;

// Exact quotient of num by a monic divisor.
Poly128 divide_exact(const Poly128& num, const std::vector<std::int64_t>& monic) {
    std::size_t dn = num.size() - 1, dd = monic.size() - 1;
    Poly128 rem = num;
    Poly128 quot(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
        __int128 q = rem[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (std::size_t k = 0; k <= dd; ++k) rem[i - dd + k] -= q * monic[k];
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (rem[i] != 0) throw Error("cyclotomic division left a remainder");
    }
    return quot;
}

struct SparseModulus {
    std::size_t degree;
    std::vector<std::pair<std::size_t, std::int64_t>> lower;  // nonzero terms below the leading one
};

const SparseModulus& sparse_modulus(std::uint32_t m) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<SparseModulus>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot) {
        const auto& phi = cyclotomic_poly(m);
        auto sm = std::make_unique<SparseModulus>();
        sm->degree = phi.degree();
        for (std::size_t k = 0; k < sm->degree; ++k) {
            if (phi.coeffs[k] != 0) sm->lower.emplace_back(k, phi.coeffs[k]);
        }
        slot = std::move(sm);
    }
    return *slot;
}

}  // namespace

const CyclotomicPoly& cyclotomic_poly(std::int64_t m) {
    if (m < 1 || m > 10000) throw ConductorTooLarge(m);
    static std::recursive_mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<CyclotomicPoly>> cache;
    std::lock_guard lock(mu);
    auto key = static_cast<std::uint32_t>(m);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;

    Poly128 q(key + 1, 0);
    q[0] = -1;
    q[key] = 1;
    // Larger divisors first keeps the intermediate quotients short.
    for (std::uint32_t d = key / 2; d >= 1; --d) {
        if (key % d == 0) q = divide_exact(q, cyclotomic_poly(d).coeffs);
    }
    auto phi = std::make_unique<CyclotomicPoly>();
    phi->m = key;
    for (__int128 c : q) {
        if (c > INT64_MAX || c < INT64_MIN) throw CoefficientOverflow();
        phi->coeffs.push_back(static_cast<std::int64_t>(c));
    }
    return *(cache[key] = std::move(phi));
}

std::uint32_t euler_phi(std::uint32_t m) {
    std::uint32_t result = m;
    for (std::uint32_t q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        while (m % q == 0) m /= q;
        result -= result / q;
    }
    if (m > 1) result -= result / m;
    return result;
}

GroupRingElem::GroupRingElem(std::uint32_t m) : m_(m), c_(m, 0) {
    if (m == 0) throw ConductorTooLarge(0);
}

GroupRingElem GroupRingElem::constant(std::uint32_t m, std::int64_t c) {
    GroupRingElem e(m);
    e.c_[0] = c;
    return e;
}

GroupRingElem GroupRingElem::monomial(std::uint32_t m, std::int64_t k, std::int64_t c) {
    GroupRingElem e(m);
    e.c_[e.index(k)] = c;
    return e;
}

std::size_t GroupRingElem::index(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(m_);
    return static_cast<std::size_t>(r < 0 ? r + m_ : r);
}

bool GroupRingElem::is_zero() const {
    for (auto c : c_) {
        if (c != 0) return false;
    }
    return true;
}

void GroupRingElem::add_term(std::int64_t k, std::int64_t c) {
    auto& slot = c_[index(k)];
    slot = add_ck(slot, c);
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
    require_same(m_, o.m_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = add_ck(c_[i], o.c_[i]);
    return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) { return *this += -o; }

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    GroupRingElem r = *this;
    return r += o;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    GroupRingElem r = *this;
    return r -= o;
}

GroupRingElem GroupRingElem::operator-() const { return *this * std::int64_t{-1}; }

GroupRingElem GroupRingElem::operator*(std::int64_t s) const {
    GroupRingElem r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mul_ck(c_[i], s);
    return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    require_same(m_, o.m_);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j] != 0) nz.push_back(j);
    }
    GroupRingElem r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j : nz) {
            std::size_t k = i + j;
            if (k >= m_) k -= m_;
            r.c_[k] = add_ck(r.c_[k], mul_ck(c_[i], o.c_[j]));
        }
    }
    return r;
}

GroupRingElem GroupRingElem::times_monomial(std::int64_t k) const {
    GroupRingElem r(m_);
    std::size_t shift = index(k);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::size_t t = i + shift;
        if (t >= m_) t -= m_;
        r.c_[t] = c_[i];
    }
    return r;
}

GroupRingElem GroupRingElem::embed(std::uint32_t M) const {
    if (M % m_ != 0) throw ConductorMismatch(m_, M);
    GroupRingElem r(M);
    std::size_t step = M / m_;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * step] = c_[i];
    return r;
}

GroupRingElem reduce(const GroupRingElem& e) {
    const auto& mod = sparse_modulus(e.conductor());
    std::vector<std::int64_t> c(e.coeffs().begin(), e.coeffs().end());
    std::size_t d = mod.degree;
    for (std::size_t i = c.size(); i-- > d;) {
        std::int64_t q = c[i];
        if (q == 0) continue;
        c[i] = 0;
        std::size_t base = i - d;
        for (const auto& [k, a] : mod.lower) c[base + k] = add_ck(c[base + k], -mul_ck(q, a));
    }
    GroupRingElem r(e.conductor());
    for (std::size_t i = 0; i < d; ++i) r.add_term(static_cast<std::int64_t>(i), c[i]);
    return r;
}

bool equal_in_ring(const GroupRingElem& a, const GroupRingElem& b) {
    return reduce(a - b).is_zero();
}

std::optional<std::int64_t> as_rational(const GroupRingElem& e) {
    GroupRingElem r = reduce(e);
    auto c = r.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] != 0) return std::nullopt;
    }
    return c[0];
}

std::string to_string(const GroupRingElem& e) {
    GroupRingElem r = reduce(e);
    auto c = r.coeffs();
    std::size_t n = c.size();
    while (n > 1 && c[n - 1] == 0) --n;
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << c[i];
    os << ']';
    return os.str();
}

CycScaled::CycScaled(GroupRingElem n, std::int64_t d) : num(std::move(n)), den(d) {
    if (d <= 0) throw Error("CycScaled denominator must be positive");
}

CycScaled CycScaled::operator+(const CycScaled& o) const {
    std::int64_t g = std::gcd(den, o.den);
    return CycScaled(num * (o.den / g) + o.num * (den / g), mul_ck(den / g, o.den));
}

CycScaled CycScaled::operator*(const CycScaled& o) const {
    return CycScaled(num * o.num, mul_ck(den, o.den));
}

bool equal_in_ring(const CycScaled& a, const CycScaled& b) {
    return equal_in_ring(a.num * b.den, b.num * a.den);
}

std::string to_string(const CycScaled& e) { return to_string(e.num) + "/" + std::to_string(e.den); }

}  // namespace hgf
