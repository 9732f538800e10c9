#include "hgf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hgf/charsums.hpp"
#include "hgf/errors.hpp"
#include "hgf/ff_chars.hpp"
#include "hgf/gseries.hpp"
#include "hgf/modarith.hpp"

namespace hgf {

using mod::u64;

void VerifyReport::check(bool ok, std::string inputs, std::string lhs, std::string rhs) {
    ++cases;
    if (!ok) failures.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
}

void VerifyReport::merge(const VerifyReport& other, const std::string& tag) {
    cases += other.cases;
    for (const auto& f : other.failures) failures.push_back({tag + " " + f.inputs, f.lhs, f.rhs});
}

namespace {

constexpr u64 kRerunMaxPrime = 13;
constexpr int kRerunPrecision = 6;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerifyReport blank(const std::string& name, u64 p, int N) {
    VerifyReport r;
    r.identity = name;
    r.p = p;
    r.precision = N;
    return r;
}

using Body = std::function<void(VerifyReport&, u64 p, int N)>;

// Runs body at N and, for small primes, once more at the higher precision.
VerifyReport run_padic(const std::string& name, u64 p, int N, const VerifyOptions& opt, const Body& body) {
    auto start = Clock::now();
    VerifyReport r = blank(name, p, N);
    body(r, p, N);
    if (opt.high_precision_rerun && p <= kRerunMaxPrime && N < kRerunPrecision) {
        VerifyReport high = blank(name, p, kRerunPrecision);
        body(high, p, kRerunPrecision);
        r.merge(high, "[N=" + std::to_string(kRerunPrecision) + "]");
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyReport run_exact(const std::string& name, u64 p, const std::function<void(VerifyReport&)>& body) {
    auto start = Clock::now();
    VerifyReport r = blank(name, p, 0);
    body(r);
    r.elapsed_ms = ms_since(start);
    return r;
}

PadicNum as_padic(std::int64_t c, u64 p, int N) { return PadicNum::from_integer(c, p, N); }

// Gamma_p(1/4) Gamma_p(3/4) from the gamma source.
PadicNum quarter_product(u64 p, int N, const VerifyOptions& opt) {
    GammaTable t = opt.gamma(p, N, {Rational(1, 4), Rational(3, 4)});
    if (t.precision() > N) t = t.truncated(N);
    return t.at(Rational(1, 4)) * t.at(Rational(3, 4));
}

GammaTable gamma_table(u64 p, int K, const std::vector<Rational>& args, const VerifyOptions& opt) {
    GammaTable t = opt.gamma(p, K, args);
    if (t.precision() < K) throw PrecisionExhausted("gamma table below requested precision");
    return t.precision() > K ? t.truncated(K) : t;
}

// Both square roots of a nonzero square, smaller first.
std::vector<std::uint32_t> both_roots(const FieldCtx& ctx, std::int64_t x) {
    auto a = square_root(ctx, x);
    if (!a) return {};
    std::uint32_t b = ctx.elem(-static_cast<std::int64_t>(*a));
    return *a == b ? std::vector<std::uint32_t>{*a} : std::vector{std::min(*a, b), std::max(*a, b)};
}

int phi(const FieldCtx& ctx, std::int64_t x) { return quadratic_residue_class(ctx, x); }

// phi(1 + a) + phi(1 - a)
int pair_sum(const FieldCtx& ctx, std::int64_t a) { return phi(ctx, 1 + a) + phi(ctx, 1 - a); }

std::string kv(std::initializer_list<std::pair<const char*, std::int64_t>> items) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : items) {
        os << (first ? "" : " ") << k << '=' << v;
        first = false;
    }
    return os.str();
}

void check_padic(VerifyReport& r, const PadicNum& lhs, const PadicNum& rhs, std::string inputs) {
    bool ok = eq_to_prec(lhs, rhs);
    r.check(ok, std::move(inputs), ok ? "" : lhs.to_string(), ok ? "" : rhs.to_string());
}

bool skip(const std::optional<std::int64_t>& only, u64 p, std::uint32_t v) {
    if (!only) return false;
    const auto pp = static_cast<std::int64_t>(p);
    return ((*only % pp) + pp) % pp != v;
}

bool filtered(const VerifyOptions& opt) { return opt.only_t || opt.only_x; }

void check_branch_total(VerifyReport& r, std::uint64_t expected, const VerifyOptions& opt) {
    if (filtered(opt)) return;
    std::uint64_t total = 0;
    for (const auto& [_, n] : r.branches) total += n;
    r.check(total == expected, "branch partition", std::to_string(total), std::to_string(expected));
}

void require_one_mod_four(u64 p, const char* what) {
    if (p % 4 != 1) throw Error(std::string(what) + " needs p = 1 mod 4");
}

// ---- classical series ----

double hyp2f1_series(double a, double b, double c, double z, double tol) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 1000000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
        sum += term;
        if (std::abs(term) < tol / 10) break;
    }
    return sum;
}

}  // namespace

VerifyReport verify_sv1(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("sv1", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        GSeries series(g22_params(Lower::Half), p, N, opt.gamma);
        const PadicNum inv = quarter_product(p, N, opt).inverse();
        const int phim1 = phi(ctx, -1);
        for (std::uint32_t t = 1; t < p; ++t) {
            if (skip(opt.only_t, p, t)) continue;
            const PadicNum v = series.value(t).value;
            if (t == 1) {
                ++r.branches["value-1"];
                check_padic(r, v, as_padic(-phim1, p, N) * inv, kv({{"t", t}}));
                continue;
            }
            const std::uint32_t q = ctx.div(t - 1, t);
            if (phi(ctx, q) == 1) {
                ++r.branches["value-2"];
                for (auto a : both_roots(ctx, q)) {
                    check_padic(r, v, as_padic(-phim1 * pair_sum(ctx, a), p, N) * inv, kv({{"t", t}, {"a", a}}));
                }
            } else {
                ++r.branches["value-3"];
                check_padic(r, v, PadicNum::zero(p), kv({{"t", t}}));
            }
        }
        check_branch_total(r, p - 1, opt);
    });
}

VerifyReport verify_kummer_transforms(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("kummer", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        GSeries series(g22_params(Lower::Half), p, N, opt.gamma);
        const std::int64_t sign = a0(Rational(1, 4), p) % 2 == 0 ? 1 : -1;
        const PadicNum quarter = as_padic(sign, p, N);
        const int phim1 = phi(ctx, -1);
        for (std::uint32_t x = 2; x < p; ++x) {
            if (skip(opt.only_x, p, x)) continue;
            const std::uint32_t y = ctx.elem(1 - static_cast<std::int64_t>(x));
            const PadicNum g1 = series.value(ctx.inv(x)).value;
            const PadicNum g2 = series.value(ctx.inv(y)).value;
            const bool x_sq = phi(ctx, x) == 1, y_sq = phi(ctx, y) == 1;
            if (!x_sq && !y_sq) {
                ++r.branches["trans-1"];
                check_padic(r, g1, g2, kv({{"x", x}}));
            } else if (x_sq && !y_sq) {
                ++r.branches["trans-2"];
                for (auto b : both_roots(ctx, x)) {
                    check_padic(r, g1, quarter * g2 + as_padic(phim1 * pair_sum(ctx, b), p, N),
                                kv({{"x", x}, {"b", b}}));
                }
            } else if (x_sq && y_sq) {
                ++r.branches["trans-3"];
                for (auto a : both_roots(ctx, y)) {
                    for (auto b : both_roots(ctx, x)) {
                        check_padic(r, as_padic(pair_sum(ctx, b), p, N) * g1,
                                    as_padic(pair_sum(ctx, a), p, N) * g2, kv({{"x", x}, {"a", a}, {"b", b}}));
                    }
                }
            } else {
                ++r.branches["trans-4"];
                for (auto a : both_roots(ctx, y)) {
                    check_padic(r, quarter * g1, g2 - as_padic(phim1 * pair_sum(ctx, a), p, N),
                                kv({{"x", x}, {"a", a}}));
                }
            }
        }
        check_branch_total(r, p - 2, opt);
    });
}

VerifyReport verify_sum1(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("sum1", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        GSeries series(g22_params(Lower::Zero), p, N, opt.gamma);
        std::vector<PadicNum> g(p);
        for (std::uint32_t t = 1; t < p; ++t) g[t] = series.value(t).value;
        const PadicNum inv = quarter_product(p, N, opt).inverse();
        const std::int64_t pp = static_cast<std::int64_t>(p);
        const int phim1 = phi(ctx, -1);
        const PadicNum minus_one = as_padic(-1, p, N);

        for (std::uint32_t x = 1; x < p; ++x) {
            if (skip(opt.only_x, p, x)) continue;
            PadicNum sum = PadicNum::zero(p);
            const std::uint32_t xinv = ctx.inv(x);
            for (std::uint32_t t = 1; t < p; ++t) {
                int w = phi(ctx, static_cast<std::int64_t>(t) * (t - 1));
                if (w != 0) sum += as_padic(w, p, N) * g[ctx.mul(t, xinv)];
            }
            const std::uint32_t y = ctx.elem(1 - static_cast<std::int64_t>(x));
            if (x == 1) {
                ++r.branches["formula-1"];
                check_padic(r, sum, minus_one + as_padic(pp * phim1, p, N) * inv, kv({{"x", x}}));
            } else if (phi(ctx, y) == -1) {
                ++r.branches["formula-2"];
                check_padic(r, sum, minus_one, kv({{"x", x}}));
            } else {
                ++r.branches["formula-3"];
                for (auto a : both_roots(ctx, y)) {
                    r.check(a != 0, kv({{"x", x}, {"a", a}}), "root a = 0", "a nonzero");
                    check_padic(r, sum, minus_one + as_padic(pp * phim1 * pair_sum(ctx, a), p, N) * inv,
                                kv({{"x", x}, {"a", a}}));
                }
            }
        }
        check_branch_total(r, p - 1, opt);
    });
}

VerifyReport verify_sum3(u64 p, const VerifyOptions& opt) {
    require_one_mod_four(p, "sum3");
    return run_exact("sum3", p, [&](VerifyReport& r) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        const std::int64_t pp = static_cast<std::int64_t>(p);
        const std::uint32_t order = ctx.order();
        const std::int64_t q = order / 4;
        for (auto [ja, jb] : {std::pair{q, 3 * q}, std::pair{3 * q, q}}) {
            Greene2F1 f(ctx, ja, jb, 0);
            std::vector<GroupRingElem> values(p, GroupRingElem(order));
            for (std::uint32_t t = 1; t < p; ++t) values[t] = f.scaled_value(t);
            const int chi4_minus_one = char_value(ctx, ja, -1).exponent == 0 ? 1 : -1;
            r.notes.push_back("chi4 = omega^" + std::to_string(ja) + ": chi4(-1) = " +
                              std::to_string(chi4_minus_one));

            for (std::uint32_t x = 1; x < p; ++x) {
                if (skip(opt.only_x, p, x)) continue;
                GroupRingElem sum(order);
                for (std::uint32_t t = 1; t < p; ++t) {
                    int w = phi(ctx, static_cast<std::int64_t>(x) - t);
                    if (w != 0) sum += values[t] * w;
                }
                // Right sides cleared by p(p-1).
                const std::int64_t phix = phi(ctx, x);
                const std::uint32_t y = ctx.elem(1 - static_cast<std::int64_t>(x));
                std::vector<std::pair<std::string, std::int64_t>> expected;
                if (x == 1) {
                    ++r.branches["formula-4"];
                    expected.emplace_back(kv({{"j", ja}, {"x", x}}), (pp - 1) * (1 + chi4_minus_one * pp));
                } else if (phi(ctx, y) == -1) {
                    ++r.branches["formula-5"];
                    expected.emplace_back(kv({{"j", ja}, {"x", x}}), phix * (pp - 1));
                } else {
                    ++r.branches["formula-6"];
                    for (auto a : both_roots(ctx, y)) {
                        r.check(a != 0, kv({{"j", ja}, {"x", x}, {"a", a}}), "root a = 0", "a nonzero");
                        expected.emplace_back(kv({{"j", ja}, {"x", x}, {"a", a}}),
                                              phix * (pp - 1) +
                                                  phix * chi4_minus_one * pair_sum(ctx, a) * pp * (pp - 1));
                    }
                }
                for (const auto& [inputs, rhs] : expected) {
                    bool ok = equal_in_ring(sum, GroupRingElem::constant(order, rhs));
                    r.check(ok, inputs, ok ? "" : to_string(CycScaled(sum, pp * (pp - 1))),
                            ok ? "" : Rational(rhs, pp * (pp - 1)).to_string());
                }
            }
        }
        check_branch_total(r, 2 * (p - 1), opt);
    });
}

VerifyReport verify_pfaff(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("pfaff", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        GSeries series(g22_params(Lower::Half), p, N, opt.gamma);
        for (std::uint32_t x = 2; x < p; ++x) {
            if (skip(opt.only_x, p, x)) continue;
            const PadicNum g1 = series.value(ctx.inv(x)).value;
            const PadicNum g2 = series.value(ctx.div(x - 1, x)).value;
            const std::uint32_t y = ctx.elem(1 - static_cast<std::int64_t>(x));
            if (phi(ctx, y) == -1) {
                ++r.branches["paf-1"];
                check_padic(r, g1, g2, kv({{"x", x}}));
                r.check(g1.is_zero() && g2.is_zero(), kv({{"x", x}}) + " both zero", g1.to_string(),
                        g2.to_string());
            } else {
                ++r.branches["paf-2"];
                for (auto a : both_roots(ctx, y)) {
                    r.check(a != 1 && a != p - 1, kv({{"x", x}, {"a", a}}), "a = +-1", "a != +-1");
                    const std::int64_t left = phi(ctx, a) * (phi(ctx, a + 1) + phi(ctx, static_cast<std::int64_t>(a) - 1));
                    check_padic(r, as_padic(left, p, N) * g1, as_padic(pair_sum(ctx, a), p, N) * g2,
                                kv({{"x", x}, {"a", a}}));
                }
            }
        }
        check_branch_total(r, p - 2, opt);
    });
}

VerifyReport verify_prop1(u64 p, const VerifyOptions& opt) {
    return run_exact("prop1", p, [&](VerifyReport& r) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        GaussTable table(ctx);
        TripleProductSum sum(table);
        const std::int64_t pp = static_cast<std::int64_t>(p);
        const std::int64_t base = pp * (pp - 1) * phi(ctx, -2);
        for (std::uint32_t x = 1; x < p; ++x) {
            if (skip(opt.only_x, p, x)) continue;
            std::optional<std::int64_t> value = as_rational(sum.element(x));
            const std::uint32_t y = ctx.elem(1 - static_cast<std::int64_t>(x));
            std::vector<std::pair<std::string, std::int64_t>> expected;
            if (x == 1) {
                ++r.branches["x=1"];
                expected.emplace_back(kv({{"x", x}}), base);
            } else if (phi(ctx, y) == -1) {
                ++r.branches["zero"];
                expected.emplace_back(kv({{"x", x}}), 0);
            } else {
                ++r.branches["square"];
                for (auto a : both_roots(ctx, y)) expected.emplace_back(kv({{"x", x}, {"a", a}}), base * pair_sum(ctx, a));
            }
            for (const auto& [inputs, rhs] : expected) {
                bool ok = value && *value == rhs;
                r.check(ok, inputs, value ? std::to_string(*value) : to_string(sum.element(x)),
                        std::to_string(rhs));
            }
        }
        check_branch_total(r, p - 1, opt);
    });
}

VerifyReport verify_prop2(u64 p, int N, const VerifyOptions& opt) {
    FieldCtx ctx(static_cast<std::int64_t>(p));
    GaussTable table(ctx);
    TripleProductSum sum(table);
    std::vector<std::int64_t> values(p, 0);
    for (std::uint32_t x = 1; x < p; ++x) values[x] = sum.value(x);

    return run_padic("prop2", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        GSeries series(g22_params(Lower::Half), p, N, opt.gamma);
        const std::int64_t pp = static_cast<std::int64_t>(p);
        const PadicNum factor = as_padic(pp * (1 - pp) * phi(ctx, 2), p, N) * quarter_product(p, N, opt);
        for (std::uint32_t x = 1; x < p; ++x) {
            if (skip(opt.only_x, p, x)) continue;
            check_padic(r, as_padic(values[x], p, N), factor * series.value(ctx.inv(x)).value, kv({{"x", x}}));
            r.check(values[x] % pp == 0, kv({{"x", x}}) + " p | A(x)", std::to_string(values[x]), "0 mod p");
        }
    });
}

VerifyReport verify_lemma1(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("lemma1", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        const std::int64_t order = static_cast<std::int64_t>(p) - 1;
        std::vector<Rational> args;
        for (std::int64_t j = 0; j <= order; ++j) args.emplace_back(j, order);
        GammaTable table = gamma_table(p, N, args, opt);
        std::vector<PadicNum> lhs(order);
        for (std::int64_t j = 1; j < order; ++j) {
            const Rational s(j, order);
            lhs[j] = table.at(frac(Rational(1) - s)) * table.at(s);
            check_padic(r, lhs[j], as_padic(j % 2 == 0 ? -1 : 1, p, N), kv({{"j", j}}));
        }
        for (std::int64_t j = 1; j < order; ++j) {
            check_padic(r, lhs[j], lhs[order - j], kv({{"j", j}}) + " symmetric");
        }
    });
}

VerifyReport verify_lemma2(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("lemma2", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        const std::int64_t order = static_cast<std::int64_t>(p) - 1;
        const int K = N + 1;
        const Rational half(1, 2);
        std::vector<Rational> args{half};
        for (std::int64_t j = 0; j <= order; ++j) {
            args.push_back(frac(half + Rational(j, order)));
            args.push_back(frac(Rational(1) - Rational(j, order)));
        }
        GammaTable table = gamma_table(p, K, args, opt);
        const PadicNum inv_half = table.at(half).inverse();
        std::vector<PadicNum> lifts(p);
        for (std::uint32_t t = 1; t < p; ++t) lifts[t] = teichmuller(ctx, -static_cast<std::int64_t>(t), K).inverse();

        for (std::int64_t j = 1; j < order; ++j) {
            r.check(j >= 1 && j <= order - 1, kv({{"j", j}}) + " domain", "", "");
            const Rational s(j, order);
            const std::int64_t f = (half + s).floor();
            PadicNum u = inv_half * table.at(frac(half + s)) * table.at(frac(Rational(1) - s));
            u = u.shifted(static_cast<int>(-f));
            if (f % 2 != 0) u = -u;

            PadicNum sum = PadicNum::zero(p);
            for (std::uint32_t t = 1; t < p; ++t) {
                int w = phi(ctx, static_cast<std::int64_t>(t) * (t - 1));
                if (w != 0) sum += as_padic(w, p, K) * lifts[t].pow(j);
            }
            check_padic(r, u.truncated(N), sum.shifted(-1).truncated(N), kv({{"j", j}}));
        }
    });
}

VerifyReport verify_g_f_bridge(u64 p, int N, const VerifyOptions& opt) {
    require_one_mod_four(p, "bridge");
    return run_padic("bridge", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        const std::int64_t q = ctx.order() / 4;
        Greene2F1 f(ctx, q, 3 * q, 0);
        GSeries series(g22_params(Lower::Zero), p, N, opt.gamma);
        const PadicNum minus_p = as_padic(-static_cast<std::int64_t>(p), p, N + 1);
        std::vector<PadicNum> lhs(p), rhs(p);
        for (std::uint32_t u = 1; u < p; ++u) {
            lhs[u] = series.value(u).value;
            rhs[u] = minus_p * cyc_to_padic(f.value(u), ctx, N + 1);
        }

        std::vector<std::pair<std::uint32_t, std::uint32_t>> grid;
        for (std::uint32_t t = 1; t < p; ++t) {
            for (std::uint32_t x = 1; x < p; ++x) {
                if (!skip(opt.only_t, p, t) && !skip(opt.only_x, p, x)) grid.emplace_back(t, x);
            }
        }
        if (opt.bridge_sample && *opt.bridge_sample < grid.size()) {
            std::mt19937_64 rng(0x5eed0000 + p);
            std::shuffle(grid.begin(), grid.end(), rng);
            grid.resize(*opt.bridge_sample);
            std::sort(grid.begin(), grid.end());
        }
        for (auto [t, x] : grid) {
            check_padic(r, lhs[ctx.div(t, x)], rhs[ctx.div(x, t)].truncated(N), kv({{"t", t}, {"x", x}}));
        }
    });
}

VerifyReport verify_zero_locus(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("zero_locus", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        const std::set<std::uint32_t> zeros = zero_locus(p, N, opt.gamma);

        std::vector<bool> is_square(p, false);
        for (std::uint64_t y = 0; y < p; ++y) is_square[y * y % p] = true;
        std::set<std::uint32_t> nonsquare, predicted;
        for (std::uint32_t t = 2; t < p; ++t) {
            const std::uint32_t q = ctx.div(t - 1, t);
            if (!is_square[q]) {
                nonsquare.insert(t);
                predicted.insert(t);
            } else if (pair_sum(ctx, both_roots(ctx, q).front()) == 0) {
                predicted.insert(t);
            }
        }
        r.branches["nonsquare"] = nonsquare.size();
        r.branches["square, vanishing pair sum"] = predicted.size() - nonsquare.size();
        r.check(nonsquare.size() == (p - 1) / 2, "nonsquare count", std::to_string(nonsquare.size()),
                std::to_string((p - 1) / 2));
        r.check(!zeros.count(1), "t=1 outside the locus", "", "");
        r.check(std::includes(zeros.begin(), zeros.end(), nonsquare.begin(), nonsquare.end()),
                "nonsquare criterion inside the locus", "", "");
        auto render = [](const std::set<std::uint32_t>& s) {
            std::ostringstream os;
            os << '{';
            for (auto it = s.begin(); it != s.end(); ++it) os << (it == s.begin() ? "" : ",") << *it;
            os << '}';
            return os.str();
        };
        r.check(zeros == predicted, "locus", render(zeros), render(predicted));
        if (zeros.size() != nonsquare.size()) {
            r.notes.push_back(std::to_string(zeros.size() - nonsquare.size()) +
                              " zeros come from the square branch with phi(1+a)+phi(1-a)=0");
        }
    });
}

VerifyReport verify_inverse(u64 p) {
    return run_exact("inverse", p, [&](VerifyReport& r) {
        GaussTable table{FieldCtx(static_cast<std::int64_t>(p))};
        for (std::int64_t j = 0; j < table.field().order(); ++j) {
            r.check(check_inverse_relation(table, j), kv({{"j", j}}));
        }
    });
}

VerifyReport verify_gauss_jacobi(u64 p) {
    return run_exact("gauss_jacobi", p, [&](VerifyReport& r) {
        GaussTable table{FieldCtx(static_cast<std::int64_t>(p))};
        const std::int64_t order = table.field().order();
        for (std::int64_t j1 = 0; j1 < order; ++j1) {
            for (std::int64_t j2 = 0; j2 < order; ++j2) r.check(check_gauss_jacobi(table, j1, j2), kv({{"j1", j1}, {"j2", j2}}));
        }
    });
}

VerifyReport verify_hasse_davenport(u64 p) {
    return run_exact("hasse_davenport", p, [&](VerifyReport& r) {
        GaussTable table{FieldCtx(static_cast<std::int64_t>(p))};
        const std::int64_t order = table.field().order();
        std::uint64_t displayed = 0;
        for (std::int64_t j = 0; j < order; ++j) {
            auto hd = verify_hasse_davenport(table, 2, j);
            r.check(hd.classical, kv({{"m", 2}, {"psi", j}}));
            displayed += hd.displayed ? 1 : 0;
        }
        r.branches["product to i=m-1 holds"] = r.cases - r.failures.size();
        r.notes.push_back("product to i=m holds for " + std::to_string(displayed) + " of " +
                          std::to_string(order) + " characters psi");
    });
}

VerifyReport verify_binomial_relations(u64 p) {
    return run_exact("binomial", p, [&](VerifyReport& r) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        const std::int64_t order = ctx.order();
        const std::int64_t pp = static_cast<std::int64_t>(p);
        for (std::int64_t j = 0; j < order; ++j) {
            const CycScaled expected(GroupRingElem::constant(order, j == 0 ? pp - 2 : -1), pp);
            r.check(equal_in_ring(binomial(ctx, j, 0), expected), kv({{"chi", j}}) + " (chi choose eps)");
            r.check(equal_in_ring(binomial(ctx, j, j), expected), kv({{"chi", j}}) + " (chi choose chi)");
        }
        for (std::int64_t j = 0; j < order; ++j) {
            for (std::int64_t k = 0; k < order; ++k) {
                CycScaled right = binomial(ctx, k - j, k);
                right.num = right.num.times_monomial(char_value(ctx, k, -1).exponent);
                r.check(equal_in_ring(binomial(ctx, j, k), right), kv({{"chi", j}, {"psi", k}}));
            }
        }
    });
}

VerifyReport verify_orthogonality(u64 p) {
    return run_exact("orthogonality", p, [&](VerifyReport& r) {
        FieldCtx ctx(static_cast<std::int64_t>(p));
        for (std::uint32_t x = 0; x < p; ++x) {
            auto expected = GroupRingElem::constant(ctx.order(), x == 1 ? ctx.order() : 0);
            r.check(equal_in_ring(orthogonality_sum(ctx, x), expected), kv({{"x", x}}));
        }
    });
}

VerifyReport verify_prod1_report(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("prod1", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        for (u64 m : {2, 3, 4}) {
            if (m % p == 0) continue;
            for (std::uint32_t rr = 0; rr <= p - 1; ++rr) {
                auto [lhs, rhs] = prod1_sides(p, m, rr, N);
                check_padic(r, lhs, rhs, kv({{"m", static_cast<std::int64_t>(m)}, {"r", rr}}));
            }
        }
    });
}

VerifyReport verify_prod2_report(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("prod2", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        for (u64 t : {2, 3, 4}) {
            if (t % p == 0) continue;
            for (std::uint32_t j = 0; j + 1 < p; ++j) {
                auto [lhs, rhs] = prod2_sides(p, t, j, N);
                check_padic(r, lhs, rhs, kv({{"t", static_cast<std::int64_t>(t)}, {"j", j}}));
            }
        }
    });
}

VerifyReport verify_reflection_report(u64 p, int N, const VerifyOptions& opt) {
    return run_padic("reflection", p, N, opt, [&](VerifyReport& r, u64 p, int N) {
        for (const auto& x : reflection_arguments(p)) {
            auto [lhs, rhs] = reflection_sides(p, x, N);
            check_padic(r, lhs, rhs, "x=" + x.to_string());
        }
    });
}

VerifyReport verify_gamma_recurrence(u64 p, int N) {
    return run_exact("gamma_recurrence", p, [&](VerifyReport& r) {
        r.precision = N;
        const u64 modulus = mod::ipow_checked(p, N);
        const u64 bound = p * p * p;
        u64 prev = gamma_p_int(0, p, N);
        for (u64 m = 0; m < bound; ++m) {
            const u64 next = gamma_p_int(m + 1, p, N);
            const u64 factor = m % p == 0 ? 1 % modulus : m % modulus;
            const u64 expected = mod::negmod(mod::mulmod(factor, prev, modulus), modulus);
            if (next != expected) {
                r.check(false, kv({{"m", static_cast<std::int64_t>(m)}}), std::to_string(next), std::to_string(expected));
            } else {
                ++r.cases;
            }
            prev = next;
        }
    });
}

VerifyReport verify_gamma_stability(u64 p, int N) {
    return run_exact("gamma_stability", p, [&](VerifyReport& r) {
        r.precision = N;
        for (const auto& x : sweep_gamma_arguments(p)) {
            PadicNum a = gamma_p_rational(x, p, N, kGammaGuardDigits);
            PadicNum b = gamma_p_rational(x, p, N, kGammaGuardDigits + 2);
            check_padic(r, a, b, "x=" + x.to_string());
        }
    });
}

VerifyReport verify_teichmuller(u64 p, int N) {
    return run_exact("teichmuller", p, [&](VerifyReport& r) {
        r.precision = N;
        std::vector<PadicNum> lift(p);
        for (u64 x = 1; x < p; ++x) {
            lift[x] = teichmuller_lift(x, p, N);
            r.check(lift[x].residue(1) == x, kv({{"x", static_cast<std::int64_t>(x)}}) + " residue");
            check_padic(r, lift[x].pow(static_cast<std::int64_t>(p) - 1), as_padic(1, p, N),
                        kv({{"x", static_cast<std::int64_t>(x)}}) + " order");
        }
        for (u64 x = 1; x < p; ++x) {
            for (u64 y = 1; y < p; ++y) {
                check_padic(r, lift[x] * lift[y], lift[x * y % p],
                            kv({{"x", static_cast<std::int64_t>(x)}, {"y", static_cast<std::int64_t>(y)}}));
            }
        }
    });
}

VerifyReport classical_sanity(double tol) {
    return run_exact("classical", 0, [&](VerifyReport& r) {
        auto compare = [&](const std::string& name, double lhs, double rhs) {
            std::ostringstream l, rr;
            l.precision(17);
            rr.precision(17);
            l << lhs;
            rr << rhs;
            r.check(std::abs(lhs - rhs) <= tol, name, l.str(), rr.str());
        };
        {
            const double a = 0.5, z = 0.25;
            compare("dg-1 z=0.25", hyp2f1_series(a / 2, (a + 1) / 2, a + 1, z, tol),
                    std::pow((1 + std::sqrt(1 - z)) / 2, -a));
            compare("dg-2 z=0.25", hyp2f1_series(a / 2, (a + 1) / 2, 0.5, z, tol),
                    (std::pow(1 - std::sqrt(z), -a) + std::pow(1 + std::sqrt(z), -a)) / 2);
        }
        {
            const double z = 0.3;
            compare("pfaff z=0.3", hyp2f1_series(0.25, 0.75, 0.5, z, tol),
                    std::pow(1 - z, -0.25) * hyp2f1_series(0.25, -0.25, 0.5, z / (z - 1), tol));
        }
        {
            const double a = 0.25, b = 0.75, c = 0.5, z = 0.4;
            const double first = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b)) *
                                 hyp2f1_series(a, b, 1 + a + b - c, 1 - z, tol);
            const double second = std::tgamma(c) * std::tgamma(a + b - c) / (std::tgamma(a) * std::tgamma(b)) *
                                  std::pow(1 - z, c - a - b) * hyp2f1_series(c - a, c - b, 1 + c - a - b, 1 - z, tol);
            compare("kummer-transformation z=0.4", hyp2f1_series(a, b, c, z, tol), first + second);
        }
    });
}

std::vector<Rational> sweep_gamma_arguments(u64 p) {
    std::vector<Rational> args = reflection_arguments(p);
    for (Lower lower : {Lower::Half, Lower::Zero}) {
        auto more = gamma_arguments(g22_params(lower), p);
        args.insert(args.end(), more.begin(), more.end());
    }
    const std::int64_t order = static_cast<std::int64_t>(p) - 1;
    for (std::int64_t j = 0; j <= order; ++j) args.push_back(frac(Rational(1, 2) + Rational(j, order)));
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    return args;
}

namespace {

bool always(u64) { return true; }
bool one_mod_four(u64 p) { return p % 4 == 1; }

std::vector<Verifier> build_registry() {
    using O = const VerifyOptions&;
    std::vector<Verifier> v{
        {"binomial", false, always, [](u64 p, int, O) { return verify_binomial_relations(p); }},
        {"bridge", false, one_mod_four, [](u64 p, int N, O o) { return verify_g_f_bridge(p, N, o); }},
        {"classical", true, always, [](u64, int, O) { return classical_sanity(1e-10); }},
        {"gamma_recurrence", false, always, [](u64 p, int N, O) { return verify_gamma_recurrence(p, N); }},
        {"gamma_stability", false, always, [](u64 p, int N, O) { return verify_gamma_stability(p, N); }},
        {"gauss_jacobi", false, always, [](u64 p, int, O) { return verify_gauss_jacobi(p); }},
        {"hasse_davenport", false, always, [](u64 p, int, O) { return verify_hasse_davenport(p); }},
        {"inverse", false, always, [](u64 p, int, O) { return verify_inverse(p); }},
        {"kummer", false, always, [](u64 p, int N, O o) { return verify_kummer_transforms(p, N, o); }},
        {"lemma1", false, always, [](u64 p, int N, O o) { return verify_lemma1(p, N, o); }},
        {"lemma2", false, always, [](u64 p, int N, O o) { return verify_lemma2(p, N, o); }},
        {"orthogonality", false, always, [](u64 p, int, O) { return verify_orthogonality(p); }},
        {"pfaff", false, always, [](u64 p, int N, O o) { return verify_pfaff(p, N, o); }},
        {"prod1", false, always, [](u64 p, int N, O o) { return verify_prod1_report(p, N, o); }},
        {"prod2", false, always, [](u64 p, int N, O o) { return verify_prod2_report(p, N, o); }},
        {"prop1", false, always, [](u64 p, int, O o) { return verify_prop1(p, o); }},
        {"prop2", false, always, [](u64 p, int N, O o) { return verify_prop2(p, N, o); }},
        {"reflection", false, always, [](u64 p, int N, O o) { return verify_reflection_report(p, N, o); }},
        {"sum1", false, always, [](u64 p, int N, O o) { return verify_sum1(p, N, o); }},
        {"sum3", false, one_mod_four, [](u64 p, int, O o) { return verify_sum3(p, o); }},
        {"sv1", false, always, [](u64 p, int N, O o) { return verify_sv1(p, N, o); }},
        {"teichmuller", false, always, [](u64 p, int N, O) { return verify_teichmuller(p, N); }},
        {"zero_locus", false, always, [](u64 p, int N, O o) { return verify_zero_locus(p, N, o); }},
    };
    std::sort(v.begin(), v.end(), [](const Verifier& a, const Verifier& b) { return a.name < b.name; });
    return v;
}

}  // namespace

const std::vector<Verifier>& verifier_registry() {
    static const std::vector<Verifier> registry = build_registry();
    return registry;
}

const Verifier* find_verifier(const std::string& name) {
    for (const auto& v : verifier_registry()) {
        if (v.name == name) return &v;
    }
    return nullptr;
}

}  // namespace hgf
