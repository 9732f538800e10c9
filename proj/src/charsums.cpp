#include "hgf/charsums.hpp"

#include "hgf/errors.hpp"

namespace hgf {
namespace {

// Exponent e of chi(x) = zeta_{p-1}^e for chi = omega^j; x must be nonzero.
std::int64_t char_exponent(const FieldCtx& ctx, std::int64_t j, std::uint32_t x) {
    return static_cast<std::int64_t>(char_value(ctx, j, x).exponent);
}

std::int64_t minus_one_exponent(const FieldCtx& ctx, std::int64_t j) {
    return char_exponent(ctx, j, ctx.p() - 1);
}

}  // namespace

GroupRingElem gauss_sum(const FieldCtx& ctx, std::int64_t j) {
    const std::uint32_t p = ctx.p();
    GroupRingElem g(gauss_conductor(ctx));
    for (std::uint32_t x = 1; x < p; ++x) {
        std::int64_t e = static_cast<std::int64_t>(p) * char_exponent(ctx, j, x) +
                         static_cast<std::int64_t>(p - 1) * x;
        g.add_term(e, 1);
    }
    return g;
}

GaussTable::GaussTable(FieldCtx ctx) : ctx_(std::move(ctx)) {
    g_.reserve(ctx_.order());
    for (std::uint32_t j = 0; j < ctx_.order(); ++j) g_.push_back(gauss_sum(ctx_, j));
}

GroupRingElem GaussTable::root_of_unity(std::int64_t e) const {
    return GroupRingElem::monomial(conductor(), static_cast<std::int64_t>(ctx_.p()) * e);
}

GroupRingElem jacobi_sum(const FieldCtx& ctx, std::int64_t j, std::int64_t k) {
    GroupRingElem J(ctx.order());
    for (std::uint32_t y = 2; y < ctx.p(); ++y) {
        J.add_term(char_exponent(ctx, j, y) + char_exponent(ctx, k, ctx.p() + 1 - y), 1);
    }
    return J;
}

CycScaled binomial(const FieldCtx& ctx, std::int64_t jA, std::int64_t jB) {
    GroupRingElem num = jacobi_sum(ctx, jA, -jB).times_monomial(minus_one_exponent(ctx, jB));
    return CycScaled(std::move(num), ctx.p());
}

Greene2F1::Greene2F1(const FieldCtx& ctx, std::int64_t jA, std::int64_t jB, std::int64_t jC)
    : ctx_(ctx) {
    terms_.reserve(ctx.order());
    for (std::int64_t c = 0; c < ctx.order(); ++c) {
        // (A chi choose chi) (B chi choose C chi), with the 1/p^2 pulled out.
        GroupRingElem first = jacobi_sum(ctx, jA + c, -c).times_monomial(minus_one_exponent(ctx, c));
        GroupRingElem second =
            jacobi_sum(ctx, jB + c, -(jC + c)).times_monomial(minus_one_exponent(ctx, jC + c));
        terms_.push_back(first * second);
    }
}

GroupRingElem Greene2F1::scaled_value(std::int64_t t) const {
    GroupRingElem acc(ctx_.order());
    std::uint32_t tt = ctx_.elem(t);
    if (tt == 0) return acc;
    for (std::int64_t c = 0; c < ctx_.order(); ++c) {
        acc += terms_[c].times_monomial(char_exponent(ctx_, c, tt));
    }
    return acc;
}

CycScaled Greene2F1::value(std::int64_t t) const {
    return CycScaled(scaled_value(t), static_cast<std::int64_t>(ctx_.p()) * ctx_.order());
}

CycScaled greene_2f1(const FieldCtx& ctx, std::int64_t jA, std::int64_t jB, std::int64_t jC,
                     std::int64_t t) {
    return Greene2F1(ctx, jA, jB, jC).value(t);
}

TripleProductSum::TripleProductSum(const GaussTable& table) : table_(&table) {
    const auto& ctx = table.field();
    const std::int64_t h = ctx.quadratic_exponent();
    products_.reserve(ctx.order());
    for (std::int64_t j = 0; j < ctx.order(); ++j) {
        products_.push_back(table(h + 2 * j) * table(h - j) * table(-j));
    }
}

GroupRingElem TripleProductSum::element(std::int64_t x) const {
    const auto& ctx = table_->field();
    std::uint32_t xx = ctx.elem(x);
    if (xx == 0) throw ZeroArgument("A(x) is defined for x in F_p^x");
    std::uint32_t arg = ctx.div(xx, 4 % ctx.p());
    GroupRingElem acc(table_->conductor());
    for (std::int64_t j = 0; j < ctx.order(); ++j) {
        acc += products_[j].times_monomial(static_cast<std::int64_t>(ctx.p()) *
                                           char_exponent(ctx, j, arg));
    }
    return acc;
}

std::int64_t TripleProductSum::value(std::int64_t x) const {
    auto r = as_rational(element(x));
    if (!r) {
        throw NonRationalResult("triple-product character sum at x=" + std::to_string(x) +
                                " is not rational");
    }
    return *r;
}

std::int64_t char_sum_A(const GaussTable& table, std::int64_t x) {
    return TripleProductSum(table).value(x);
}

GroupRingElem orthogonality_sum(const FieldCtx& ctx, std::int64_t x) {
    GroupRingElem acc(ctx.order());
    std::uint32_t xx = ctx.elem(x);
    if (xx == 0) return acc;
    for (std::int64_t j = 0; j < ctx.order(); ++j) acc.add_term(char_exponent(ctx, j, xx), 1);
    return acc;
}

bool check_inverse_relation(const GaussTable& table, std::int64_t j) {
    const auto& ctx = table.field();
    GroupRingElem lhs = table(j) * table(-j);
    GroupRingElem rhs = table.root_of_unity(minus_one_exponent(ctx, j)) * ctx.p();
    if (ctx.reduce_exponent(j) == 0) rhs.add_term(0, -static_cast<std::int64_t>(ctx.order()));
    return equal_in_ring(lhs, rhs);
}

bool check_gauss_jacobi(const GaussTable& table, std::int64_t j1, std::int64_t j2) {
    const auto& ctx = table.field();
    GroupRingElem lhs = jacobi_sum(ctx, j1, j2).embed(table.conductor()) * table(j1 + j2);
    GroupRingElem rhs = table(j1) * table(j2);
    if (ctx.reduce_exponent(j1 + j2) == 0) {
        rhs += table.root_of_unity(minus_one_exponent(ctx, j2)) * table(0) *
               static_cast<std::int64_t>(ctx.order());
    }
    return equal_in_ring(lhs, rhs);
}

HasseDavenportCheck verify_hasse_davenport(const GaussTable& table, std::uint32_t m,
                                           std::int64_t j_psi) {
    const auto& ctx = table.field();
    if (m == 0 || ctx.order() % m != 0) throw Error("Hasse-Davenport needs m | p-1");
    const std::int64_t chi = ctx.order() / m;
    GroupRingElem classical = GroupRingElem::constant(table.conductor(), 1);
    for (std::int64_t i = 0; i < m; ++i) classical = classical * table(j_psi + i * chi);
    GroupRingElem displayed = classical * table(j_psi + static_cast<std::int64_t>(m) * chi);

    const std::int64_t mm = static_cast<std::int64_t>(m);
    GroupRingElem rhs = table(mm * j_psi) * table.root_of_unity(char_exponent(ctx, -mm * j_psi, m));
    for (std::int64_t i = 1; i < mm; ++i) rhs = rhs * table(i * chi);

    return {equal_in_ring(classical, rhs), equal_in_ring(displayed, rhs)};
}

}  // namespace hgf
