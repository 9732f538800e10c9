#include <gtest/gtest.h>

#include "hgf/verify.hpp"
#include "oracles.hpp"

using namespace hgf;

namespace {

std::string describe(const VerifyReport& r) {
    std::string s = r.identity + " p=" + std::to_string(r.p);
    for (const auto& f : r.failures) s += "\n  " + f.inputs + ": " + f.lhs + " vs " + f.rhs;
    return s;
}

std::uint64_t branch_total(const VerifyReport& r, const std::string& prefix) {
    std::uint64_t n = 0;
    for (const auto& [k, v] : r.branches)
        if (k.rfind(prefix, 0) == 0) n += v;
    return n;
}

}  // namespace

TEST(Registry, SortedAndUnique) {
    const auto& reg = verifier_registry();
    ASSERT_FALSE(reg.empty());
    for (std::size_t i = 1; i < reg.size(); ++i) EXPECT_LT(reg[i - 1].name, reg[i].name);
    EXPECT_NE(find_verifier("sv1"), nullptr);
    EXPECT_EQ(find_verifier("nope"), nullptr);
    EXPECT_FALSE(find_verifier("sum3")->applies(7));
    EXPECT_TRUE(find_verifier("sum3")->applies(13));
    EXPECT_TRUE(find_verifier("classical")->prime_independent);
}

TEST(Registry, EveryVerifierPassesAtSmallPrimes) {
    for (const auto& v : verifier_registry()) {
        if (v.prime_independent) {
            const auto r = v.run(0, 4, {});
            EXPECT_TRUE(r.passed()) << describe(r);
            continue;
        }
        for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
            if (!v.applies(p)) continue;
            const auto r = v.run(p, 4, {});
            EXPECT_TRUE(r.passed()) << describe(r);
            EXPECT_GT(r.cases, 0u) << v.name << " p=" << p;
            EXPECT_EQ(r.identity, v.name);
        }
    }
}

TEST(Verify, Sv1BranchesPartitionTheUnits) {
    for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u}) {
        const auto r = verify_sv1(p, 4);
        EXPECT_TRUE(r.passed()) << describe(r);
        EXPECT_EQ(branch_total(r, "value-"), p - 1);
    }
}

TEST(Verify, KummerBranchesAreExhaustive) {
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        const auto r = verify_kummer_transforms(p, 4);
        EXPECT_TRUE(r.passed()) << describe(r);
        EXPECT_EQ(branch_total(r, "trans-"), p - 2);
    }
}

TEST(Verify, Prop1Branches) {
    const auto r = verify_prop1(13);
    EXPECT_TRUE(r.passed()) << describe(r);
    EXPECT_EQ(r.precision, 0);
    std::uint64_t squares = 0;
    for (std::int64_t x = 2; x < 13; ++x) squares += oracle::legendre(1 - x, 13) == 1;
    EXPECT_EQ(r.branches.at("x=1"), 1u);
    EXPECT_EQ(r.branches.at("square"), squares);
    EXPECT_EQ(r.branches.at("zero"), 12u - 1 - squares);
}

TEST(Verify, ZeroLocusIncludesVanishingSquareBranch) {
    const auto r = verify_zero_locus(5, 4);
    EXPECT_TRUE(r.passed()) << describe(r);
    EXPECT_FALSE(r.notes.empty());
}

TEST(Verify, HasseDavenportRecordsConvention) {
    const auto r = verify_hasse_davenport(7);
    EXPECT_TRUE(r.passed()) << describe(r);
    ASSERT_FALSE(r.notes.empty());
    EXPECT_NE(r.notes.front().find("0 of 6"), std::string::npos) << r.notes.front();
}

TEST(Verify, Sum3ChecksBothQuarticCharacters) {
    for (std::uint64_t p : {5u, 13u, 17u}) {
        const auto r = verify_sum3(p);
        EXPECT_TRUE(r.passed()) << describe(r);
        EXPECT_EQ(r.precision, 0);
    }
}

TEST(Verify, BridgeSampleIsDeterministic) {
    VerifyOptions opt;
    opt.bridge_sample = 10;
    const auto a = verify_g_f_bridge(13, 4, opt);
    const auto b = verify_g_f_bridge(13, 4, opt);
    EXPECT_TRUE(a.passed()) << describe(a);
    EXPECT_EQ(a.cases, b.cases);
}

TEST(Verify, FiltersRestrictTheSweep) {
    VerifyOptions opt;
    opt.only_t = 3;
    const auto one = verify_sv1(11, 4, opt);
    const auto all = verify_sv1(11, 4, VerifyOptions{});
    EXPECT_TRUE(one.passed()) << describe(one);
    EXPECT_LT(one.cases, all.cases);
    EXPECT_GT(one.cases, 0u);
}

TEST(Verify, HighPrecisionRerunAddsCases) {
    VerifyOptions off;
    off.high_precision_rerun = false;
    const auto a = verify_pfaff(7, 4, off);
    const auto b = verify_pfaff(7, 4);
    EXPECT_TRUE(b.passed()) << describe(b);
    EXPECT_GT(b.cases, a.cases);
}

TEST(Verify, ReportCheckRecordsCounterexamples) {
    VerifyReport r;
    r.check(true, "a");
    r.check(false, "b", "1", "2");
    EXPECT_EQ(r.cases, 2u);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].inputs, "b");
    EXPECT_FALSE(r.passed());
}

TEST(Verify, ClassicalSanity) {
    const auto r = classical_sanity(1e-10);
    EXPECT_TRUE(r.passed()) << describe(r);
    EXPECT_EQ(r.p, 0u);
    EXPECT_GE(r.cases, 4u);
}

TEST(Verify, GammaPropertySuites) {
    for (std::uint64_t p : {3u, 5u, 7u}) EXPECT_TRUE(verify_gamma_recurrence(p, 4).passed());
    for (std::uint64_t p : {5u, 13u}) {
        EXPECT_TRUE(verify_gamma_stability(p, 4).passed());
        EXPECT_TRUE(verify_teichmuller(p, 4).passed());
    }
}
