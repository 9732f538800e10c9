#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgf/pgamma.hpp"

namespace hgf {

struct Counterexample {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string identity;
    std::uint64_t p = 0;  // 0 for prime-independent checks
    int precision = 0;
    std::uint64_t cases = 0;
    std::vector<Counterexample> failures;
    double elapsed_ms = 0.0;
    std::map<std::string, std::uint64_t> branches;  // case-partition counts
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }

    // Counts one case; records a counterexample when ok is false.
    void check(bool ok, std::string inputs, std::string lhs = {}, std::string rhs = {});
    void merge(const VerifyReport& other, const std::string& tag);
};

struct VerifyOptions {
    GammaSupplier gamma = default_gamma_supplier();
    // Sample this many (t, x) pairs of the bridge grid instead of all of it.
    std::optional<std::size_t> bridge_sample;
    // Repeat p-adic checks at N = 6 for p <= 13.
    bool high_precision_rerun = true;
    // Restrict sweeps over t or x to one value (read mod p).
    std::optional<std::int64_t> only_t;
    std::optional<std::int64_t> only_x;
};

VerifyReport verify_sv1(std::uint64_t p, int N, const VerifyOptions& opt = {});
VerifyReport verify_kummer_transforms(std::uint64_t p, int N, const VerifyOptions& opt = {});
VerifyReport verify_sum1(std::uint64_t p, int N, const VerifyOptions& opt = {});
// Exact; requires p = 1 mod 4.
VerifyReport verify_sum3(std::uint64_t p, const VerifyOptions& opt = {});
VerifyReport verify_pfaff(std::uint64_t p, int N, const VerifyOptions& opt = {});
VerifyReport verify_prop1(std::uint64_t p, const VerifyOptions& opt = {});
VerifyReport verify_prop2(std::uint64_t p, int N, const VerifyOptions& opt = {});
VerifyReport verify_lemma1(std::uint64_t p, int N, const VerifyOptions& opt = {});
VerifyReport verify_lemma2(std::uint64_t p, int N, const VerifyOptions& opt = {});
// Requires p = 1 mod 4.
VerifyReport verify_g_f_bridge(std::uint64_t p, int N, const VerifyOptions& opt = {});
VerifyReport verify_zero_locus(std::uint64_t p, int N, const VerifyOptions& opt = {});

VerifyReport verify_inverse(std::uint64_t p);
VerifyReport verify_gauss_jacobi(std::uint64_t p);
// m = 2 for every psi. Pass/fail follows the product over 0 <= i < m; the
// notes record how the product over 0 <= i <= m fares.
VerifyReport verify_hasse_davenport(std::uint64_t p);
VerifyReport verify_binomial_relations(std::uint64_t p);
VerifyReport verify_orthogonality(std::uint64_t p);

VerifyReport verify_prod1_report(std::uint64_t p, int N, const VerifyOptions& opt = {});
VerifyReport verify_prod2_report(std::uint64_t p, int N, const VerifyOptions& opt = {});
VerifyReport verify_reflection_report(std::uint64_t p, int N, const VerifyOptions& opt = {});
// Gamma_p(m+1) against -m Gamma_p(m) (or -Gamma_p(m) when p | m) for m < p^3.
VerifyReport verify_gamma_recurrence(std::uint64_t p, int N);
// Guard digits G and G+2 agree on every argument used by the sweeps.
VerifyReport verify_gamma_stability(std::uint64_t p, int N);
VerifyReport verify_teichmuller(std::uint64_t p, int N);

VerifyReport classical_sanity(double tol = 1e-10);

// Gamma_p arguments touched by the theorem sweeps at p.
std::vector<Rational> sweep_gamma_arguments(std::uint64_t p);

/**
 * Named verifier as seen by the sweep runner. Prime-independent entries run
 * once with p = 0; `applies` filters primes by congruence preconditions.
 */
struct Verifier {
    std::string name;
    bool prime_independent = false;
    std::function<bool(std::uint64_t p)> applies;
    std::function<VerifyReport(std::uint64_t p, int N, const VerifyOptions& opt)> run;
};

// Sorted by name.
const std::vector<Verifier>& verifier_registry();
const Verifier* find_verifier(const std::string& name);

}  // namespace hgf
