#include "hgf/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hgf/errors.hpp"
#include "hgf/modarith.hpp"

namespace hgf {

using json = nlohmann::json;
using mod::u64;

namespace {

// Digits beyond N that the deepest computation (the stability check) lifts to.
constexpr int kHeadroomDigits = 3;

const char* status_name(CellStatus s) {
    switch (s) {
        case CellStatus::Pass: return "pass";
        case CellStatus::Fail: return "fail";
        case CellStatus::Skipped: return "skipped (precondition)";
    }
    return "?";
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::vector<const Verifier*> selected(const SweepConfig& config) {
    std::vector<const Verifier*> out;
    if (config.identities.empty()) {
        for (const auto& v : verifier_registry()) out.push_back(&v);
        return out;
    }
    std::set<std::string> names(config.identities.begin(), config.identities.end());
    for (const auto& v : verifier_registry()) {
        if (names.count(v.name)) out.push_back(&v);
    }
    return out;
}

}  // namespace

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = std::max<u64>(lo, 3); n <= hi; ++n) {
        if (mod::is_prime(n)) out.push_back(n);
    }
    return out;
}

void validate(const SweepConfig& config) {
    if (config.pmin < 3) throw std::invalid_argument("--pmin must be at least 3");
    if (config.pmax < config.pmin) throw std::invalid_argument("--pmax is below --pmin");
    if (config.precision < 2) throw std::invalid_argument("--prec must be at least 2");
    if (config.jobs == 0) throw std::invalid_argument("--jobs must be positive");
    if (config.pmax >= (1u << 20)) throw std::invalid_argument("--pmax must be below 2^20");
    for (const auto& name : config.identities) {
        if (!find_verifier(name)) throw std::invalid_argument("unknown identity: " + name);
    }
    auto primes = primes_in_range(config.pmin, config.pmax);
    if (primes.empty()) throw std::invalid_argument("no odd prime in [pmin, pmax]");
    try {
        mod::ipow_checked(primes.back(), config.precision + kHeadroomDigits);
    } catch (const Error&) {
        throw std::invalid_argument("--prec too large for p = " + std::to_string(primes.back()));
    }
}

std::vector<SweepCell> run_sweep(const SweepConfig& config, const VerifyOptions& options) {
    validate(config);
    const auto primes = primes_in_range(config.pmin, config.pmax);

    struct Job {
        const Verifier* verifier;
        u64 p;
    };
    std::vector<Job> jobs;
    for (const Verifier* v : selected(config)) {
        if (v->prime_independent) {
            jobs.push_back({v, 0});
            continue;
        }
        for (u64 p : primes) jobs.push_back({v, p});
    }

    VerifyOptions opt = options;
    opt.only_t = config.only_t;
    opt.only_x = config.only_x;

    std::vector<SweepCell> cells(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const Job& job = jobs[i];
            SweepCell& cell = cells[i];
            if (job.p != 0 && !job.verifier->applies(job.p)) {
                cell.report.identity = job.verifier->name;
                cell.report.p = job.p;
                cell.report.precision = config.precision;
                cell.status = CellStatus::Skipped;
                continue;
            }
            try {
                cell.report = job.verifier->run(job.p, config.precision, opt);
            } catch (const std::exception& e) {
                cell.report.identity = job.verifier->name;
                cell.report.p = job.p;
                cell.report.precision = config.precision;
                cell.report.check(false, "error", e.what(), "");
            }
            cell.status = cell.report.passed() ? CellStatus::Pass : CellStatus::Fail;
            if (!config.timing) cell.report.elapsed_ms = 0;
        }
    };

    const unsigned n = std::min<std::size_t>(config.jobs, std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return cells;
}

bool all_passed(const std::vector<SweepCell>& cells) {
    for (const auto& c : cells) {
        if (c.status == CellStatus::Fail) return false;
    }
    return true;
}

void write_csv(std::ostream& out, const std::vector<SweepCell>& cells, bool timing) {
    out << "identity,p,precision,cases,failures,elapsed_ms\n";
    for (const auto& c : cells) {
        const auto& r = c.report;
        out << r.identity << ',' << r.p << ',' << r.precision << ',' << r.cases << ',' << r.failures.size() << ','
            << format_ms(timing ? r.elapsed_ms : 0.0) << '\n';
    }
}

void write_json(std::ostream& out, const SweepConfig& config, const std::vector<SweepCell>& cells) {
    json rows = json::array();
    for (const auto& c : cells) {
        const auto& r = c.report;
        json failures = json::array();
        for (const auto& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        json row = {{"identity", r.identity},
                    {"p", r.p},
                    {"precision", r.precision},
                    {"cases", r.cases},
                    {"failures", std::move(failures)},
                    {"elapsed_ms", config.timing ? r.elapsed_ms : 0.0},
                    {"status", status_name(c.status)}};
        if (!r.branches.empty()) row["branches"] = r.branches;
        if (!r.notes.empty()) row["notes"] = r.notes;
        rows.push_back(std::move(row));
    }
    json cfg = {{"pmin", config.pmin},
                {"pmax", config.pmax},
                {"precision", config.precision},
                {"identities", config.identities}};
    if (config.only_t) cfg["t"] = *config.only_t;
    if (config.only_x) cfg["x"] = *config.only_x;
    json doc = {{"config", std::move(cfg)}, {"passed", all_passed(cells)}, {"results", std::move(rows)}};
    out << doc.dump(2) << '\n';
}

}  // namespace hgf
