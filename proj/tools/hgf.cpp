// Command-line front end: `hgf eval ...` and `hgf verify ...`.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hgf/cache.hpp"
#include "hgf/charsums.hpp"
#include "hgf/errors.hpp"
#include "hgf/ff_chars.hpp"
#include "hgf/gseries.hpp"
#include "hgf/pgamma.hpp"
#include "hgf/sweep.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct EvalArgs {
    std::string kind;
    std::int64_t p = 0;
    std::string x;
    std::int64_t t = 1;
    std::int64_t j = 0;
    std::int64_t k = 0;
    std::int64_t c = 0;
    std::string lower = "half";
    int prec = 4;
};

// Integer when the value is rational, the reduced coefficient list otherwise.
std::string render(const hgf::GroupRingElem& e) {
    if (auto r = hgf::as_rational(e)) return std::to_string(*r);
    return hgf::to_string(e);
}

std::string render(const hgf::CycScaled& e) {
    if (auto r = hgf::as_rational(e.num)) return hgf::Rational(*r, e.den).to_string();
    return hgf::to_string(e);
}

std::string eval(const EvalArgs& a) {
    using namespace hgf;
    if (a.prec < 1) throw std::invalid_argument("--prec must be positive");
    const FieldCtx ctx(a.p);
    if (a.kind == "gamma") {
        if (a.x.empty()) throw std::invalid_argument("eval gamma needs --x");
        return gamma_p_rational(Rational::parse(a.x), ctx.p(), a.prec).to_string();
    }
    if (a.kind == "teich") {
        if (a.x.empty()) throw std::invalid_argument("eval teich needs --x");
        return teichmuller(ctx, std::stoll(a.x), a.prec).to_string();
    }
    if (a.kind == "gauss") return render(gauss_sum(ctx, a.j));
    if (a.kind == "jacobi") return render(jacobi_sum(ctx, a.j, a.k));
    if (a.kind == "f21") return render(greene_2f1(ctx, a.j, a.k, a.c, a.t));
    if (a.kind == "g2") {
        if (a.lower != "half" && a.lower != "zero") throw std::invalid_argument("--lower is half or zero");
        const Lower lower = a.lower == "half" ? Lower::Half : Lower::Zero;
        return g22_family(a.t, ctx.p(), a.prec, lower).value.to_string();
    }
    throw std::invalid_argument("unknown eval kind: " + a.kind);
}

int run_verify(hgf::SweepConfig config) {
    using namespace hgf;
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::optional<std::filesystem::path> cache_path;
    if (config.cache) {
        cache_path = *config.cache;
    } else {
        cache_path = GammaCache::default_path();
    }
    GammaCache cache = cache_path ? GammaCache(*cache_path) : GammaCache();
    cache.load(std::cerr);

    VerifyOptions options;
    options.gamma = cache.supplier();
    const auto cells = run_sweep(config, options);
    cache.store(std::cerr);

    std::ofstream file;
    if (config.output) {
        file.open(*config.output, std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot write " << *config.output << "\n";
            return kExitUsage;
        }
    }
    std::ostream& out = config.output ? static_cast<std::ostream&>(file) : std::cout;
    if (config.format == ReportFormat::Csv) {
        write_csv(out, cells, config.timing);
    } else {
        write_json(out, config, cells);
    }

    std::size_t failed = 0;
    for (const auto& c : cells) {
        if (c.status == CellStatus::Fail) {
            ++failed;
            std::cerr << "FAIL " << c.report.identity << " p=" << c.report.p << ": " << c.report.failures.size()
                      << " failing cases\n";
        }
    }
    if (failed) std::cerr << failed << " of " << cells.size() << " cells failed\n";
    return failed ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-field and p-adic hypergeometric identities"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a single quantity");
    eval_cmd->add_option("kind", ev.kind, "gamma | gauss | jacobi | g2 | f21 | teich")
        ->required()
        ->check(CLI::IsMember({"gamma", "gauss", "jacobi", "g2", "f21", "teich"}));
    eval_cmd->add_option("--p", ev.p, "Odd prime")->required();
    eval_cmd->add_option("--x", ev.x, "Argument: rational r/s for gamma, integer for teich");
    eval_cmd->add_option("--t", ev.t, "Argument in F_p for g2 and f21");
    eval_cmd->add_option("--j", ev.j, "Character exponent (first character)");
    eval_cmd->add_option("--k", ev.k, "Character exponent (second character)");
    eval_cmd->add_option("--c", ev.c, "Character exponent of the lower f21 parameter");
    eval_cmd->add_option("--lower", ev.lower, "g2 family: half or zero");
    eval_cmd->add_option("--prec", ev.prec, "p-adic digits");

    hgf::SweepConfig cfg;
    bool all = false;
    bool no_timing = false;
    std::string format = "json";
    std::string out, cache;
    std::int64_t only_t = 0, only_x = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity verifiers over a prime range");
    auto* all_opt = verify_cmd->add_flag("--all", all, "Every registered identity");
    auto* id_opt = verify_cmd->add_option("--identity", cfg.identities, "Identity name (repeatable)");
    all_opt->excludes(id_opt);
    verify_cmd->add_option("--pmin", cfg.pmin, "Smallest prime")->capture_default_str();
    verify_cmd->add_option("--pmax", cfg.pmax, "Largest prime")->capture_default_str();
    verify_cmd->add_option("--prec", cfg.precision, "p-adic digits")->capture_default_str();
    auto* t_opt = verify_cmd->add_option("--t", only_t, "Only this t");
    auto* x_opt = verify_cmd->add_option("--x", only_x, "Only this x");
    verify_cmd->add_option("--out", out, "Report file (default stdout)");
    verify_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    verify_cmd->add_option("--cache", cache, "Gamma cache file (default $HGF_CACHE_DIR/gamma_cache.json)");
    verify_cmd->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0");
    verify_cmd->add_flag_callback("--list", [] {
        for (const auto& v : hgf::verifier_registry()) std::cout << v.name << "\n";
        std::exit(0);
    }, "List identity names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (*eval_cmd) {
        try {
            std::cout << eval(ev) << "\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (!all && cfg.identities.empty()) {
        std::cerr << "error: pass --all or at least one --identity\n";
        return kExitUsage;
    }
    if (!out.empty()) cfg.output = out;
    if (!cache.empty()) cfg.cache = cache;
    if (*t_opt) cfg.only_t = only_t;
    if (*x_opt) cfg.only_x = only_x;
    cfg.format = format == "csv" ? hgf::ReportFormat::Csv : hgf::ReportFormat::Json;
    cfg.timing = !no_timing;
    return run_verify(cfg);
}
