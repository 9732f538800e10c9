#include "hgf/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hgf/errors.hpp"
#include "hgf/modarith.hpp"

namespace hgf {

using json = nlohmann::json;
using mod::u64;

namespace {

constexpr const char* kFormat = "hgf-gamma-cache";
constexpr int kVersion = 1;

std::optional<u64> parse_decimal(const std::string& s) {
    if (s.empty() || s.size() > 19) return std::nullopt;
    u64 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<u64>(c - '0');
    }
    return v;
}

// Validated table header, or nullopt.
std::optional<GammaTable> table_from_header(const json& t, std::ostream& diag) {
    if (!t.is_object() || !t.contains("p") || !t.contains("K") || !t["p"].is_number_unsigned() ||
        !t["K"].is_number_integer()) {
        diag << "warning: gamma cache: malformed table header dropped\n";
        return std::nullopt;
    }
    const u64 p = t["p"].get<u64>();
    const int K = t["K"].get<int>();
    if (p < 3 || p > (1u << 20) || !mod::is_prime(p) || K < 1) {
        diag << "warning: gamma cache: invalid table (p=" << p << ", K=" << K << ") dropped\n";
        return std::nullopt;
    }
    try {
        mod::ipow_checked(p, K);
    } catch (const Error&) {
        diag << "warning: gamma cache: table (p=" << p << ", K=" << K << ") exceeds modulus range\n";
        return std::nullopt;
    }
    return GammaTable(p, K);
}

}  // namespace

void GammaCache::load(std::ostream& diag) {
    if (!path_) return;
    std::error_code ec;
    if (!std::filesystem::exists(*path_, ec)) return;
    std::ifstream in(*path_);
    if (!in) {
        diag << "warning: gamma cache " << path_->string() << " unreadable; recomputing\n";
        return;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    load_text(buf.str(), diag);
}

void GammaCache::load_text(const std::string& text, std::ostream& diag) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || doc.value("format", "") != kFormat ||
        doc.value("version", 0) != kVersion || !doc.contains("tables") || !doc["tables"].is_array()) {
        diag << "warning: gamma cache is not a valid cache file; ignoring it\n";
        return;
    }
    std::lock_guard lock(mu_);
    for (const auto& t : doc["tables"]) {
        auto table = table_from_header(t, diag);
        if (!table) continue;
        const u64 p = table->prime();
        const int K = table->precision();
        const u64 modulus = mod::ipow_checked(p, K);
        std::size_t dropped = 0;
        if (t.contains("entries") && t["entries"].is_array()) {
            for (const auto& e : t["entries"]) {
                try {
                    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) throw Error("shape");
                    const Rational x = Rational::parse(e[0].get<std::string>());
                    auto unit = parse_decimal(e[1].get<std::string>());
                    if (!unit || *unit >= modulus || *unit % p == 0) throw Error("unit");
                    if (x.den() % static_cast<std::int64_t>(p) == 0) throw Error("argument");
                    if ((x == Rational(0) && *unit != 1) || (x == Rational(1) && *unit != modulus - 1)) {
                        throw Error("endpoint");
                    }
                    table->insert(x, *unit);
                } catch (const std::exception&) {
                    ++dropped;
                }
            }
        }
        if (dropped) {
            diag << "warning: gamma cache: dropped " << dropped << " corrupt entries of (p=" << p
                 << ", K=" << K << ")\n";
        }
        auto [it, inserted] = tables_.try_emplace({p, K}, *table);
        if (!inserted) {
            for (const auto& [x, u] : table->entries()) it->second.insert(x, u);
        }
    }
}

std::string GammaCache::dump() const {
    std::lock_guard lock(mu_);
    json tables = json::array();
    for (const auto& [key, table] : tables_) {
        json entries = json::array();
        for (const auto& [x, u] : table.entries()) entries.push_back({x.to_string(), std::to_string(u)});
        tables.push_back({{"p", key.first}, {"K", key.second}, {"entries", std::move(entries)}});
    }
    json doc = {{"format", kFormat}, {"version", kVersion}, {"tables", std::move(tables)}};
    return doc.dump(1) + "\n";
}

bool GammaCache::store(std::ostream& diag) const {
    if (!path_) return true;
    std::error_code ec;
    if (path_->has_parent_path()) std::filesystem::create_directories(path_->parent_path(), ec);
    const std::string text = dump();
    auto tmp = *path_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!(out << text)) {
            diag << "warning: could not write gamma cache " << path_->string() << "\n";
            return false;
        }
    }
    std::filesystem::rename(tmp, *path_, ec);
    if (ec) {
        diag << "warning: could not write gamma cache " << path_->string() << ": " << ec.message() << "\n";
        return false;
    }
    return true;
}

GammaTable GammaCache::get(u64 p, int K, const std::vector<Rational>& args) {
    std::lock_guard lock(mu_);
    auto it = tables_.lower_bound({p, K});
    if (it == tables_.end() || it->first.first != p) {
        it = tables_.try_emplace({p, K}, GammaTable(p, K)).first;
    }
    GammaTable& stored = it->second;

    std::vector<Rational> missing;
    for (const auto& x : args) {
        if (!stored.contains(x)) missing.push_back(x);
    }
    if (!missing.empty()) {
        GammaTable fresh = batch_gamma(missing, p, stored.precision());
        for (const auto& x : missing) stored.insert(x, fresh.unit(x));
        computed_ += missing.size();
    }
    return stored.precision() == K ? stored : stored.truncated(K);
}

GammaSupplier GammaCache::supplier() {
    return [this](u64 p, int K, const std::vector<Rational>& args) { return get(p, K, args); };
}

std::size_t GammaCache::table_count() const {
    std::lock_guard lock(mu_);
    return tables_.size();
}

std::size_t GammaCache::computed_entries() const {
    std::lock_guard lock(mu_);
    return computed_;
}

std::optional<std::filesystem::path> GammaCache::default_path() {
    const char* dir = std::getenv(kCacheDirEnv);
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir) / kCacheFileName;
}

}  // namespace hgf
