#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgf/pgamma.hpp"

namespace hgf {

// Environment variable naming the directory of the default cache file.
inline constexpr const char* kCacheDirEnv = "HGF_CACHE_DIR";
inline constexpr const char* kCacheFileName = "gamma_cache.json";

/**
 * Gamma tables keyed by (p, K), persisted as JSON:
 *
 *   {"format": "hgf-gamma-cache", "version": 1,
 *    "tables": [{"p": 5, "K": 4, "entries": [["1/4", "351"], ...]}, ...]}
 *
 * Loading validates every table header and every entry; whatever fails
 * validation is dropped with a warning and recomputed on demand. A request
 * for (p, K) is served by the stored table of least precision K' >= K.
 * Thread-safe.
 */
class GammaCache {
public:
    GammaCache() = default;
    explicit GammaCache(std::filesystem::path path) : path_(std::move(path)) {}

    const std::optional<std::filesystem::path>& path() const { return path_; }

    // Reads the file at path(). A missing file is an empty cache; an
    // unreadable or malformed one is reported on `diag` and ignored.
    void load(std::ostream& diag);
    // Writes all tables to path(); reports failures on `diag`.
    bool store(std::ostream& diag) const;

    // Parses cache JSON text, reporting discarded content on `diag`.
    void load_text(const std::string& text, std::ostream& diag);
    std::string dump() const;

    // Table for (p, K) covering args, computing and recording missing entries.
    GammaTable get(std::uint64_t p, int K, const std::vector<Rational>& args);
    GammaSupplier supplier();

    // Number of stored tables and computed entries since construction.
    std::size_t table_count() const;
    std::size_t computed_entries() const;

    static std::optional<std::filesystem::path> default_path();

private:
    std::optional<std::filesystem::path> path_;
    mutable std::mutex mu_;
    std::map<std::pair<std::uint64_t, int>, GammaTable> tables_;
    std::size_t computed_ = 0;
};

}  // namespace hgf
