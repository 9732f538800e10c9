#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hgf/verify.hpp"

namespace hgf {

enum class ReportFormat { Json, Csv };

struct SweepConfig {
    std::uint64_t pmin = 3;
    std::uint64_t pmax = 47;
    int precision = 4;
    std::vector<std::string> identities;  // empty means all
    std::optional<std::int64_t> only_t;
    std::optional<std::int64_t> only_x;
    std::optional<std::string> output;  // stdout when empty
    ReportFormat format = ReportFormat::Json;
    unsigned jobs = 1;
    std::optional<std::string> cache;
    bool timing = true;
};

// Throws std::invalid_argument describing the first problem found.
void validate(const SweepConfig& config);

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

enum class CellStatus { Pass, Fail, Skipped };

struct SweepCell {
    VerifyReport report;
    CellStatus status = CellStatus::Pass;
};

/**
 * Runs every selected identity on every prime of the range: identities in
 * alphabetical order, primes ascending. Cells whose congruence precondition
 * fails are kept as skipped rows. Output order does not depend on `jobs`.
 */
std::vector<SweepCell> run_sweep(const SweepConfig& config, const VerifyOptions& options);

bool all_passed(const std::vector<SweepCell>& cells);

void write_csv(std::ostream& out, const std::vector<SweepCell>& cells, bool timing);
void write_json(std::ostream& out, const SweepConfig& config, const std::vector<SweepCell>& cells);

}  // namespace hgf
