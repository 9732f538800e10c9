#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "hgf/sweep.hpp"

using namespace hgf;

namespace {

SweepConfig small_config() {
    SweepConfig c;
    c.pmin = 3;
    c.pmax = 13;
    c.identities = {"sum3", "sv1"};
    c.timing = false;
    return c;
}

}  // namespace

TEST(Sweep, PrimesInRange) {
    EXPECT_EQ(primes_in_range(1, 20), (std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19}));
    EXPECT_TRUE(primes_in_range(24, 28).empty());
}

TEST(Sweep, ValidateRejectsBadConfigs) {
    auto bad = [](auto edit) {
        SweepConfig c = small_config();
        edit(c);
        EXPECT_THROW(validate(c), std::invalid_argument);
    };
    bad([](SweepConfig& c) { c.pmin = 2; });
    bad([](SweepConfig& c) { c.pmax = 2; });
    bad([](SweepConfig& c) { c.precision = 1; });
    bad([](SweepConfig& c) { c.jobs = 0; });
    bad([](SweepConfig& c) { c.identities = {"nope"}; });
    bad([](SweepConfig& c) { c.pmin = 24, c.pmax = 28; });
    bad([](SweepConfig& c) { c.pmax = 1u << 20; });
    bad([](SweepConfig& c) { c.pmax = 47, c.precision = 12; });
    EXPECT_NO_THROW(validate(small_config()));
}

TEST(Sweep, OrderAndSkippedCells) {
    const auto cells = run_sweep(small_config(), {});
    ASSERT_EQ(cells.size(), 10u);
    EXPECT_EQ(cells[0].report.identity, "sum3");
    EXPECT_EQ(cells[0].status, CellStatus::Skipped);
    EXPECT_EQ(cells[1].status, CellStatus::Pass);
    EXPECT_EQ(cells[1].report.p, 5u);
    EXPECT_EQ(cells[5].report.identity, "sv1");
    EXPECT_EQ(cells[5].report.p, 3u);
    EXPECT_TRUE(all_passed(cells));
}

TEST(Sweep, CsvSchema) {
    const auto cells = run_sweep(small_config(), {});
    std::ostringstream out;
    write_csv(out, cells, false);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "identity,p,precision,cases,failures,elapsed_ms");
    std::getline(in, line);
    EXPECT_EQ(line, "sum3,3,4,0,0,0.000");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, cells.size() - 1);
}

TEST(Sweep, JsonSchema) {
    const auto config = small_config();
    const auto cells = run_sweep(config, {});
    std::ostringstream out;
    write_json(out, config, cells);
    const auto doc = nlohmann::json::parse(out.str());
    EXPECT_TRUE(doc["passed"].get<bool>());
    EXPECT_EQ(doc["config"]["pmax"], 13);
    ASSERT_EQ(doc["results"].size(), cells.size());
    const auto& skipped = doc["results"][0];
    EXPECT_EQ(skipped["status"], "skipped (precondition)");
    for (const auto& row : doc["results"]) {
        for (const char* key : {"identity", "p", "precision", "cases", "failures", "elapsed_ms", "status"})
            EXPECT_TRUE(row.contains(key)) << key;
        EXPECT_EQ(row["elapsed_ms"], 0.0);
    }
}

TEST(Sweep, OutputIndependentOfJobs) {
    auto config = small_config();
    config.identities = {"kummer", "prop1", "sv1", "teichmuller"};
    std::ostringstream a, b;
    write_json(a, config, run_sweep(config, {}));
    config.jobs = 4;
    write_json(b, config, run_sweep(config, {}));
    EXPECT_EQ(a.str(), b.str());
}

TEST(Sweep, FailureIsReported) {
    auto config = small_config();
    config.identities = {"sv1"};
    VerifyOptions opt;
    opt.gamma = [](std::uint64_t p, int K, const std::vector<Rational>& args) {
        GammaTable t(p, K);
        for (const auto& x : args) t.insert(x, 1);
        return t;
    };
    const auto cells = run_sweep(config, opt);
    EXPECT_FALSE(all_passed(cells));
}
