#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "support/csv.hpp"
#include "support/run.hpp"

namespace fs = std::filesystem;
using testutil::read_csv;
using testutil::read_file;
using testutil::run_cli;

namespace {

const std::string kCli = DIP_CLI_PATH;
const fs::path kScratch = fs::path(DIP_SCRATCH_DIR) / "cli";
const fs::path kFixtures = DIP_FIXTURES_DIR;

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = kScratch / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

double kv_num(const std::map<std::string, std::string>& kv, const std::string& key) {
    REQUIRE(kv.count(key) == 1);
    return std::strtod(kv.at(key).c_str(), nullptr);
}

}  // namespace

TEST_CASE("optimize defaults land in the paper band and report files are written") {
    const fs::path out = fresh_dir("optimize_default");
    const auto run = run_cli(kCli, {"optimize", "--out-dir", out.string()}, out);
    REQUIRE(run.exit_code == 0);
    const auto kv = testutil::parse_kv(run.out);
    const double c_star = kv_num(kv, "c_star");
    CHECK(c_star >= 0.085);
    CHECK(c_star <= 0.090);
    CHECK(fs::exists(out / "loss_curve.csv"));
    CHECK(fs::exists(out / "optimize_report.csv"));
}

TEST_CASE("a single-point scan returns that point") {
    const fs::path out = fresh_dir("optimize_single");
    const auto run = run_cli(
        kCli, {"optimize", "--c-min", "0.05", "--c-max", "0.05", "--c-step", "0.001",
               "--out-dir", out.string()},
        out);
    REQUIRE(run.exit_code == 0);
    CHECK(kv_num(testutil::parse_kv(run.out), "c_star") == 0.05);
    CHECK(read_csv(out / "loss_curve.csv").rows.size() == 1);
}

TEST_CASE("json and csv reports carry identical numbers") {
    const fs::path out_csv = fresh_dir("optimize_csv");
    const fs::path out_json = fresh_dir("optimize_json");
    REQUIRE(run_cli(kCli, {"optimize", "--out-dir", out_csv.string()}, out_csv).exit_code == 0);
    REQUIRE(run_cli(kCli, {"optimize", "--output", "json", "--out-dir", out_json.string()},
                    out_json)
                .exit_code == 0);

    const auto table = read_csv(out_csv / "optimize_report.csv");
    REQUIRE(table.rows.size() == 1);
    const auto doc = nlohmann::json::parse(read_file(out_json / "optimize_report.json"));
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        const std::string& key = table.header[i];
        REQUIRE(doc.contains(key));
        const auto numeric = testutil::parse_numeric(table.rows[0][i]);
        if (doc[key].is_string()) {
            CHECK(doc[key].get<std::string>() == table.rows[0][i]);
        } else {
            REQUIRE(numeric.has_value());
            CHECK(doc[key].get<double>() == *numeric);
        }
    }
}

TEST_CASE("simulate emits an impact overlay within one percent after year 15") {
    const fs::path out = fresh_dir("simulate_default");
    const auto run = run_cli(kCli, {"simulate", "--out-dir", out.string()}, out);
    REQUIRE(run.exit_code == 0);
    const auto kv = testutil::parse_kv(run.out);
    CHECK(kv_num(kv, "residual_holdings") == 0.0);

    const auto impact = read_csv(out / "impact.csv");
    REQUIRE(impact.rows.size() == 46);  // years 0..45
    CHECK(impact.header ==
          std::vector<std::string>{"year", "gdp", "income", "total_income", "pay_raise"});
    for (std::size_t r = 15; r < impact.rows.size(); ++r) {
        const double gdp = testutil::cell_as_double(impact, r, "gdp");
        const double total = testutil::cell_as_double(impact, r, "total_income");
        CHECK(std::fabs(total / gdp - 1.0) < 0.01);
    }

    const auto flows = read_csv(out / "flows.csv");
    int sign_changes = 0;
    bool prev_positive = true;
    for (std::size_t r = 1; r < flows.rows.size(); ++r) {
        const double inflow = testutil::cell_as_double(flows, r, "inflow");
        const double outflow = testutil::cell_as_double(flows, r, "principal_out") +
                               testutil::cell_as_double(flows, r, "dividend_out");
        const bool positive = inflow > outflow;
        if (r > 1 && positive != prev_positive) ++sign_changes;
        prev_positive = positive;
    }
    CHECK(sign_changes == 1);

    // final-year holdings are fully liquidated
    const double last_holdings =
        testutil::cell_as_double(flows, flows.rows.size() - 1, "holdings");
    const double last_principal =
        testutil::cell_as_double(flows, flows.rows.size() - 1, "principal_out");
    CHECK(last_holdings == last_principal);
}

TEST_CASE("backtest on the fixture dataset matches the golden files byte for byte") {
    const fs::path out = fresh_dir("backtest_fixture");
    const auto run = run_cli(kCli,
                             {"backtest", "--data-dir", kFixtures.string(), "--out-dir",
                              out.string()},
                             out);
    REQUIRE(run.exit_code == 0);
    const fs::path golden = fs::path(DIP_GOLDEN_DIR);
    CHECK(read_file(out / "backtest_impact.csv") ==
          read_file(golden / "backtest_impact.csv"));
    CHECK(read_file(out / "backtest_flows.csv") == read_file(golden / "backtest_flows.csv"));
    CHECK(read_file(out / "backtest_report.csv") ==
          read_file(golden / "backtest_report.csv"));
}

TEST_CASE("a missing series file fails with the file named") {
    const fs::path data = fresh_dir("backtest_missing_data");
    for (const char* name : {"cpi.csv", "sp500.csv", "income.csv", "gdp.csv"})
        fs::copy_file(kFixtures / name, data / name);
    const fs::path out = fresh_dir("backtest_missing_out");
    const auto run = run_cli(
        kCli, {"backtest", "--data-dir", data.string(), "--out-dir", out.string()}, out);
    CHECK(run.exit_code != 0);
    CHECK(run.err.find("dividend_yield.csv") != std::string::npos);
}

TEST_CASE("sweep emits one row per scenario") {
    const fs::path out = fresh_dir("sweep_terms");
    const auto run = run_cli(kCli,
                             {"sweep", "--term", "30,45,60", "--out-dir", out.string()}, out);
    REQUIRE(run.exit_code == 0);
    const auto kv = testutil::parse_kv(run.out);
    CHECK(kv.at("scenarios") == "3");
    CHECK(read_csv(out / "sweep.csv").rows.size() == 3);
}

TEST_CASE("a degenerate sweep reproduces the optimize report numbers") {
    const fs::path sweep_out = fresh_dir("sweep_single");
    const fs::path opt_out = fresh_dir("sweep_single_opt");
    REQUIRE(run_cli(kCli, {"sweep", "--out-dir", sweep_out.string()}, sweep_out).exit_code ==
            0);
    REQUIRE(run_cli(kCli, {"optimize", "--out-dir", opt_out.string()}, opt_out).exit_code == 0);

    const auto sweep = read_csv(sweep_out / "sweep.csv");
    REQUIRE(sweep.rows.size() == 1);
    const auto report = read_csv(opt_out / "optimize_report.csv");
    CHECK(testutil::cell_as_double(sweep, 0, "c_star") ==
          testutil::cell_as_double(report, 0, "c_star"));
    CHECK(testutil::cell_as_double(sweep, 0, "loss") ==
          testutil::cell_as_double(report, 0, "loss"));
}

TEST_CASE("emitted csv numbers survive a parse and re-serialize round trip") {
    const fs::path out = fresh_dir("roundtrip");
    REQUIRE(run_cli(kCli, {"simulate", "--out-dir", out.string()}, out).exit_code == 0);
    for (const char* name : {"impact.csv", "flows.csv", "simulate_report.csv"}) {
        const auto table = read_csv(out / name);
        CHECK(!table.rows.empty());
        for (const auto& row : table.rows) {
            for (const auto& cell : row) {
                const auto numeric = testutil::parse_numeric(cell);
                if (!numeric) continue;  // the report's mode column is a string
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.12g", *numeric);
                CHECK(cell == buf);
            }
        }
    }
}

TEST_CASE("solve writes the schedule with the boundary year at one") {
    const fs::path out = fresh_dir("solve_default");
    const auto run = run_cli(
        kCli, {"solve", "--contribution", "0.0872", "--out-dir", out.string()}, out);
    REQUIRE(run.exit_code == 0);
    const auto sched = read_csv(out / "schedule.csv");
    REQUIRE(sched.rows.size() == 45);
    CHECK(testutil::cell_as_double(sched, 44, "raw") == 1.0);
    CHECK(testutil::cell_as_double(sched, 44, "clamped") == 1.0);
}

TEST_CASE("invalid flags exit nonzero") {
    const fs::path out = fresh_dir("badflags");
    CHECK(run_cli(kCli, {"optimize", "--real-rate-mode", "bogus"}, out).exit_code != 0);
    CHECK(run_cli(kCli, {"nonsense"}, out).exit_code != 0);
    CHECK(run_cli(kCli, {"backtest"}, out).exit_code != 0);  // --data-dir required
}
