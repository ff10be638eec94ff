#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dip/types.hpp"

namespace dipcli {

// Flags shared by every subcommand; defaults are the model's parameter block.
struct ModelOptions {
    int term = 45;
    double gdp_cagr = 0.012;
    double income_cagr = 0.006;
    double inflation = 0.026;
    double sp500_cagr = 0.088;
    double dividend_yield = 0.023;
    std::string real_rate_mode = "ratio";  // ratio|subtract
    int base_year = 1984;
    std::optional<double> contribution;  // optimized internally when absent
    double c_min = 0.0;
    double c_max = 0.2;
    double c_step = 0.001;
    std::string output = "csv";  // csv|json
    std::filesystem::path out_dir = "out";
};

struct BacktestOptions : ModelOptions {
    std::filesystem::path data_dir;
};

struct SweepOptions : ModelOptions {
    std::vector<int> terms;
    std::vector<double> gdp_cagrs;
    std::vector<double> income_cagrs;
    std::vector<double> sp500_cagrs;
    std::vector<double> dividend_yields;
};

dip::RealRateMode parse_mode(const std::string& mode);

// Plan parameters implied by the flags (c left at 0 when absent).
dip::PlanParams plan_params(const ModelOptions& opt);

void cmd_solve(const ModelOptions& opt, std::ostream& out);
void cmd_optimize(const ModelOptions& opt, std::ostream& out);
void cmd_simulate(const ModelOptions& opt, std::ostream& out);
void cmd_backtest(const BacktestOptions& opt, std::ostream& out);
void cmd_sweep(const SweepOptions& opt, std::ostream& out);

}  // namespace dipcli
