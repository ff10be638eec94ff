#include <iostream>

#include <CLI11.hpp>

#include "dipcli/commands.hpp"

namespace {

void add_common_flags(CLI::App& cmd, dipcli::ModelOptions& opt) {
    cmd.add_option("--inflation", opt.inflation, "inflation rate per year");
    cmd.add_option("--real-rate-mode", opt.real_rate_mode, "how inflation is removed")
        ->check(CLI::IsMember({"ratio", "subtract"}));
    cmd.add_option("--base-year", opt.base_year, "calendar year at plan year 0");
    cmd.add_option("--c-min", opt.c_min, "scan lower bound");
    cmd.add_option("--c-max", opt.c_max, "scan upper bound");
    cmd.add_option("--c-step", opt.c_step, "scan step");
    cmd.add_option("--output", opt.output, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--out-dir", opt.out_dir, "directory for emitted files");
}

void add_plan_flags(CLI::App& cmd, dipcli::ModelOptions& opt) {
    cmd.add_option("--term", opt.term, "plan term in years")->check(CLI::PositiveNumber);
    cmd.add_option("--gdp-cagr", opt.gdp_cagr, "real household GDP growth per year");
    cmd.add_option("--income-cagr", opt.income_cagr, "real median income growth per year");
    cmd.add_option("--sp500-cagr", opt.sp500_cagr, "nominal index total-return CAGR");
    cmd.add_option("--dividend-yield", opt.dividend_yield, "dividend yield per year");
    cmd.add_option("--contribution", opt.contribution,
                   "contribution rate; optimized internally when omitted");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deferred investment payroll plan engine"};
    app.require_subcommand(1);

    dipcli::ModelOptions solve_opt, optimize_opt, simulate_opt;
    dipcli::BacktestOptions backtest_opt;
    dipcli::SweepOptions sweep_opt;

    CLI::App* solve = app.add_subcommand("solve", "solve the payout schedule");
    add_plan_flags(*solve, solve_opt);
    add_common_flags(*solve, solve_opt);

    CLI::App* optimize = app.add_subcommand("optimize", "find the optimal contribution rate");
    add_plan_flags(*optimize, optimize_opt);
    add_common_flags(*optimize, optimize_opt);

    CLI::App* simulate = app.add_subcommand("simulate", "run the model simulation");
    add_plan_flags(*simulate, simulate_opt);
    add_common_flags(*simulate, simulate_opt);

    CLI::App* backtest = app.add_subcommand("backtest", "replay the plan on historical data");
    add_plan_flags(*backtest, backtest_opt);
    add_common_flags(*backtest, backtest_opt);
    backtest->add_option("--data-dir", backtest_opt.data_dir, "directory with the five CSV series")
        ->required();

    // Sweep takes the same plan flags as comma-separated lists and runs the
    // cross product.
    CLI::App* sweep = app.add_subcommand("sweep", "scan scenarios over parameter lists");
    add_common_flags(*sweep, sweep_opt);
    sweep->add_option("--term", sweep_opt.terms, "plan terms, comma-separated")->delimiter(',');
    sweep->add_option("--gdp-cagr", sweep_opt.gdp_cagrs, "GDP growth rates, comma-separated")
        ->delimiter(',');
    sweep->add_option("--income-cagr", sweep_opt.income_cagrs,
                      "income growth rates, comma-separated")
        ->delimiter(',');
    sweep->add_option("--sp500-cagr", sweep_opt.sp500_cagrs, "index CAGRs, comma-separated")
        ->delimiter(',');
    sweep->add_option("--dividend-yield", sweep_opt.dividend_yields,
                      "dividend yields, comma-separated")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) dipcli::cmd_solve(solve_opt, std::cout);
        if (optimize->parsed()) dipcli::cmd_optimize(optimize_opt, std::cout);
        if (simulate->parsed()) dipcli::cmd_simulate(simulate_opt, std::cout);
        if (backtest->parsed()) dipcli::cmd_backtest(backtest_opt, std::cout);
        if (sweep->parsed()) dipcli::cmd_sweep(sweep_opt, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
