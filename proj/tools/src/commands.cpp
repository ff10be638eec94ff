#include "dipcli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dip/model_economy.hpp"
#include "dip/optimize.hpp"
#include "dip/schedule.hpp"
#include "dip/series_io.hpp"
#include "dip/simulate.hpp"
#include "dipcli/writers.hpp"

namespace dipcli {

namespace {

using nlohmann::ordered_json;

dip::EconomyPath model_economy(const ModelOptions& opt) {
    return dip::project_model_economy(opt.gdp_cagr, opt.income_cagr, opt.term, opt.base_year);
}

dip::GridSpec grid_spec(const ModelOptions& opt) {
    return dip::GridSpec{opt.c_min, opt.c_max, opt.c_step};
}

double resolve_contribution(const ModelOptions& opt, const dip::EconomyPath& economy,
                            const dip::PlanParams& fixed) {
    if (opt.contribution) return *opt.contribution;
    return dip::optimize_c(economy, fixed, grid_spec(opt)).c_star;
}

// A report is an ordered set of named scalars emitted as a one-row CSV or a
// JSON object with the same numbers.
struct Report {
    ordered_json values = ordered_json::object();

    void num(const std::string& key, double v) { values[key] = round12(v); }
    void integer(const std::string& key, long long v) { values[key] = v; }
    void str(const std::string& key, const std::string& v) { values[key] = v; }
};

std::string report_csv(const Report& report) {
    std::ostringstream header, row;
    bool first = true;
    for (const auto& [key, value] : report.values.items()) {
        if (!first) {
            header << ',';
            row << ',';
        }
        first = false;
        header << key;
        if (value.is_number_float())
            row << g12(value.get<double>());
        else if (value.is_number_integer())
            row << value.get<long long>();
        else
            row << value.get<std::string>();
    }
    return header.str() + "\n" + row.str() + "\n";
}

void write_report(const ModelOptions& opt, const std::string& stem, const Report& report) {
    if (opt.output == "json")
        write_file(opt.out_dir / (stem + ".json"), report.values.dump(2) + "\n");
    else
        write_file(opt.out_dir / (stem + ".csv"), report_csv(report));
}

void echo_params(Report& report, const ModelOptions& opt, const dip::PlanParams& params) {
    report.integer("term", opt.term);
    report.num("gdp_cagr", opt.gdp_cagr);
    report.num("income_cagr", opt.income_cagr);
    report.num("inflation", opt.inflation);
    report.num("sp500_cagr", opt.sp500_cagr);
    report.num("dividend_yield", opt.dividend_yield);
    report.str("real_rate_mode", opt.real_rate_mode);
    report.num("real_growth_rate", params.s);
    report.integer("base_year", opt.base_year);
}

std::string impact_csv(const dip::EconomyPath& economy, const dip::SimulationResult& sim,
                       const std::vector<double>& pay_raise) {
    std::ostringstream out;
    out << "year,gdp,income,total_income,pay_raise\n";
    for (int t = 0; t <= sim.years(); ++t) {
        out << economy.base_year + t << ',' << g12(economy.gdp[t]) << ','
            << g12(economy.income[t]) << ',' << g12(sim.total_income[t]) << ','
            << g12(pay_raise[t]) << '\n';
    }
    return out.str();
}

std::string flows_csv(const dip::EconomyPath& economy, const dip::SimulationResult& sim) {
    std::ostringstream out;
    out << "year,inflow,principal_out,dividend_out,holdings\n";
    for (int t = 0; t <= sim.years(); ++t) {
        out << economy.base_year + t << ',' << g12(sim.inflow[t]) << ','
            << g12(sim.principal_out[t]) << ',' << g12(sim.dividend_out[t]) << ','
            << g12(sim.holdings[t]) << '\n';
    }
    return out.str();
}

double schedule_loss(const dip::EconomyPath& economy, const dip::SimulationResult& sim) {
    double total = 0.0;
    for (int t = 1; t <= sim.years(); ++t)
        total += std::fabs(1.0 - sim.total_income[t] / economy.gdp[t]);
    return total;
}

}  // namespace

dip::RealRateMode parse_mode(const std::string& mode) {
    if (mode == "ratio") return dip::RealRateMode::Ratio;
    if (mode == "subtract") return dip::RealRateMode::Subtract;
    throw std::invalid_argument("unknown real-rate mode '" + mode + "'");
}

dip::PlanParams plan_params(const ModelOptions& opt) {
    dip::PlanParams params;
    params.c = opt.contribution.value_or(0.0);
    params.T = opt.term;
    params.d = opt.dividend_yield;
    params.s = dip::holdings_growth_rate(opt.sp500_cagr, opt.dividend_yield, opt.inflation,
                                         parse_mode(opt.real_rate_mode));
    params.validate();
    return params;
}

void cmd_solve(const ModelOptions& opt, std::ostream& out) {
    std::filesystem::create_directories(opt.out_dir);
    const dip::EconomyPath economy = model_economy(opt);
    dip::PlanParams params = plan_params(opt);
    params.c = resolve_contribution(opt, economy, params);
    const dip::SolvedSchedule solved = dip::solve_schedule(economy, params);

    std::ostringstream csv;
    csv << "year,raw,clamped,alpha\n";
    for (int t = 1; t <= params.T; ++t) {
        csv << opt.base_year + t << ',' << g12(solved.schedule.raw[t]) << ','
            << g12(solved.schedule.clamped[t]) << ',' << g12(solved.alphas.alpha[t]) << '\n';
    }
    write_file(opt.out_dir / "schedule.csv", csv.str());

    Report report;
    report.num("contribution", params.c);
    echo_params(report, opt, params);
    report.integer("ramp_years", dip::ramp_years(solved.schedule));
    write_report(opt, "solve_report", report);

    out << "c " << g12(params.c) << "\n";
    out << "ramp_years " << dip::ramp_years(solved.schedule) << "\n";
}

void cmd_optimize(const ModelOptions& opt, std::ostream& out) {
    std::filesystem::create_directories(opt.out_dir);
    const dip::EconomyPath economy = model_economy(opt);
    const dip::PlanParams fixed = plan_params(opt);
    const dip::OptimizeResult result = dip::optimize_c(economy, fixed, grid_spec(opt));

    std::ostringstream csv;
    csv << "c,loss\n";
    for (const auto& point : result.curve.points)
        csv << g12(point.c) << ',' << g12(point.loss) << '\n';
    write_file(opt.out_dir / "loss_curve.csv", csv.str());

    Report report;
    report.num("c_star", result.c_star);
    report.num("loss", result.loss);
    echo_params(report, opt, fixed);
    report.num("c_min", opt.c_min);
    report.num("c_max", opt.c_max);
    report.num("c_step", opt.c_step);
    write_report(opt, "optimize_report", report);

    out << "c_star " << g12(result.c_star) << "\n";
    out << "loss " << g12(result.loss) << "\n";
}

void cmd_simulate(const ModelOptions& opt, std::ostream& out) {
    std::filesystem::create_directories(opt.out_dir);
    const dip::EconomyPath economy = model_economy(opt);
    dip::PlanParams params = plan_params(opt);
    params.c = resolve_contribution(opt, economy, params);

    const dip::SolvedSchedule solved = dip::solve_schedule(economy, params);
    const dip::MarketPath market = dip::model_market_path(params, params.T);
    const dip::SimulationResult sim = dip::simulate(economy, market, solved.schedule, params);
    const std::vector<double> pay_raise = dip::pay_raise_comparator(economy, params.c);

    write_file(opt.out_dir / "impact.csv", impact_csv(economy, sim, pay_raise));
    write_file(opt.out_dir / "flows.csv", flows_csv(economy, sim));

    Report report;
    report.num("contribution", params.c);
    echo_params(report, opt, params);
    report.num("loss", schedule_loss(economy, sim));
    report.num("residual_holdings", sim.residual_holdings);
    report.integer("ramp_years", dip::ramp_years(solved.schedule));
    report.integer("flow_crossover_year", dip::flow_crossover_year(sim));
    report.integer("comparator_crossover_year", dip::comparator_crossover_year(sim, pay_raise));
    report.num("mean_holdings_income_units", dip::mean_holdings_income_units(sim, economy));
    write_report(opt, "simulate_report", report);

    out << "c " << g12(params.c) << "\n";
    out << "residual_holdings " << g12(sim.residual_holdings) << "\n";
    out << "flow_crossover_year " << dip::flow_crossover_year(sim) << "\n";
}

void cmd_backtest(const BacktestOptions& opt, std::ostream& out) {
    std::filesystem::create_directories(opt.out_dir);
    const dip::AnnualSeries cpi = dip::load_series(opt.data_dir / "cpi.csv", "cpi");
    const dip::AnnualSeries sp500 = dip::load_series(opt.data_dir / "sp500.csv", "sp500");
    const dip::AnnualSeries div_yield =
        dip::load_series(opt.data_dir / "dividend_yield.csv", "dividend_yield");
    const dip::AnnualSeries income = dip::load_series(opt.data_dir / "income.csv", "income");
    const dip::AnnualSeries gdp = dip::load_series(opt.data_dir / "gdp.csv", "gdp");

    const int last_common = std::min(
        {cpi.last_year(), sp500.last_year(), div_yield.last_year(), income.last_year(),
         gdp.last_year(), opt.base_year + opt.term});
    const dip::YearWindow window{opt.base_year + 1, last_common};
    const dip::HistoricalPaths paths =
        dip::build_historical_paths(cpi, sp500, div_yield, income, gdp, window, opt.base_year);

    // The replay reuses the model schedule and contribution rate unchanged.
    const dip::EconomyPath model = model_economy(opt);
    dip::PlanParams params = plan_params(opt);
    params.c = resolve_contribution(opt, model, params);
    const dip::SolvedSchedule solved = dip::solve_schedule(model, params);

    const dip::SimulationResult sim =
        dip::simulate(paths.economy, paths.market, solved.schedule, params);
    const std::vector<double> pay_raise = dip::pay_raise_comparator(paths.economy, params.c);

    write_file(opt.out_dir / "backtest_impact.csv", impact_csv(paths.economy, sim, pay_raise));
    write_file(opt.out_dir / "backtest_flows.csv", flows_csv(paths.economy, sim));

    Report report;
    report.num("contribution", params.c);
    echo_params(report, opt, params);
    report.integer("window_start", window.start_year);
    report.integer("window_end", window.end_year);
    report.integer("years_simulated", sim.years());
    report.num("terminal_holdings", sim.residual_holdings);
    write_report(opt, "backtest_report", report);

    out << "c " << g12(params.c) << "\n";
    out << "years_simulated " << sim.years() << "\n";
    out << "terminal_holdings " << g12(sim.residual_holdings) << "\n";
}

void cmd_sweep(const SweepOptions& opt, std::ostream& out) {
    std::filesystem::create_directories(opt.out_dir);
    const std::vector<int> terms = opt.terms.empty() ? std::vector<int>{opt.term} : opt.terms;
    const auto or_default = [](const std::vector<double>& v, double dflt) {
        return v.empty() ? std::vector<double>{dflt} : v;
    };
    const std::vector<double> gdp_cagrs = or_default(opt.gdp_cagrs, opt.gdp_cagr);
    const std::vector<double> income_cagrs = or_default(opt.income_cagrs, opt.income_cagr);
    const std::vector<double> sp500_cagrs = or_default(opt.sp500_cagrs, opt.sp500_cagr);
    const std::vector<double> dividend_yields =
        or_default(opt.dividend_yields, opt.dividend_yield);

    std::ostringstream csv;
    csv << "term,gdp_cagr,income_cagr,sp500_cagr,dividend_yield,c_star,loss,ramp_years,"
           "mean_holdings\n";
    ordered_json scenarios = ordered_json::array();
    int count = 0;
    for (int term : terms)
        for (double gdp : gdp_cagrs)
            for (double inc : income_cagrs)
                for (double sp : sp500_cagrs)
                    for (double dy : dividend_yields) {
                        ModelOptions scenario = opt;
                        scenario.term = term;
                        scenario.gdp_cagr = gdp;
                        scenario.income_cagr = inc;
                        scenario.sp500_cagr = sp;
                        scenario.dividend_yield = dy;
                        scenario.contribution.reset();

                        const dip::EconomyPath economy = model_economy(scenario);
                        dip::PlanParams params = plan_params(scenario);
                        const dip::OptimizeResult result =
                            dip::optimize_c(economy, params, grid_spec(scenario));

                        double ramp = std::numeric_limits<double>::quiet_NaN();
                        double mean_h = std::numeric_limits<double>::quiet_NaN();
                        if (std::isfinite(result.loss)) {
                            params.c = result.c_star;
                            const dip::SolvedSchedule solved = dip::solve_schedule(economy, params);
                            const dip::SimulationResult sim =
                                dip::simulate(economy, dip::model_market_path(params, term),
                                              solved.schedule, params);
                            ramp = dip::ramp_years(solved.schedule);
                            mean_h = dip::mean_holdings_income_units(sim, economy);
                        }

                        csv << term << ',' << g12(gdp) << ',' << g12(inc) << ',' << g12(sp) << ','
                            << g12(dy) << ',' << g12(result.c_star) << ',' << g12(result.loss)
                            << ',' << g12(ramp) << ',' << g12(mean_h) << '\n';
                        ordered_json row;
                        row["term"] = term;
                        row["gdp_cagr"] = round12(gdp);
                        row["income_cagr"] = round12(inc);
                        row["sp500_cagr"] = round12(sp);
                        row["dividend_yield"] = round12(dy);
                        row["c_star"] = round12(result.c_star);
                        row["loss"] = round12(result.loss);
                        row["ramp_years"] = round12(ramp);
                        row["mean_holdings"] = round12(mean_h);
                        scenarios.push_back(row);
                        ++count;
                    }

    write_file(opt.out_dir / "sweep.csv", csv.str());
    if (opt.output == "json") {
        ordered_json doc;
        doc["scenarios"] = scenarios;
        write_file(opt.out_dir / "sweep.json", doc.dump(2) + "\n");
    }
    out << "scenarios " << count << "\n";
}

}  // namespace dipcli
