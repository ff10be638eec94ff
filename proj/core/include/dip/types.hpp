#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dip {

// Thrown when the backward recursion (or one of its building blocks) hits a
// division by zero: a vanishing GDP-income gap, p+d = 0, or alpha = -1.
// Carries the plan year so optimizer scans can report where a contribution
// rate broke down.
class SingularScheduleError : public std::runtime_error {
public:
    SingularScheduleError(int year, const std::string& what)
        : std::runtime_error("year " + std::to_string(year) + ": " + what), year_(year) {}
    int year() const { return year_; }

private:
    int year_;
};

// Thrown by CSV ingestion; message carries file path and, where applicable,
// the 1-based line number of the offending row.
class DataError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// How a nominal growth rate is converted to a real one.
enum class RealRateMode { Ratio, Subtract };

// The plan's knobs: contribution rate, term, dividend rate, and the real
// growth rate of the invested principal.
struct PlanParams {
    double c = 0.0;  // contribution fraction of wages per year
    int T = 1;       // plan term in years
    double d = 0.0;  // dividend rate, fraction of holdings per year
    double s = 0.0;  // real growth rate of holdings per year

    void validate() const;
};

// Normalized real median income I_t and real household GDP G_t for
// t = 0..T, with I_0 = G_0 = 1 at the base year.
struct EconomyPath {
    int base_year = 0;
    std::vector<double> income;  // I_t, index = plan year
    std::vector<double> gdp;     // G_t, index = plan year

    EconomyPath() = default;
    EconomyPath(int base_year, std::vector<double> income, std::vector<double> gdp);

    // Number of plan years (sequences span t = 0..years()).
    int years() const { return static_cast<int>(income.size()) - 1; }
};

// Per-year real growth and dividend yield of the invested index. Index 0 is
// unused (plan years start at 1); constant in model mode, observed in
// historical mode.
struct MarketPath {
    std::vector<double> growth;     // s_t, growth during year t
    std::vector<double> div_yield;  // d_t, dividend yield paid in year t

    MarketPath() = default;
    MarketPath(std::vector<double> growth, std::vector<double> div_yield);

    int years() const { return static_cast<int>(growth.size()) - 1; }
};

// Payout schedule over plan years 1..T; raw is the recursion output, clamped
// is what the plan actually pays: clamped[t] = min(max(raw[t], 0), 1).
// Index 0 of both vectors is unused and held at zero so that plan-year
// indexing is direct.
struct PayoutSchedule {
    std::vector<double> raw;
    std::vector<double> clamped;

    int term() const { return static_cast<int>(raw.size()) - 1; }
};

// Intermediate alpha_t values of the backward recursion, t = 1..T-1.
// Entries 0 and T are unused.
struct AlphaTrace {
    std::vector<double> alpha;
};

struct SolvedSchedule {
    PayoutSchedule schedule;
    AlphaTrace alphas;
};

// Per-year output of a forward simulation. All vectors span index 0..n where
// n is the number of simulated plan years; index 0 is the base year
// (holdings 0, income I_0).
struct SimulationResult {
    std::vector<double> holdings;      // H_t at the year-t payout event
    std::vector<double> total_income;  // I_t + (p̂_t + d_t) H_t
    std::vector<double> inflow;        // c I_t
    std::vector<double> principal_out; // p̂_t H_t
    std::vector<double> dividend_out;  // d_t H_t
    double residual_holdings = 0.0;    // H_n (1 - p̂_n), post-liquidation

    int years() const { return static_cast<int>(holdings.size()) - 1; }
};

struct LossPoint {
    double c = 0.0;
    double loss = 0.0;
};

// Scanned (c, loss) pairs, c strictly increasing. Singular schedules are
// recorded with an infinite loss.
struct LossCurve {
    std::vector<LossPoint> points;
};

}  // namespace dip
