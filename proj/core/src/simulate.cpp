#include "dip/simulate.hpp"

#include <cmath>

namespace dip {

double step_holdings(double holdings, double payout_clamped, double c,
                     double income, double growth) {
    if (holdings < 0.0) throw std::invalid_argument("holdings must be nonnegative");
    if (payout_clamped < 0.0 || payout_clamped > 1.0)
        throw std::invalid_argument("clamped payout must lie in [0, 1]");
    if (!(growth > -1.0)) throw std::invalid_argument("growth must exceed -1");
    return (holdings * (1.0 - payout_clamped) + c * income) * (1.0 + growth);
}

SimulationResult simulate(const EconomyPath& economy, const MarketPath& market,
                          const PayoutSchedule& schedule, const PlanParams& params) {
    params.validate();
    const int n = economy.years();
    if (market.years() != n)
        throw std::invalid_argument("market path does not span the simulated years");
    if (schedule.term() < n)
        throw std::invalid_argument("schedule is shorter than the simulated years");

    SimulationResult r;
    r.holdings.assign(n + 1, 0.0);
    r.total_income.assign(n + 1, 0.0);
    r.inflow.assign(n + 1, 0.0);
    r.principal_out.assign(n + 1, 0.0);
    r.dividend_out.assign(n + 1, 0.0);

    r.total_income[0] = economy.income[0];
    r.inflow[0] = params.c * economy.income[0];

    for (int t = 1; t <= n; ++t) {
        r.holdings[t] = step_holdings(r.holdings[t - 1], schedule.clamped[t - 1],
                                      params.c, economy.income[t - 1], market.growth[t]);
        const double p_hat = schedule.clamped[t];
        const double d_t = market.div_yield[t];
        r.principal_out[t] = p_hat * r.holdings[t];
        r.dividend_out[t] = d_t * r.holdings[t];
        r.total_income[t] = economy.income[t] + (p_hat + d_t) * r.holdings[t];
        r.inflow[t] = params.c * economy.income[t];
    }
    r.residual_holdings = r.holdings[n] * (1.0 - schedule.clamped[n]);
    return r;
}

std::vector<double> pay_raise_comparator(const EconomyPath& economy, double c) {
    std::vector<double> raised(economy.income.size());
    for (std::size_t t = 0; t < raised.size(); ++t) raised[t] = economy.income[t] * (1.0 + c);
    return raised;
}

double aggregate_holdings(double mean_holdings_per_worker, double workforce) {
    if (mean_holdings_per_worker < 0.0 || workforce < 0.0)
        throw std::invalid_argument("aggregate holdings inputs must be nonnegative");
    return mean_holdings_per_worker * workforce;
}

int ramp_years(const PayoutSchedule& schedule) {
    int ramp = 0;
    for (int t = 1; t <= schedule.term(); ++t) {
        if (schedule.raw[t] < 0.0)
            ramp = t;
        else
            break;
    }
    return ramp;
}

int flow_crossover_year(const SimulationResult& result) {
    int last = 0;
    for (int t = 1; t <= result.years(); ++t) {
        if (result.inflow[t] > result.principal_out[t] + result.dividend_out[t]) last = t;
    }
    return last;
}

int comparator_crossover_year(const SimulationResult& result,
                              const std::vector<double>& comparator) {
    for (int t = 1; t <= result.years(); ++t) {
        if (result.total_income[t] > comparator[t]) return t;
    }
    return 0;
}

double mean_holdings_income_units(const SimulationResult& result, const EconomyPath& economy) {
    const int n = result.years();
    double sum = 0.0;
    for (int t = 1; t <= n; ++t) sum += result.holdings[t] / economy.income[t];
    return sum / n;
}

}  // namespace dip
