#pragma once

#include "dip/types.hpp"

namespace dip {

// One year of the forward law: (H (1 - p̂) + c I) (1 + s).
double step_holdings(double holdings, double payout_clamped, double c,
                     double income, double growth);

// Forward-simulate the plan from a zero-holdings start. Simulates
// n = economy.years() plan years; the schedule may cover a longer term
// (historical replay of a model schedule), in which case only its first n
// years are consumed and residual holdings stay positive.
SimulationResult simulate(const EconomyPath& economy, const MarketPath& market,
                          const PayoutSchedule& schedule, const PlanParams& params);

// The same wage budget paid directly as salary: I_t (1 + c) for t = 0..n.
std::vector<double> pay_raise_comparator(const EconomyPath& economy, double c);

// Equilibrium plan size: mean holdings per worker times workforce size.
double aggregate_holdings(double mean_holdings_per_worker, double workforce);

// --- derived metrics over a simulation ---

// Number of leading plan years with raw payout < 0 (the clamped ramp).
int ramp_years(const PayoutSchedule& schedule);

// Last plan year t >= 1 with inflow > outflow, 0 if none. Outflow is
// principal plus dividends.
int flow_crossover_year(const SimulationResult& result);

// First plan year where total income exceeds the pay-raise comparator,
// 0 if never.
int comparator_crossover_year(const SimulationResult& result,
                              const std::vector<double>& comparator);

// Time-average over t = 1..n of holdings expressed in units of that year's
// income, H_t / I_t.
double mean_holdings_income_units(const SimulationResult& result,
                                  const EconomyPath& economy);

}  // namespace dip
