#pragma once

#include "dip/types.hpp"

namespace dip {

// Holdings level that makes total income equal GDP in a year:
// H = (G - I) / (p + d).
double implied_holdings(double gdp, double income, double payout, double div_rate);

// alpha_t, the backward-recursion intermediate:
// ((G_{t+1} - I_{t+1}) / ((p_{t+1} + d)(1 + s)) - c I_t) / (G_t - I_t).
// Throws SingularScheduleError when the gap G_t - I_t vanishes.
double alpha(double gdp_t, double income_t, double gdp_next, double income_next,
             double payout_next, double c, double s, double d, int year = 0);

// Invert alpha into the year's payout fraction: p = (1 - d a) / (1 + a).
// The result is unclamped and may fall outside [0, 1].
double payout_from_alpha(double alpha_t, double div_rate, int year = 0);

// Solve the payout schedule backward from the boundary p_T = 1. The
// recursion consumes raw (unclamped) payouts; clamped[t] = min(max(raw,0),1)
// is filled in for consumers. Requires G_t > I_t for t >= 1.
SolvedSchedule solve_schedule(const EconomyPath& economy, const PlanParams& params);

}  // namespace dip
