#include "dip/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace dip {

double implied_holdings(double gdp, double income, double payout, double div_rate) {
    const double denom = payout + div_rate;
    if (denom == 0.0)
        throw SingularScheduleError(0, "payout plus dividend rate is zero, schedule is singular");
    return (gdp - income) / denom;
}

double alpha(double gdp_t, double income_t, double gdp_next, double income_next,
             double payout_next, double c, double s, double d, int year) {
    const double gap = gdp_t - income_t;
    if (gap == 0.0)
        throw SingularScheduleError(year, "GDP equals income, gap divisor vanishes");
    const double denom = (payout_next + d) * (1.0 + s);
    if (denom == 0.0)
        throw SingularScheduleError(year, "next-year payout plus dividend rate is zero");
    return ((gdp_next - income_next) / denom - c * income_t) / gap;
}

double payout_from_alpha(double alpha_t, double div_rate, int year) {
    if (alpha_t == -1.0)
        throw SingularScheduleError(year, "alpha equals -1, payout undefined");
    return (1.0 - div_rate * alpha_t) / (1.0 + alpha_t);
}

SolvedSchedule solve_schedule(const EconomyPath& economy, const PlanParams& params) {
    params.validate();
    const int T = params.T;
    if (economy.years() != T)
        throw std::invalid_argument("economy path does not span the plan term");
    for (int t = 1; t <= T; ++t) {
        if (!(economy.gdp[t] > economy.income[t]))
            throw SingularScheduleError(t, "GDP does not exceed income, recursion undefined");
    }

    PayoutSchedule sched;
    sched.raw.assign(T + 1, 0.0);
    sched.clamped.assign(T + 1, 0.0);
    AlphaTrace trace;
    trace.alpha.assign(T + 1, 0.0);

    sched.raw[T] = 1.0;  // full liquidation at term end
    for (int t = T - 1; t >= 1; --t) {
        const double p_next = sched.raw[t + 1];
        if (p_next + params.d <= 0.0)
            throw SingularScheduleError(t + 1, "payout plus dividend rate is not positive");
        const double a = alpha(economy.gdp[t], economy.income[t],
                               economy.gdp[t + 1], economy.income[t + 1],
                               p_next, params.c, params.s, params.d, t);
        trace.alpha[t] = a;
        sched.raw[t] = payout_from_alpha(a, params.d, t);
        if (!std::isfinite(sched.raw[t]))
            throw SingularScheduleError(t, "payout is not finite");
    }
    for (int t = 1; t <= T; ++t)
        sched.clamped[t] = std::clamp(sched.raw[t], 0.0, 1.0);

    return SolvedSchedule{std::move(sched), std::move(trace)};
}

}  // namespace dip
