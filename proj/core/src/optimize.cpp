#include "dip/optimize.hpp"

#include <cmath>
#include <limits>

#include "dip/model_economy.hpp"
#include "dip/schedule.hpp"
#include "dip/simulate.hpp"

namespace dip {

double loss(double c, const EconomyPath& economy, const PlanParams& fixed) {
    PlanParams params = fixed;
    params.c = c;
    params.T = economy.years();
    SimulationResult sim;
    try {
        const SolvedSchedule solved = solve_schedule(economy, params);
        sim = simulate(economy, model_market_path(params, params.T), solved.schedule, params);
    } catch (const SingularScheduleError&) {
        return std::numeric_limits<double>::infinity();
    }
    double total = 0.0;
    for (int t = 1; t <= params.T; ++t)
        total += std::fabs(1.0 - sim.total_income[t] / economy.gdp[t]);
    return total;
}

OptimizeResult optimize_c(const EconomyPath& economy, const PlanParams& fixed,
                          const GridSpec& grid, double refine_tol) {
    if (!(grid.c_min >= 0.0) || !(grid.c_max < 1.0) || grid.c_min > grid.c_max)
        throw std::invalid_argument("grid must satisfy 0 <= c_min <= c_max < 1");
    if (!(grid.step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("refine tolerance must be positive");

    const int n_points =
        static_cast<int>(std::floor((grid.c_max - grid.c_min) / grid.step + 1e-9)) + 1;

    OptimizeResult result;
    result.curve.points.reserve(n_points);
    int best = 0;
    double best_loss = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_points; ++k) {
        const double c = grid.c_min + k * grid.step;
        const double l = loss(c, economy, fixed);
        result.curve.points.push_back({c, l});
        if (l < best_loss) {  // ties keep the smaller c
            best_loss = l;
            best = k;
        }
    }

    double c_star = result.curve.points[best].c;
    double loss_star = best_loss;

    if (n_points > 1 && std::isfinite(best_loss)) {
        // Golden-section refinement between the best point's neighbors.
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = std::max(grid.c_min, c_star - grid.step);
        double b = std::min(grid.c_max, c_star + grid.step);
        double x1 = b - inv_phi * (b - a);
        double x2 = a + inv_phi * (b - a);
        double f1 = loss(x1, economy, fixed);
        double f2 = loss(x2, economy, fixed);
        while (b - a > refine_tol) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = loss(x1, economy, fixed);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = loss(x2, economy, fixed);
            }
        }
        const double mid = 0.5 * (a + b);
        const double f_mid = loss(mid, economy, fixed);
        if (f_mid <= loss_star) {
            c_star = mid;
            loss_star = f_mid;
        }
    }

    result.c_star = c_star;
    result.loss = loss_star;
    return result;
}

}  // namespace dip
