#pragma once

#include "dip/types.hpp"

namespace dip {

struct GridSpec {
    double c_min = 0.0;
    double c_max = 0.2;
    double step = 0.001;
};

struct OptimizeResult {
    double c_star = 0.0;
    double loss = 0.0;
    LossCurve curve;
};

// Appendix-style loss of a contribution rate: solve the schedule, simulate
// with clamped payouts, and sum |1 - Î_t/G_t| over plan years. Singular
// schedules score +infinity.
double loss(double c, const EconomyPath& economy, const PlanParams& fixed);

// Scan the grid, then refine around the best grid point by golden-section
// search. Ties on the grid break toward smaller c; the returned minimizer
// never scores worse than any scanned point.
OptimizeResult optimize_c(const EconomyPath& economy, const PlanParams& fixed,
                          const GridSpec& grid, double refine_tol = 1e-6);

}  // namespace dip
