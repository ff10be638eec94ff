#pragma once

#include "dip/types.hpp"

namespace dip {

// Compound the model economy: I_t = (1+income_cagr)^t, G_t = (1+gdp_cagr)^t
// for t = 0..T. Both series are normalized to 1 at the base year (t = 0).
EconomyPath project_model_economy(double gdp_cagr, double income_cagr, int T,
                                  int base_year = 1984);

// Convert a nominal series to base-year real values:
// real[t] = nominal[t] * cpi[base] / cpi[t].
std::vector<double> deflate(const std::vector<double>& nominal,
                            const std::vector<double>& cpi,
                            std::size_t base_index);

// Remove inflation from a nominal rate, either geometrically or by
// subtraction.
double real_rate(double nominal, double inflation, RealRateMode mode);

// Real growth rate of the invested principal. Dividends are paid out as
// received rather than reinvested, so the index CAGR is netted of the
// dividend yield before deflating.
double holdings_growth_rate(double index_cagr, double dividend_yield,
                            double inflation, RealRateMode mode);

// Constant-rate market path matching an economy of T plan years.
MarketPath model_market_path(const PlanParams& params, int T);

}  // namespace dip
