#include "dip/model_economy.hpp"

#include <cmath>

namespace dip {

EconomyPath project_model_economy(double gdp_cagr, double income_cagr, int T, int base_year) {
    if (!std::isfinite(gdp_cagr) || !std::isfinite(income_cagr) ||
        gdp_cagr <= -1.0 || income_cagr <= -1.0)
        throw std::invalid_argument("growth rates must be finite and exceed -1");
    if (T < 1) throw std::invalid_argument("plan term T must be at least 1");

    std::vector<double> income(T + 1), gdp(T + 1);
    for (int t = 0; t <= T; ++t) {
        income[t] = std::pow(1.0 + income_cagr, t);
        gdp[t] = std::pow(1.0 + gdp_cagr, t);
    }
    return EconomyPath(base_year, std::move(income), std::move(gdp));
}

std::vector<double> deflate(const std::vector<double>& nominal,
                            const std::vector<double>& cpi,
                            std::size_t base_index) {
    if (nominal.size() != cpi.size())
        throw std::invalid_argument("nominal and cpi series must have equal length");
    if (base_index >= cpi.size())
        throw std::invalid_argument("base index out of range");
    for (double v : cpi) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("cpi entries must be positive and finite");
    }
    std::vector<double> real(nominal.size());
    const double base = cpi[base_index];
    for (std::size_t t = 0; t < nominal.size(); ++t) real[t] = nominal[t] * base / cpi[t];
    return real;
}

double real_rate(double nominal, double inflation, RealRateMode mode) {
    if (!std::isfinite(nominal) || !std::isfinite(inflation) || inflation <= -1.0)
        throw std::invalid_argument("rates must be finite and inflation must exceed -1");
    switch (mode) {
        case RealRateMode::Ratio: return (1.0 + nominal) / (1.0 + inflation) - 1.0;
        case RealRateMode::Subtract: return nominal - inflation;
    }
    throw std::logic_error("unknown real-rate mode");
}

double holdings_growth_rate(double index_cagr, double dividend_yield,
                            double inflation, RealRateMode mode) {
    return real_rate(index_cagr - dividend_yield, inflation, mode);
}

MarketPath model_market_path(const PlanParams& params, int T) {
    params.validate();
    if (T < 1) throw std::invalid_argument("plan term T must be at least 1");
    std::vector<double> growth(T + 1, params.s), yield(T + 1, params.d);
    growth[0] = 0.0;
    yield[0] = 0.0;
    return MarketPath(std::move(growth), std::move(yield));
}

}  // namespace dip
