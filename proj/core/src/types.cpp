#include "dip/types.hpp"

#include <cmath>

namespace dip {

void PlanParams::validate() const {
    if (!(c >= 0.0 && c < 1.0) || !std::isfinite(c))
        throw std::invalid_argument("contribution rate c must satisfy 0 <= c < 1");
    if (T < 1) throw std::invalid_argument("plan term T must be at least 1");
    if (!(d >= 0.0 && d < 1.0) || !std::isfinite(d))
        throw std::invalid_argument("dividend rate d must satisfy 0 <= d < 1");
    if (!(s > -1.0) || !std::isfinite(s))
        throw std::invalid_argument("real growth rate s must exceed -1");
}

EconomyPath::EconomyPath(int base_year, std::vector<double> income, std::vector<double> gdp)
    : base_year(base_year), income(std::move(income)), gdp(std::move(gdp)) {
    if (this->income.size() != this->gdp.size())
        throw std::invalid_argument("income and gdp series must have equal length");
    if (this->income.size() < 2)
        throw std::invalid_argument("economy path needs at least years 0 and 1");
    if (this->income[0] != 1.0 || this->gdp[0] != 1.0)
        throw std::invalid_argument("economy path must be normalized to 1 at the base year");
    for (std::size_t t = 0; t < this->income.size(); ++t) {
        if (!(this->income[t] > 0.0) || !std::isfinite(this->income[t]) ||
            !(this->gdp[t] > 0.0) || !std::isfinite(this->gdp[t]))
            throw std::invalid_argument("economy path entries must be positive and finite");
    }
}

MarketPath::MarketPath(std::vector<double> growth, std::vector<double> div_yield)
    : growth(std::move(growth)), div_yield(std::move(div_yield)) {
    if (this->growth.size() != this->div_yield.size())
        throw std::invalid_argument("growth and dividend yield series must have equal length");
    if (this->growth.empty())
        throw std::invalid_argument("market path must not be empty");
    for (std::size_t t = 1; t < this->growth.size(); ++t) {
        if (!(this->growth[t] > -1.0) || !std::isfinite(this->growth[t]))
            throw std::invalid_argument("market growth must exceed -1 in every year");
        if (!(this->div_yield[t] >= 0.0 && this->div_yield[t] < 1.0))
            throw std::invalid_argument("dividend yield must satisfy 0 <= d_t < 1");
    }
}

}  // namespace dip
