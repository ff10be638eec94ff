#pragma once

#include <filesystem>
#include <utility>

#include "dip/types.hpp"

namespace dip {

// A named annual series: strictly increasing, gap-free years with finite
// values.
struct AnnualSeries {
    std::string name;
    std::vector<std::pair<int, double>> rows;  // (year, value)

    int first_year() const { return rows.front().first; }
    int last_year() const { return rows.back().first; }
    bool covers(int year) const { return year >= first_year() && year <= last_year(); }
    double at(int year) const { return rows[static_cast<std::size_t>(year - first_year())].second; }
};

struct YearWindow {
    int start_year = 0;
    int end_year = 0;
};

struct HistoricalPaths {
    EconomyPath economy;
    MarketPath market;
};

// Load a `year,value` CSV. Rejects missing files, malformed rows (reported
// with their line number), duplicate years, gaps, and non-finite values.
AnnualSeries load_series(const std::filesystem::path& path, const std::string& expected_name);

// Deflate income and GDP to base-year dollars normalized to 1 at the base
// year, and derive the per-year real market path:
// s_t = (sp500[t]/sp500[t-1]) * (cpi[t-1]/cpi[t]) - 1, d_t from the yield
// series. The window must start the year after base_year and every series
// must cover base_year..end_year.
HistoricalPaths build_historical_paths(const AnnualSeries& cpi, const AnnualSeries& sp500,
                                       const AnnualSeries& div_yield, const AnnualSeries& income,
                                       const AnnualSeries& gdp, const YearWindow& window,
                                       int base_year);

}  // namespace dip
