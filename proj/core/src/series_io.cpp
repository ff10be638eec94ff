#include "dip/series_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dip/model_economy.hpp"

namespace dip {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw DataError(path.string() + ": " + what);
}

[[noreturn]] void fail_line(const std::filesystem::path& path, int line, const std::string& what) {
    fail(path, "line " + std::to_string(line) + ": " + what);
}

// Requires the whole token to parse; "NaN"/"inf" count as malformed values.
double parse_value(const std::string& token, const std::filesystem::path& path, int line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
        fail_line(path, line, "malformed value '" + token + "'");
    return v;
}

int parse_year(const std::string& token, const std::filesystem::path& path, int line) {
    errno = 0;
    char* end = nullptr;
    const long y = std::strtol(token.c_str(), &end, 10);
    if (end == token.c_str() || *end != '\0' || errno == ERANGE)
        fail_line(path, line, "malformed year '" + token + "'");
    return static_cast<int>(y);
}

void require_coverage(const AnnualSeries& series, int from_year, int to_year) {
    if (series.rows.empty() || series.first_year() > from_year || series.last_year() < to_year) {
        std::string missing;
        for (int y = from_year; y <= to_year; ++y) {
            if (series.rows.empty() || !series.covers(y)) {
                if (!missing.empty()) missing += ", ";
                missing += std::to_string(y);
            }
        }
        throw DataError("series '" + series.name + "' is missing years: " + missing);
    }
}

void require_positive(const AnnualSeries& series, int from_year, int to_year) {
    for (int y = from_year; y <= to_year; ++y) {
        if (!(series.at(y) > 0.0))
            throw DataError("series '" + series.name + "' has a non-positive value in year " +
                            std::to_string(y));
    }
}

}  // namespace

AnnualSeries load_series(const std::filesystem::path& path, const std::string& expected_name) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");

    std::string line;
    if (!std::getline(in, line)) fail(path, "empty file, expected 'year,value' header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "year,value") fail_line(path, 1, "expected header 'year,value', got '" + line + "'");

    AnnualSeries series;
    series.name = expected_name;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            fail_line(path, line_no, "expected exactly two fields 'year,value'");
        const int year = parse_year(line.substr(0, comma), path, line_no);
        const double value = parse_value(line.substr(comma + 1), path, line_no);
        if (!series.rows.empty()) {
            const int prev = series.rows.back().first;
            if (year == prev) fail_line(path, line_no, "duplicate year " + std::to_string(year));
            if (year < prev)
                fail_line(path, line_no, "years out of order at " + std::to_string(year));
            if (year > prev + 1)
                fail_line(path, line_no, "gap in years: missing " + std::to_string(prev + 1));
        }
        series.rows.emplace_back(year, value);
    }
    if (series.rows.empty()) fail(path, "no data rows");
    return series;
}

HistoricalPaths build_historical_paths(const AnnualSeries& cpi, const AnnualSeries& sp500,
                                       const AnnualSeries& div_yield, const AnnualSeries& income,
                                       const AnnualSeries& gdp, const YearWindow& window,
                                       int base_year) {
    if (window.start_year > window.end_year)
        throw DataError("window start year exceeds end year");
    if (window.start_year != base_year + 1)
        throw DataError("window must start the year after the base year (base " +
                        std::to_string(base_year) + ", window starts " +
                        std::to_string(window.start_year) + ")");

    for (const AnnualSeries* s : {&cpi, &sp500, &div_yield, &income, &gdp})
        require_coverage(*s, base_year, window.end_year);
    for (const AnnualSeries* s : {&cpi, &sp500, &income, &gdp})
        require_positive(*s, base_year, window.end_year);

    const int n = window.end_year - base_year;

    std::vector<double> cpi_v(n + 1), income_v(n + 1), gdp_v(n + 1);
    for (int t = 0; t <= n; ++t) {
        cpi_v[t] = cpi.at(base_year + t);
        income_v[t] = income.at(base_year + t);
        gdp_v[t] = gdp.at(base_year + t);
    }
    std::vector<double> real_income = deflate(income_v, cpi_v, 0);
    std::vector<double> real_gdp = deflate(gdp_v, cpi_v, 0);
    for (int t = n; t >= 0; --t) {
        real_income[t] /= real_income[0];
        real_gdp[t] /= real_gdp[0];
    }

    std::vector<double> growth(n + 1, 0.0), yield(n + 1, 0.0);
    for (int t = 1; t <= n; ++t) {
        const int y = base_year + t;
        growth[t] = (sp500.at(y) / sp500.at(y - 1)) * (cpi.at(y - 1) / cpi.at(y)) - 1.0;
        yield[t] = div_yield.at(y);
    }

    HistoricalPaths paths;
    paths.economy = EconomyPath(base_year, std::move(real_income), std::move(real_gdp));
    paths.market = MarketPath(std::move(growth), std::move(yield));
    return paths;
}

}  // namespace dip
