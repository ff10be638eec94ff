#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "dip/model_economy.hpp"
#include "dip/schedule.hpp"
#include "support/oracle.hpp"

using namespace dip;

TEST_CASE("implied holdings hand-evaluated cases") {
    CHECK(implied_holdings(1.2, 1.0, 0.5, 0.0) == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(implied_holdings(1.0, 1.0, 0.3, 0.02) == 0.0);
    CHECK(implied_holdings(1.024, 1.012, 0.977, 0.023) == doctest::Approx(0.012).epsilon(1e-12));
    CHECK_THROWS_AS(implied_holdings(1.1, 1.0, 0.0, 0.0), SingularScheduleError);
}

TEST_CASE("alpha hand-evaluated cases") {
    // gap 0.1, next gap 0.2, p_next 1, d 0, s 0, c 0
    CHECK(alpha(1.1, 1.0, 1.3, 1.1, 1.0, 0.0, 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    // zero next gap and no contribution
    CHECK(alpha(1.1, 1.0, 1.2, 1.2, 0.7, 0.0, 0.05, 0.01) == 0.0);
    // gap 0.1, next gap 0.11, p_next 1, d 0, s 0.1: (0.11/1.1)/0.1
    CHECK(alpha(1.1, 1.0, 1.21, 1.1, 1.0, 0.0, 0.1, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(alpha(1.0, 1.0, 1.2, 1.1, 1.0, 0.0, 0.0, 0.0), SingularScheduleError);
}

TEST_CASE("payout from alpha hand-evaluated cases") {
    CHECK(payout_from_alpha(0.0, 0.0) == 1.0);
    CHECK(payout_from_alpha(0.0, 0.4) == 1.0);
    CHECK(payout_from_alpha(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(payout_from_alpha(2.0, 0.5) == 0.0);
    CHECK_THROWS_AS(payout_from_alpha(-1.0, 0.1), SingularScheduleError);
}

TEST_CASE("term of one is the boundary condition alone") {
    const EconomyPath economy = project_model_economy(0.012, 0.006, 1);
    PlanParams params{0.05, 1, 0.023, 0.039};
    const SolvedSchedule solved = solve_schedule(economy, params);
    CHECK(solved.schedule.term() == 1);
    CHECK(solved.schedule.raw[1] == 1.0);
    CHECK(solved.schedule.clamped[1] == 1.0);
}

TEST_CASE("solver names the year of a vanishing gap") {
    std::vector<double> income{1.0, 1.01, 1.03};
    std::vector<double> gdp{1.0, 1.02, 1.03};  // gap vanishes at t = 2
    const EconomyPath economy(1984, income, gdp);
    PlanParams params{0.05, 2, 0.02, 0.04};
    CHECK_THROWS_WITH_AS(solve_schedule(economy, params),
                         doctest::Contains("year 2"), SingularScheduleError);
}

TEST_CASE("solver errors out when a backward step loses the dividend floor") {
    // Large contributions drive early payouts below -d with the paper rates.
    const EconomyPath economy = project_model_economy(0.012, 0.006, 45);
    PlanParams params{0.12, 45, 0.023, 0.039};
    CHECK_THROWS_AS(solve_schedule(economy, params), SingularScheduleError);
}

TEST_CASE("boundary and clamp identities hold on random economies") {
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        const oracle::ToyCase toy = oracle::random_toy(rng);
        SolvedSchedule solved;
        try {
            solved = solve_schedule(toy.economy, toy.params);
        } catch (const SingularScheduleError&) {
            continue;
        }
        CHECK(solved.schedule.raw[toy.params.T] == 1.0);
        for (int t = 1; t <= toy.params.T; ++t) {
            const double expected = std::min(std::max(solved.schedule.raw[t], 0.0), 1.0);
            CHECK(solved.schedule.clamped[t] == expected);
        }
    }
}

TEST_CASE("implied holdings of consecutive raw payouts satisfy the forward law") {
    const EconomyPath economy = project_model_economy(0.012, 0.006, 45);
    PlanParams params{0.0872, 45, 0.023, 0.039};
    const SolvedSchedule solved = solve_schedule(economy, params);
    for (int t = 1; t < 45; ++t) {
        if (solved.schedule.raw[t] < 0.0 || solved.schedule.raw[t + 1] < 0.0) continue;
        const double h_t = implied_holdings(economy.gdp[t], economy.income[t],
                                            solved.schedule.raw[t], params.d);
        const double h_next = implied_holdings(economy.gdp[t + 1], economy.income[t + 1],
                                               solved.schedule.raw[t + 1], params.d);
        const double stepped = (h_t * (1.0 - solved.schedule.raw[t]) +
                                params.c * economy.income[t]) * (1.0 + params.s);
        CHECK(stepped == doctest::Approx(h_next).epsilon(1e-12));
    }
}

TEST_CASE("closed-form recursion matches the bisection oracle on a small economy") {
    const EconomyPath economy = project_model_economy(0.012, 0.006, 5);
    PlanParams params{0.05, 5, 0.023, 0.039};
    const SolvedSchedule solved = solve_schedule(economy, params);
    const std::vector<double> expected = oracle::solve_schedule(economy, params);
    for (int t = 1; t <= 5; ++t)
        CHECK(std::fabs(solved.schedule.raw[t] - expected[t]) < 1e-9);
}

TEST_CASE("closed-form recursion matches the bisection oracle on random toys") {
    std::mt19937 rng(101);
    int compared = 0;
    int draws = 0;
    while (compared < 25 && draws < 2000) {
        ++draws;
        const oracle::ToyCase toy = oracle::random_toy(rng);
        SolvedSchedule solved;
        try {
            solved = solve_schedule(toy.economy, toy.params);
        } catch (const SingularScheduleError&) {
            continue;
        }
        const std::vector<double> expected = oracle::solve_schedule(toy.economy, toy.params);
        for (int t = 1; t <= toy.params.T; ++t)
            CHECK(std::fabs(solved.schedule.raw[t] - expected[t]) < 1e-9);
        ++compared;
    }
    CHECK(compared == 25);
}
