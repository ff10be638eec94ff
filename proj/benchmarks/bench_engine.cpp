#include <benchmark/benchmark.h>

#include "dip/model_economy.hpp"
#include "dip/optimize.hpp"
#include "dip/schedule.hpp"
#include "dip/simulate.hpp"

namespace {

const dip::EconomyPath kEconomy = dip::project_model_economy(0.012, 0.006, 45);
const dip::PlanParams kParams{0.0872, 45, 0.023, 0.039};

void BM_SolveSchedule(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(dip::solve_schedule(kEconomy, kParams));
    }
}
BENCHMARK(BM_SolveSchedule);

void BM_Simulate(benchmark::State& state) {
    const dip::SolvedSchedule solved = dip::solve_schedule(kEconomy, kParams);
    const dip::MarketPath market = dip::model_market_path(kParams, 45);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dip::simulate(kEconomy, market, solved.schedule, kParams));
    }
}
BENCHMARK(BM_Simulate);

void BM_Loss(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(dip::loss(0.0872, kEconomy, kParams));
    }
}
BENCHMARK(BM_Loss);

void BM_OptimizeDefaultGrid(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(dip::optimize_c(kEconomy, kParams, dip::GridSpec{}));
    }
}
BENCHMARK(BM_OptimizeDefaultGrid);

}  // namespace

BENCHMARK_MAIN();
