// Serial reference vs OpenMP for the two parallel kernels.
#include <benchmark/benchmark.h>

#include "loadgame/best_response.hpp"
#include "loadgame/payoff.hpp"
#include "loadgame/random_scenario.hpp"
#include "loadgame/scenario.hpp"

using namespace loadgame;

namespace {

// Three households, about 20k cells.
Scenario table_game() {
  Scenario s;
  s.game.grid.slot_count = 8;
  for (int i = 0; i < 3; ++i) {
    Player p{"h" + std::to_string(i + 1), {}};
    p.appliances.push_back({"base", FixedProfile{LoadVector(8, Energy::from_milli(250 * (i + 1)))}});
    p.appliances.push_back({"wash", ShiftableProfile{{Energy::from_kwh(1), Energy::from_milli(1500)}, 0, 7}});
    p.appliances.push_back({"dry", ShiftableProfile{{Energy::from_kwh(2)}, 2, 5}});
    s.game.players.push_back(std::move(p));
  }
  s.price = PowerLaw{Rational(1, 4), Rational(3)};
  s.utility = ProRataCost{};
  return s;
}

// One household with two day-long profiles and a flexible load.
Player search_player() {
  Player p{"h", {}};
  p.appliances.push_back({"wash", ShiftableProfile{{Energy::from_kwh(1), Energy::from_kwh(2)}, 0, 23}});
  p.appliances.push_back({"dish", ShiftableProfile{{Energy::from_milli(1500)}, 0, 23}});
  p.appliances.push_back({"car", ShiftableFlexible{Energy::from_kwh(12), Energy{}, Energy::from_kwh(3), 0, 10}});
  return p;
}

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_PayoffTable(benchmark::State& state) {
  const Scenario s = table_game();
  PayoffOptions opts;
  opts.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_payoff_table(s.game, s.utility, s.price, opts));
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}

void BM_BestResponse(benchmark::State& state) {
  const Player p = search_player();
  const TimeGrid grid{24, Rational(1)};
  const Schedules incumbent = earliest_feasible_schedules(p, grid, Energy::from_milli(500));
  LoadVector others(24);
  for (std::size_t h = 0; h < 24; ++h) others[h] = Energy::from_milli(static_cast<std::int64_t>(2000 + 500 * ((h * 7) % 9)));
  BestResponseOptions opts;
  opts.execution = mode(state);
  const PriceModel price = state.range(1) ? PriceModel{LoadLog{Rational(1)}} : PriceModel{PowerLaw{}};
  for (auto _ : state) benchmark::DoNotOptimize(best_response(p, incumbent, {others}, HourlyPrice{}, price, opts));
  state.SetLabel(std::string(state.range(0) ? "openmp" : "serial") + (state.range(1) ? ", log price" : ", power law"));
}

}  // namespace

BENCHMARK(BM_PayoffTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BestResponse)->Args({0, 0})->Args({1, 0})->Args({0, 1})->Args({1, 1})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
