#include <doctest.h>

#include <algorithm>

#include "loadgame/cases.hpp"
#include "loadgame/errors.hpp"
#include "loadgame/random_scenario.hpp"
#include "support.hpp"

using namespace testing;

namespace {

bool contains(const std::vector<LoadVector>& set, const LoadVector& v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

void check_against_oracle(const Scenario& s, std::mt19937_64& rng, std::int64_t max_opponent_milli, int draws) {
  const StrategyProfile start = initial_profile(s);
  for (std::size_t i = 0; i < s.game.players.size(); ++i) {
    const Player& p = s.game.players[i];
    for (int d = 0; d < draws; ++d) {
      const LoadVector others = random_opponents(rng, s.game.grid.slot_count, max_opponent_milli, 250);
      const auto br = best_response(p, start.schedules(i), {others}, s.utility, s.price);
      const auto oracle = oracle_best_response(p, others, s.game.grid, s.utility, s.price, s.solver.flex_quantum);
      CHECK(br.cost == oracle.best);
      CHECK(contains(oracle.argmins, br.aggregate));
      CHECK(aggregate_strategy(br.schedules, s.game.grid) == br.aggregate);
      for (std::size_t a = 0; a < p.appliances.size(); ++a) {
        CHECK(validate_schedule(p.appliances[a], br.schedules[a].x, s.game.grid).empty());
      }
    }
  }
}

}  // namespace

TEST_CASE("best response equals the exhaustive minimum") {
  std::mt19937_64 rng(55);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    for (auto kind : {UtilityKind::HourlyPrice, UtilityKind::ProRataCost, UtilityKind::ValueOfEnergy}) {
      check_against_oracle(random_small_scenario(seed, kind), rng, 8000, 3);
    }
  }
}

TEST_CASE("large opponent loads leave the integer fast path exact") {
  std::mt19937_64 rng(56);
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    Scenario s = random_small_scenario(seed);
    s.price = PowerLaw{q("0.75"), Rational(8)};
    check_against_oracle(s, rng, 900'000'000, 2);
  }
}

TEST_CASE("non-integer exponents and the log model") {
  std::mt19937_64 rng(57);
  for (std::uint64_t seed = 200; seed < 210; ++seed) {
    Scenario s = random_small_scenario(seed);
    s.price = seed % 2 ? PriceModel{PowerLaw{q("1"), q("1.5")}} : PriceModel{LoadLog{q("0.5")}};
    check_against_oracle(s, rng, 8000, 2);
  }
}

TEST_CASE("serial and parallel search agree") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Scenario s = random_scenario(4, 24, seed);
    const StrategyProfile start = initial_profile(s);
    for (std::size_t i = 0; i < s.game.players.size(); ++i) {
      BestResponseOptions serial, parallel;
      parallel.execution = Execution::Parallel;
      const OpponentAggregate others{start.others_load(i)};
      const auto a = best_response(s.game.players[i], start.schedules(i), others, s.utility, s.price, serial);
      const auto b = best_response(s.game.players[i], start.schedules(i), others, s.utility, s.price, parallel);
      CHECK(a.schedules == b.schedules);
      CHECK(a.cost == b.cost);
    }
  }
}

TEST_CASE("improvement flag and incumbent cost") {
  const Scenario s = *build_case(CaseId::Table10_11).scenario;
  const StrategyProfile start = initial_profile(s);
  const auto br = best_response(s.game.players[0], start.schedules(0), {start.others_load(0)}, s.utility, s.price);
  CHECK(br.improved);
  CHECK(br.incumbent_cost == utility(start, 0, s.utility, s.price));
  CHECK(br.aggregate == loads({"3", "2"}));
  const auto again = best_response(s.game.players[0], br.schedules, {start.others_load(0)}, s.utility, s.price);
  CHECK_FALSE(again.improved);
  CHECK(again.cost == br.cost);
  BestResponseOptions loose;
  loose.tolerance = q("0.02");
  CHECK_FALSE(best_response(s.game.players[0], start.schedules(0), {start.others_load(0)}, s.utility, s.price, loose).improved);
}

TEST_CASE("ties resolve to the earliest choice") {
  const TimeGrid g{3, Rational(1)};
  const Player p{"p", {{"wash", ShiftableProfile{loads({"1"}), 0, 2}}}};
  const Schedules inc{{"wash", loads({"0", "0", "1"})}};
  const auto br = best_response(p, inc, {loads({"2", "2", "2"})}, HourlyPrice{}, PowerLaw{});
  CHECK(br.aggregate == loads({"1", "0", "0"}));
  CHECK_FALSE(br.improved);
}

TEST_CASE("marginal allocation") {
  const Appliance car{"car", ShiftableFlexible{kwh("20"), kwh("0.01"), kwh("4"), 0, 8}};
  const PriceVector flat(24, Price::parse("25"));
  CHECK(marginal_allocation(car, flat, kwh("0.5")) ==
        loads({"4", "4", "4", "4", "4", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}));
  // Reactive prices: fill the emptiest slots first.
  const Appliance flex{"flex", ShiftableFlexible{kwh("3"), kwh("0"), kwh("3"), 0, 2}};
  CHECK(marginal_allocation(flex, loads({"2", "0", "1"}), PowerLaw{}, kwh("1")) == loads({"0", "2", "1"}));
  const Appliance wash{"wash", ShiftableProfile{loads({"1"}), 0, 2}};
  CHECK_THROWS_AS(marginal_allocation(wash, flat, kwh("1")), MisuseError);
}

TEST_CASE("infeasible incumbents and oversize searches are reported") {
  const TimeGrid g{3, Rational(1)};
  const Player p{"p", {{"flex", ShiftableFlexible{kwh("3"), kwh("0"), kwh("3"), 0, 2}}}};
  BestResponseOptions bad;
  bad.flex_quantum = kwh("0.7");
  CHECK_THROWS_AS(best_response(p, {{"flex", loads({"3", "0", "0"})}}, {loads({"0", "0", "0"})}, HourlyPrice{}, PowerLaw{}, bad),
                  InfeasibleError);
  const Scenario big = random_scenario(1, 24, 3);
  BestResponseOptions tiny;
  tiny.strategy_cap = 2;
  CHECK_THROWS_AS(best_response(big.game.players[0], initial_profile(big).schedules(0), {LoadVector(24)}, big.utility,
                                big.price, tiny),
                  SizeError);
}
