#include <doctest.h>

#include <set>

#include "loadgame/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const TimeGrid kThree{3, Rational(1)};

Appliance profile(std::string id, LoadVector load, std::size_t s, std::size_t e) {
  return {std::move(id), ShiftableProfile{std::move(load), s, e}};
}

Appliance flexible(std::string id, std::string_view total, std::string_view pmin, std::string_view pmax, std::size_t s,
                   std::size_t e) {
  return {std::move(id), ShiftableFlexible{kwh(total), kwh(pmin), kwh(pmax), s, e}};
}

}  // namespace

TEST_CASE("grid and appliance validation") {
  CHECK_THROWS_AS((TimeGrid{0, Rational(1)}.validate()), DomainError);
  CHECK_THROWS_AS((TimeGrid{3, Rational(0)}.validate()), DomainError);
  CHECK_THROWS_AS(validate_appliance(profile("wash", loads({"1"}), 2, 1), kThree), DomainError);
  CHECK_THROWS_AS(validate_appliance(profile("wash", loads({"1", "1", "1"}), 1, 2), kThree), DomainError);
  CHECK_THROWS_AS(validate_appliance({"f", FixedProfile{loads({"1"})}}, kThree), DimensionError);
  CHECK_THROWS_AS(validate_appliance(flexible("car", "9", "0", "2", 0, 2), kThree), DomainError);
  CHECK_THROWS_AS(validate_appliance(flexible("car", "1", "2", "1", 0, 2), kThree), DomainError);
  CHECK_NOTHROW(validate_appliance(flexible("car", "6", "0", "2", 0, 2), kThree));
  Player p{"p", {profile("a", loads({"1"}), 0, 2), profile("a", loads({"1"}), 0, 2)}};
  CHECK_THROWS_AS(validate_player(p, kThree), DomainError);
  Game g{kThree, {Player{"x", {}}, Player{"x", {}}}};
  CHECK_THROWS_AS(g.validate(), DomainError);
  CHECK_THROWS_AS(Game{}.player_index("nobody"), MissingPlayerError);
}

TEST_CASE("schedule validation reports each violation kind") {
  const auto wash = profile("wash", loads({"1", "2"}), 0, 2);
  CHECK(validate_schedule(wash, loads({"0", "1", "2"}), kThree).empty());
  CHECK(validate_schedule(wash, loads({"1", "2"}), kThree).front().kind == ViolationKind::LengthMismatch);
  CHECK(validate_schedule(wash, loads({"2", "1", "0"}), kThree).front().kind == ViolationKind::ProfileMismatch);
  const auto car = flexible("car", "3", "1", "2", 1, 2);
  CHECK(validate_schedule(car, loads({"0", "1", "2"}), kThree).empty());
  CHECK(validate_schedule(car, loads({"1", "0", "2"}), kThree).front().kind == ViolationKind::WindowBreach);
  CHECK(validate_schedule(car, loads({"0", "0.5", "2.5"}), kThree).front().kind == ViolationKind::PowerBound);
  CHECK(validate_schedule(car, loads({"0", "1", "1"}), kThree).front().kind == ViolationKind::EnergySum);
  const Appliance tv{"tv", FixedProfile{loads({"1", "0", "1"})}};
  CHECK(validate_schedule(tv, loads({"1", "0", "1"}), kThree).empty());
  CHECK(validate_schedule(tv, loads({"1", "1", "0"}), kThree).front().kind == ViolationKind::ProfileMismatch);
}

TEST_CASE("profile placement") {
  const ShiftableProfile wash{loads({"1", "2"}), 0, 2};
  CHECK(place_profile("wash", wash, 1, kThree) == loads({"0", "1", "2"}));
  CHECK_THROWS_AS(place_profile("wash", wash, 2, kThree), InfeasibleError);
  CHECK(feasible_start_count(wash) == 2);
}

TEST_CASE("flexible quanta must divide the energy") {
  const ShiftableFlexible car{kwh("3"), kwh("0"), kwh("2"), 0, 2};
  CHECK(flexible_quanta("car", car, kwh("0.5")) == 6);
  CHECK_THROWS_AS(flexible_quanta("car", car, kwh("0.7")), InfeasibleError);
}

TEST_CASE("appliance choices match an independent count") {
  // 3 kWh in 1 kWh quanta over 3 slots, at most 2 per slot: compositions of 3
  // into 3 parts each in [0,2] = 7.
  const auto car = flexible("car", "3", "0", "2", 0, 2);
  const auto choices = appliance_choices(car, kThree, kwh("1"), 1000);
  CHECK(choices.size() == 7);
  CHECK(count_appliance_choices(car, kThree, kwh("1")) == 7);
  CHECK(choices.front() == loads({"2", "1", "0"}));
  std::set<std::vector<std::int64_t>> distinct;
  for (const auto& c : choices) {
    CHECK(validate_schedule(car, c, kThree).empty());
    std::vector<std::int64_t> m;
    for (auto e : c) m.push_back(e.milli());
    distinct.insert(m);
  }
  CHECK(distinct.size() == choices.size());
  // Semi-continuous: pmin 2 forbids single quanta.
  const auto semi = flexible("semi", "4", "2", "4", 0, 2);
  CHECK(appliance_choices(semi, kThree, kwh("1"), 1000).size() == 6);  // 4 in one of 3 slots, or 2+2 in 3 pairs
  CHECK_THROWS_AS(appliance_choices(car, kThree, kwh("1"), 3), SizeError);
}

TEST_CASE("enumeration deduplicates by aggregate") {
  const TimeGrid day{24, Rational(1)};
  const Player p{"h", {profile("dryer", loads({"1"}), 0, 23), profile("dishwasher", loads({"1"}), 0, 23)}};
  const auto set = enumerate_pure_strategies(p, day, kwh("0.5"));
  CHECK(set.raw_combinations == 576);
  CHECK(set.strategies.size() == 24 + 24 * 23 / 2);
  CHECK_THROWS_AS(enumerate_pure_strategies(p, day, kwh("0.5"), 100), SizeError);
  try {
    enumerate_pure_strategies(p, day, kwh("0.5"), 100);
  } catch (const SizeError& e) {
    CHECK(e.product == 576);
  }
}

TEST_CASE("strategy profile bookkeeping") {
  const Player a{"a", {{"tv", FixedProfile{loads({"1", "0", "1"})}}, profile("wash", loads({"2"}), 0, 2)}};
  const Player b{"b", {profile("wash", loads({"1"}), 0, 2)}};
  const Schedules sa = earliest_feasible_schedules(a, kThree, kwh("0.5"));
  const Schedules sb = earliest_feasible_schedules(b, kThree, kwh("0.5"));
  const StrategyProfile prof(kThree, {"a", "b"}, {sa, sb});
  CHECK(prof.aggregate(0) == loads({"3", "0", "1"}));
  CHECK(prof.total_load() == loads({"4", "0", "1"}));
  CHECK(prof.others_load(0) == loads({"1", "0", "0"}));
  CHECK(prof.total_energy() == kwh("5"));
  Schedules moved = sb;
  moved[0].x = loads({"0", "0", "1"});
  const StrategyProfile next = prof.with_player(1, moved);
  CHECK(next.total_load() == loads({"3", "0", "2"}));
  CHECK(prof.total_load() == loads({"4", "0", "1"}));
  CHECK_THROWS_AS(prof.aggregate(2), MissingPlayerError);
  CHECK_THROWS_AS(aggregate_strategy(std::vector<ApplianceSchedule>{{"x", loads({"1"})}}, kThree), DimensionError);
}
