#include <doctest.h>

#include <cmath>

#include "loadgame/cases.hpp"
#include "loadgame/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

StrategyProfile two_player_profile(std::size_t slot1, std::size_t slot2) {
  const Scenario s = *build_case(CaseId::Table6_9).scenario;
  auto sched = [&](std::size_t i, std::size_t slot) {
    Schedules out = earliest_feasible_schedules(s.game.players[i], s.game.grid, kwh("0.5"));
    const auto& prof = std::get<ShiftableProfile>(s.game.players[i].appliances[1].kind);
    out[1].x = place_profile("shiftable", prof, slot, s.game.grid);
    return out;
  };
  return StrategyProfile(s.game.grid, {"pl1", "pl2"}, {sched(0, slot1), sched(1, slot2)});
}

}  // namespace

TEST_CASE("hourly bill") {
  const PriceModel square = PowerLaw{Rational(1), Rational(2)};
  const auto both_first = two_player_profile(0, 0);
  // 30.25 * 3 / 100 and 30.25 * 2.5 / 100 + 25 * 5 / 100
  CHECK(player_cost_hourly(both_first, 0, square) == eur("0.9075"));
  CHECK(player_cost_hourly(both_first, "pl2", square) == eur("2.00625"));
  CHECK(utility(both_first, 1, HourlyPrice{}, square) == eur("2.00625"));
  CHECK(bill(price_vector(square, both_first.total_load()), both_first.aggregate(0)) == eur("0.9075"));
}

TEST_CASE("hourly bills sum to production cost") {
  const PriceModel square = PowerLaw{Rational(1), Rational(2)};
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const auto p = two_player_profile(a, b);
      CHECK(player_cost_hourly(p, 0, square) + player_cost_hourly(p, 1, square) ==
            production_cost(square, p.total_load()).total);
      CHECK(player_cost_prorata(p, 0, square) + player_cost_prorata(p, 1, square) ==
            production_cost(square, p.total_load()).total);
    }
  }
}

TEST_CASE("pro-rata share") {
  const PriceModel square = PowerLaw{Rational(1), Rational(2)};
  const auto p = two_player_profile(0, 0);
  const Money total = production_cost(square, p.total_load()).total;
  CHECK(player_cost_prorata(p, 0, square) == total * Rational(3, 10) / q("1.05"));
  CHECK(player_cost_prorata(p, "pl2", square) == total * q("7.5") / q("10.5"));
  const StrategyProfile empty(TimeGrid{2, Rational(1)}, {"z"}, {Schedules{{"x", loads({"0", "0"})}}});
  CHECK_THROWS_AS(player_cost_prorata(empty, 0, square), DomainError);
}

TEST_CASE("value of energy") {
  const EnergyValuation v{kwh("10"), q("0.5")};
  const Money m = value_of_energy(Price::parse("20"), v, kwh("4"));
  CHECK(m.value().get_d() == doctest::Approx(0.2 * 10 * (1 - std::exp(-2.0))).epsilon(1e-14));
  CHECK(value_of_energy(Price::parse("20"), v, kwh("0")) == Money{});
  ValueOfEnergy model{Price::parse("20"), {{"pl1", v}, {"pl2", v}}};
  const PriceModel square = PowerLaw{Rational(1), Rational(2)};
  const auto p = two_player_profile(0, 2);
  CHECK(utility(p, 0, model, square) == player_cost_hourly(p, 0, square) - value_of_energy(model.p_avg, v, kwh("3")));
  CHECK_THROWS_AS(valuation_for(model, "pl3"), MissingPlayerError);
}

TEST_CASE("utility model validation") {
  const Game g = build_case(CaseId::Table6_9).scenario->game;
  CHECK_NOTHROW(validate_utility_model(HourlyPrice{}, g));
  ValueOfEnergy missing{Price::parse("20"), {{"pl1", {kwh("10"), q("0.5")}}}};
  CHECK_THROWS(validate_utility_model(missing, g));
  ValueOfEnergy small{Price::parse("20"), {{"pl1", {kwh("1"), q("0.5")}}, {"pl2", {kwh("10"), q("0.5")}}}};
  CHECK_THROWS(validate_utility_model(small, g));
  ValueOfEnergy omega{Price::parse("20"), {{"pl1", {kwh("10"), q("0")}}, {"pl2", {kwh("10"), q("0.5")}}}};
  CHECK_THROWS(validate_utility_model(omega, g));
  CHECK(utility_name(ProRataCost{}) == "pro_rata_cost");
}
