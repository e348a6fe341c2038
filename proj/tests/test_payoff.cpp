#include <doctest.h>

#include <algorithm>

#include "loadgame/cases.hpp"
#include "loadgame/errors.hpp"
#include "loadgame/metrics.hpp"
#include "loadgame/payoff.hpp"
#include "loadgame/random_scenario.hpp"
#include "loadgame/report.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("cell encoding is mixed radix, first player most significant") {
  const PayoffTable t = payoff_table_from_costs({"a", "b", "c"}, {{"0", "1"}, {"0", "1", "2"}, {"0", "1"}},
                                                std::vector<std::vector<Money>>(12, std::vector<Money>(3)));
  CHECK(t.encode({1, 2, 1}) == 11);
  CHECK(t.encode({0, 1, 0}) == 2);
  CHECK(t.decode(7) == std::vector<std::size_t>{1, 0, 1});
  for (std::size_t c = 0; c < t.cell_count(); ++c) CHECK(t.encode(t.decode(c)) == c);
  // All costs equal: every cell is Nash.
  CHECK(find_pure_nash(t).size() == 12);
  CHECK_THROWS(payoff_table_from_costs({"a"}, {{"0", "1"}}, {{Money{}}}));
}

TEST_CASE("nash cells are exactly the cells where every player best-responds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Scenario s = random_small_scenario(seed, seed % 2 ? UtilityKind::HourlyPrice : UtilityKind::ProRataCost);
    const PayoffTable t = build_payoff_table(s.game, s.utility, s.price);
    for (std::size_t c = 0; c < t.cell_count(); ++c) {
      bool all = true;
      for (std::size_t i = 0; i < t.player_count(); ++i) all = all && t.best_response[c][i];
      CHECK(static_cast<bool>(t.nash[c]) == all);
    }
    // Potential games have a pure equilibrium; the production-cost minimizer is one.
    if (std::holds_alternative<ProRataCost>(s.utility)) {
      const auto nash = find_pure_nash(t);
      REQUIRE_FALSE(nash.empty());
      std::size_t argmin = 0;
      for (std::size_t c = 1; c < t.cell_count(); ++c) {
        if (production_cost(s.price, t.total_load[c]).total < production_cost(s.price, t.total_load[argmin]).total) argmin = c;
      }
      CHECK(t.nash[argmin]);
    }
    for (std::size_t k = 1; k < find_pure_nash(t).size(); ++k) {
      CHECK(find_pure_nash(t)[k - 1].total <= find_pure_nash(t)[k].total);
    }
  }
}

TEST_CASE("serial and parallel tables are identical") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Scenario s = random_small_scenario(seed, UtilityKind::ValueOfEnergy);
    PayoffOptions serial, parallel;
    serial.execution = Execution::Serial;
    parallel.execution = Execution::Parallel;
    const PayoffTable a = build_payoff_table(s.game, s.utility, s.price, serial);
    const PayoffTable b = build_payoff_table(s.game, s.utility, s.price, parallel);
    CHECK(a.costs == b.costs);
    CHECK(a.best_response == b.best_response);
    CHECK(a.nash == b.nash);
    CHECK(a.total_load == b.total_load);
  }
}

TEST_CASE("payoff costs match independent recomputation") {
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    const Scenario s = random_small_scenario(seed, UtilityKind::ProRataCost);
    const PayoffTable t = build_payoff_table(s.game, s.utility, s.price);
    for (std::size_t c = 0; c < t.cell_count(); ++c) {
      const auto choice = t.decode(c);
      for (std::size_t i = 0; i < t.player_count(); ++i) {
        LoadVector others(s.game.grid.slot_count);
        for (std::size_t j = 0; j < t.player_count(); ++j) {
          if (j == i) continue;
          for (std::size_t h = 0; h < others.size(); ++h) others[h] += t.strategies[j][choice[j]].aggregate[h];
        }
        CHECK(t.costs[c][i] ==
              oracle_cost(t.strategies[i][choice[i]].aggregate, others, t.player_ids[i], s.utility, s.price));
      }
    }
  }
}

TEST_CASE("table size guard") {
  const Scenario s = random_scenario(6, 24, 1);
  PayoffOptions opts;
  opts.cap = 1000;
  CHECK_THROWS_AS(build_payoff_table(s.game, s.utility, s.price, opts), SizeError);
}

TEST_CASE("rendered grid marks best responses and equilibria") {
  const Scenario s = *build_case(CaseId::Table6_9).scenario;
  const std::string text = render_payoff(build_payoff_table(s.game, s.utility, s.price));
  CHECK(text.find("0.27** - 1.41**") != std::string::npos);
  CHECK(text.find("0.20** - 1.56**") != std::string::npos);
  CHECK(text.find("0.99 - 2.61*") != std::string::npos);
  CHECK(text.find("0.91 - 2.01 ") != std::string::npos);
  CHECK(text.find("pure Nash equilibria: 2") != std::string::npos);
  const PayoffTable pd = payoff_table_from_costs({"g1", "g2"}, {{"s", "b"}, {"s", "b"}},
                                                 {{eur("1"), eur("1")}, {eur("6"), eur("0")}, {eur("0"), eur("6")}, {eur("5"), eur("5")}});
  CHECK(render_payoff(pd).find("5.00** - 5.00**") != std::string::npos);
  CHECK_THROWS_AS(par_table(pd), MisuseError);
}

TEST_CASE("PAR minimum of the two-player table") {
  const Scenario s = *build_case(CaseId::Table6_9).scenario;
  const PayoffTable t = build_payoff_table(s.game, s.utility, s.price);
  const auto pars = par_table(t);
  const Rational best = *std::min_element(pars.begin(), pars.end());
  CHECK(best == Rational(10, 7));
  std::vector<std::vector<std::size_t>> argmin;
  for (std::size_t c = 0; c < t.cell_count(); ++c)
    if (pars[c] == best) argmin.push_back(t.decode(c));
  // (3,3) ties the equilibria on PAR without being one.
  CHECK(argmin == std::vector<std::vector<std::size_t>>{{0, 2}, {2, 0}, {2, 2}});
  CHECK_FALSE(t.nash[t.encode({2, 2})]);
}
