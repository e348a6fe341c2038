#include <doctest.h>

#include "loadgame/cases.hpp"
#include "loadgame/errors.hpp"
#include "loadgame/metrics.hpp"
#include "loadgame/report.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("peak to average ratio") {
  CHECK(par(loads({"5.5", "5", "0"})) == Rational(11, 7));
  CHECK(par(loads({"3", "5", "2.5"})) == Rational(10, 7));
  CHECK(par(loads({"2", "2", "2"})) == Rational(1));
  CHECK(par(loads({"0", "0", "4"})) == Rational(3));
  CHECK_THROWS_AS(par(loads({"0", "0"})), DomainError);
}

TEST_CASE("par bounds") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const LoadVector v = random_opponents(rng, 1 + k % 24, 5000, 250);
    if (sum(v).is_zero()) continue;
    const Rational r = par(v);
    CHECK(r >= 1);
    CHECK(r <= Rational(static_cast<long>(v.size())));
  }
}

TEST_CASE("comparison against a baseline") {
  const Scenario s = *build_case(CaseId::Table5).scenario;
  const Scenario t = *build_case(CaseId::Table4).scenario;
  const auto r = compare_to_baseline(initial_profile(t), initial_profile(s), s.utility, s.price);
  CHECK(r.baseline_total_cost == production_cost(s.price, initial_profile(s).total_load()).total);
  CHECK(r.total_cost == r.baseline_total_cost);  // same aggregate shape shifted by one slot
  CHECK(r.cost_reduction == 0);
  CHECK(r.peak == kwh("4"));
  CHECK(r.player_costs.size() == 1);
  const auto self = compare_to_baseline(initial_profile(s), initial_profile(s), s.utility, s.price);
  CHECK(self.par_reduction == 0);
  const std::string text = render_metrics(self);
  CHECK(text.find("PAR reduction: 0.00%") != std::string::npos);
  CHECK(render_metrics(self, false).find("baseline") == std::string::npos);
}
