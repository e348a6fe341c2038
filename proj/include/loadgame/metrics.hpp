#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loadgame/exact.hpp"
#include "loadgame/model.hpp"
#include "loadgame/payoff.hpp"
#include "loadgame/pricing.hpp"
#include "loadgame/utility.hpp"

namespace loadgame {

// Peak over mean, the mean taken over every slot. All-zero load -> DomainError.
Rational par(const LoadVector& total_load);

// PAR of each cell's total load. Abstract tables -> MisuseError.
std::vector<Rational> par_table(const PayoffTable& table);

struct MetricsReport {
  Money total_cost;
  std::vector<std::pair<std::string, Money>> player_costs;
  Rational par;
  Energy peak;
  Rational average_load;  // kWh per slot
  Money baseline_total_cost;
  Rational baseline_par;
  Rational cost_reduction;  // 1 - outcome / baseline
  Rational par_reduction;
};

MetricsReport compare_to_baseline(const StrategyProfile& outcome, const StrategyProfile& baseline,
                                  const UtilityModel& utility, const PriceModel& price);

}  // namespace loadgame
