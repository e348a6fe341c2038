#pragma once

#include <cstdint>

#include "loadgame/exact.hpp"
#include "loadgame/model.hpp"
#include "loadgame/pricing.hpp"
#include "loadgame/utility.hpp"

namespace loadgame {

enum class Execution { Serial, Parallel };

/// Summed load of every other player; the only information a player sees.
struct OpponentAggregate {
  LoadVector load;
};

struct BestResponseOptions {
  Energy flex_quantum = Energy::from_milli(500);
  Rational tolerance{1, 1'000'000'000};  // EUR
  std::uint64_t strategy_cap = kDefaultStrategyCap;
  Execution execution = Execution::Serial;
};

struct BestResponse {
  Schedules schedules;
  LoadVector aggregate;
  Money cost;            // utility at the returned schedules
  Money incumbent_cost;  // utility at the incumbent schedules
  bool improved = false; // incumbent_cost - cost > tolerance
};

// Cost-minimizing schedules for `player` against a fixed opponent aggregate.
// Profile starts (and flexible loads whose power_min exceeds the quantum) are
// enumerated; the remaining flexible loads are placed quantum by quantum on
// the cheapest augmenting path. Ties go to the earliest enumerated choice.
// Under ProRataCost the total production cost is minimized instead of the
// bill, which has the same argmin.
BestResponse best_response(const Player& player, const Schedules& incumbent,
                           const OpponentAggregate& others, const UtilityModel& utility,
                           const PriceModel& price, const BestResponseOptions& options = {});

// Greedy placement of one flexible appliance: each quantum goes to the slot
// whose own-bill increase is smallest, lowest slot on ties.
LoadVector marginal_allocation(const Appliance& flexible, const LoadVector& others,
                               const PriceModel& price, Energy quantum);

// Same, against prices that do not react to the appliance's own load.
LoadVector marginal_allocation(const Appliance& flexible, const PriceVector& prices, Energy quantum);

}  // namespace loadgame
