#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loadgame/best_response.hpp"
#include "loadgame/exact.hpp"
#include "loadgame/model.hpp"
#include "loadgame/pricing.hpp"
#include "loadgame/utility.hpp"

namespace loadgame {

// Normal-form cost table. Cells are flattened in mixed radix with player 0
// as the most significant digit.
struct PayoffTable {
  std::vector<std::string> player_ids;
  std::vector<std::vector<std::string>> strategy_labels;
  std::vector<std::vector<PureStrategy>> strategies;  // empty for abstract tables
  std::vector<std::vector<Money>> costs;              // [cell][player]
  std::vector<std::vector<char>> best_response;       // [cell][player], ties all marked
  std::vector<char> nash;                             // [cell]
  std::vector<LoadVector> total_load;                 // [cell], empty for abstract tables

  std::size_t player_count() const { return player_ids.size(); }
  std::size_t strategy_count(std::size_t player) const { return strategy_labels.at(player).size(); }
  std::size_t cell_count() const { return costs.size(); }
  std::vector<std::size_t> decode(std::size_t cell) const;
  std::size_t encode(const std::vector<std::size_t>& choice) const;
};

struct PayoffOptions {
  Energy flex_quantum = Energy::from_milli(500);
  std::uint64_t cap = kDefaultStrategyCap;  // bounds strategies per player and the cell count
  Execution execution = Execution::Parallel;
};

PayoffTable build_payoff_table(const Game& game, const UtilityModel& utility, const PriceModel& price,
                               const PayoffOptions& options = {});

// Abstract game given directly as costs; cells in the same mixed-radix order.
PayoffTable payoff_table_from_costs(std::vector<std::string> player_ids,
                                    std::vector<std::vector<std::string>> strategy_labels,
                                    std::vector<std::vector<Money>> costs);

// Recomputes the best-response and Nash markers from `costs`.
void mark_best_responses(PayoffTable& table);

struct NashCell {
  std::size_t cell = 0;
  std::vector<std::size_t> choice;
  std::vector<Money> costs;
  Money total;
  std::optional<Rational> par;  // absent for abstract tables
};

// Every pure equilibrium, cheapest total first (ties by cell index).
std::vector<NashCell> find_pure_nash(const PayoffTable& table);

}  // namespace loadgame
