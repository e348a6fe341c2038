#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "loadgame/exact.hpp"
#include "loadgame/model.hpp"
#include "loadgame/pricing.hpp"

namespace loadgame {

/// Each player pays the hourly price on its own load.
struct HourlyPrice {};

/// Each player pays its energy share of the total production cost.
struct ProRataCost {};

struct EnergyValuation {
  Energy e_max;
  Rational omega;  // 1/kWh
};

/// Hourly bill minus a per-player valuation of the energy consumed.
struct ValueOfEnergy {
  Price p_avg;
  std::map<std::string, EnergyValuation> players;
};

using UtilityModel = std::variant<HourlyPrice, ProRataCost, ValueOfEnergy>;

std::string_view utility_name(const UtilityModel& model);

// omega > 0, p_avg >= 0, e_max >= the player's total energy, one entry per player.
void validate_utility_model(const UtilityModel& model, const Game& game);

// sum_h p^h * s^h / 100, prices taken at the profile's total load.
Money player_cost_hourly(const StrategyProfile& profile, std::size_t player, const PriceModel& price);
Money player_cost_hourly(const StrategyProfile& profile, std::string_view player, const PriceModel& price);

// (player energy / total energy) * production cost. Zero total -> DomainError.
Money player_cost_prorata(const StrategyProfile& profile, std::size_t player, const PriceModel& price);
Money player_cost_prorata(const StrategyProfile& profile, std::string_view player, const PriceModel& price);

// p * e_max * (1 - exp(-omega * energy)) / 100 EUR.
Money value_of_energy(const Price& p_avg, const EnergyValuation& valuation, Energy energy);

const EnergyValuation& valuation_for(const ValueOfEnergy& model, std::string_view player);

// Cost to minimize; for ValueOfEnergy this is bill minus value.
Money utility(const StrategyProfile& profile, std::size_t player, const UtilityModel& model,
              const PriceModel& price);
Money utility(const StrategyProfile& profile, std::string_view player, const UtilityModel& model,
              const PriceModel& price);

// Bill of one load vector against fixed prices.
Money bill(const PriceVector& prices, const LoadVector& load);

}  // namespace loadgame
