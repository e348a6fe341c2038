#pragma once

#include <random>
#include <string>
#include <vector>

#include "loadgame/best_response.hpp"
#include "loadgame/dynamics.hpp"
#include "loadgame/scenario.hpp"

namespace testing {

using namespace loadgame;

Energy kwh(std::string_view text);
LoadVector loads(std::initializer_list<std::string_view> kwh_values);
Money eur(std::string_view text);
Rational q(std::string_view decimal);

// Cost recomputed from the definitions with plain rational loops; prices go
// through the library only for non-integer exponents and the log model.
Money oracle_cost(const LoadVector& own, const LoadVector& others, const std::string& player_id,
                  const UtilityModel& utility, const PriceModel& price);

struct OracleResult {
  Money best;
  std::vector<LoadVector> argmins;  // every aggregate attaining `best`
};

// Exhaustive minimum over the player's enumerated strategy set.
OracleResult oracle_best_response(const Player& player, const LoadVector& others, const TimeGrid& grid,
                                  const UtilityModel& utility, const PriceModel& price, Energy quantum);

// No player can gain more than `tolerance` by deviating, checked exhaustively.
bool oracle_is_nash(const Game& game, const StrategyProfile& profile, const UtilityModel& utility,
                    const PriceModel& price, Energy quantum, const Rational& tolerance = Rational(0));

LoadVector random_opponents(std::mt19937_64& rng, std::size_t slots, std::int64_t max_milli, std::int64_t step_milli);

}  // namespace testing
