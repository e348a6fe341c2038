#pragma once

#include <cstdint>
#include <random>

#include "loadgame/scenario.hpp"

namespace loadgame {

enum class UtilityKind { HourlyPrice, ProRataCost, ValueOfEnergy };

// Unbiased index in [0, n), reproducible across standard libraries.
std::size_t draw_below(std::mt19937_64& rng, std::size_t n);

// Households over a day-like grid: a fixed base load, one or two profile
// appliances and at most one flexible load each; power-law prices, beta 2.
Scenario random_scenario(std::size_t players, std::size_t slots, std::uint64_t seed,
                         UtilityKind utility = UtilityKind::ProRataCost);

// 2-3 players on 3-4 slots, small enough for a full payoff table.
Scenario random_small_scenario(std::uint64_t seed, UtilityKind utility = UtilityKind::HourlyPrice);

}  // namespace loadgame
