#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "loadgame/dynamics.hpp"
#include "loadgame/model.hpp"
#include "loadgame/pricing.hpp"
#include "loadgame/utility.hpp"

namespace loadgame {

enum class Granularity { Household, Appliance };

struct SolverConfig {
  Energy flex_quantum = Energy::from_milli(500);
  Rational tolerance{1, 1'000'000'000};
  std::size_t max_iterations = 1000;
  Selection selection = RoundRobin{};
  std::uint64_t strategy_cap = kDefaultStrategyCap;
  bool reject_phi_increase = false;
};

// player id -> appliance id -> schedule
using InitialSchedules = std::map<std::string, std::map<std::string, LoadVector>>;

struct Scenario {
  Game game;
  PriceModel price = PowerLaw{};
  UtilityModel utility = HourlyPrice{};
  InitialSchedules initial;  // players may be omitted; their defaults are earliest-feasible
  SolverConfig solver;
  Granularity granularity = Granularity::Household;
};

// Model invariants plus: referenced ids resolve, the quantum divides every
// flexible energy, declared schedules are feasible and complete per player.
void validate(const Scenario& scenario);

// Declared schedules where given, earliest-feasible elsewhere. Does not apply
// the granularity transform.
StrategyProfile initial_profile(const Scenario& scenario);

// Every non-fixed appliance becomes its own player "<household>/<appliance>";
// a household's fixed appliances stay together in "<household>/fixed".
Scenario to_appliance_granularity(const Scenario& scenario);

// The scenario the solvers should run: transformed when granularity is Appliance.
Scenario effective_scenario(const Scenario& scenario);

DynamicsOptions dynamics_options(const SolverConfig& config, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace loadgame
