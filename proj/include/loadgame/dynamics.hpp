#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "loadgame/best_response.hpp"
#include "loadgame/exact.hpp"
#include "loadgame/model.hpp"
#include "loadgame/pricing.hpp"
#include "loadgame/utility.hpp"

namespace loadgame {

struct RoundRobin {};
struct SeededRandom {
  std::uint64_t seed = 0;
};
using Selection = std::variant<RoundRobin, SeededRandom>;

struct DynamicsOptions {
  Selection selection = RoundRobin{};
  Energy flex_quantum = Energy::from_milli(500);
  Rational tolerance{1, 1'000'000'000};
  std::size_t max_iterations = 1000;
  bool reject_phi_increase = false;
  std::uint64_t strategy_cap = kDefaultStrategyCap;
  Execution execution = Execution::Serial;  // of each best-response search
};

enum class Termination { Converged, IterationCap, CycleDetected };

std::string_view to_string(Termination t);

struct TraceStep {
  std::size_t iteration = 0;  // 1-based
  std::size_t player = 0;
  std::string player_id;
  bool improved = false;  // the best response beats the incumbent
  bool accepted = false;  // and it was applied
  Money own_cost_before, own_cost_after;
  Money proposed_cost;  // best-response cost, applied or not
  Money phi_before, phi_after;
  LoadVector delta;  // acting player's aggregate after - before
  std::uint64_t load_hash = 0;  // FNV-1a of the total load after the step
  bool potential_consistent = true;
};

struct DynamicsTrace {
  std::vector<TraceStep> steps;
  Termination status = Termination::IterationCap;
  StrategyProfile final_profile;
  std::size_t passes = 0;  // ceil(steps / players)
};

// Sequential best-response dynamics from `initial`. Converged after a full
// quiescent pass; CycleDetected (round robin only) when schedules and the
// next-player pointer repeat exactly.
DynamicsTrace run_dynamics(const Game& game, const StrategyProfile& initial, const UtilityModel& utility,
                           const PriceModel& price, const DynamicsOptions& options = {});

struct PotentialStep {
  Money player_delta;
  Money phi_delta;
  bool consistent = true;  // not (player improves and the potential rises)
};

// `before` and `after` may differ only in `player`; otherwise MisuseError.
PotentialStep check_ordinal_potential_step(const StrategyProfile& before, const StrategyProfile& after,
                                           std::size_t player, const UtilityModel& utility,
                                           const PriceModel& price,
                                           const Rational& tolerance = Rational(1, 1'000'000'000));

struct EpsilonShift {
  Money phi_delta;     // 4 alpha eps^2 / 100
  Money player_delta;  // alpha (2 eps^2 - 2 x eps) / 100
};

// Closed-form deltas of moving eps kWh from a slot holding x (own) to a slot
// holding y (others) under linear prices alpha * load. Needs 0 < eps,
// 0 <= x, x + eps <= y, alpha > 0.
EpsilonShift epsilon_shift_deltas(const Rational& x, const Rational& y, const Rational& eps, const Rational& alpha);

std::uint64_t fnv1a(const LoadVector& load);

}  // namespace loadgame
