#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "loadgame/exact.hpp"

namespace loadgame {

struct TimeGrid {
  std::size_t slot_count = 24;
  Rational slot_duration_hours{1};

  void validate() const;
  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

/// Non-shiftable load with a fixed energy per slot (length == slot_count).
struct FixedProfile {
  LoadVector profile;
};

/// Runs contiguously once started; only the start slot is chosen.
struct ShiftableProfile {
  LoadVector load_profile;
  std::size_t window_start = 0;
  std::size_t window_end = 0;
};

/// Freely divisible energy inside a window. power_min binds only on slots
/// with a positive allocation.
struct ShiftableFlexible {
  Energy total_energy;
  Energy power_min;
  Energy power_max;
  std::size_t window_start = 0;
  std::size_t window_end = 0;
};

using ApplianceKind = std::variant<FixedProfile, ShiftableProfile, ShiftableFlexible>;

struct Appliance {
  std::string id;
  ApplianceKind kind;

  bool is_fixed() const { return std::holds_alternative<FixedProfile>(kind); }
  Energy total_energy() const;
};

void validate_appliance(const Appliance& appliance, const TimeGrid& grid);

struct Player {
  std::string id;
  std::vector<Appliance> appliances;

  Energy total_energy() const;
};

void validate_player(const Player& player, const TimeGrid& grid);

struct Game {
  TimeGrid grid;
  std::vector<Player> players;

  void validate() const;
  std::size_t player_index(std::string_view id) const;
};

struct ApplianceSchedule {
  std::string appliance_id;
  LoadVector x;

  friend bool operator==(const ApplianceSchedule&, const ApplianceSchedule&) = default;
};

using Schedules = std::vector<ApplianceSchedule>;

// s_i^h = sum over appliances of x_{i,a}^h
LoadVector aggregate_strategy(std::span<const ApplianceSchedule> schedules, const TimeGrid& grid);

enum class ViolationKind { LengthMismatch, WindowBreach, PowerBound, EnergySum, ProfileMismatch };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> slot;
  std::string detail;
};

// Empty result means the schedule is feasible for the appliance.
std::vector<Violation> validate_schedule(const Appliance& appliance, const LoadVector& x,
                                         const TimeGrid& grid);

// Profile placed at `start`; throws InfeasibleError if it leaves the window.
LoadVector place_profile(const std::string& appliance_id, const ShiftableProfile& appliance,
                         std::size_t start, const TimeGrid& grid);

std::size_t feasible_start_count(const ShiftableProfile& appliance);

// Number of quanta a flexible appliance must place; throws InfeasibleError
// when the quantum does not divide its energy.
std::int64_t flexible_quanta(const std::string& appliance_id, const ShiftableFlexible& appliance,
                             Energy quantum);

// Every schedule an appliance may follow on the quantum grid. Profiles are
// listed by ascending start slot, flexible allocations front-loaded first, so
// index 0 is always the earliest-feasible schedule.
std::vector<LoadVector> appliance_choices(const Appliance& appliance, const TimeGrid& grid,
                                          Energy quantum, std::uint64_t cap);

std::uint64_t count_appliance_choices(const Appliance& appliance, const TimeGrid& grid,
                                      Energy quantum);

struct PureStrategy {
  Schedules schedules;
  LoadVector aggregate;
};

struct StrategySet {
  std::vector<PureStrategy> strategies;
  std::uint64_t raw_combinations = 0;
};

inline constexpr std::uint64_t kDefaultStrategyCap = 1'000'000;

// Cartesian product of per-appliance choices, deduplicated by aggregate
// vector (first occurrence kept).
StrategySet enumerate_pure_strategies(const Player& player, const TimeGrid& grid,
                                      Energy flex_quantum,
                                      std::uint64_t cap = kDefaultStrategyCap);

// Earliest start for profiles, front-loaded allocation for flexible loads.
Schedules earliest_feasible_schedules(const Player& player, const TimeGrid& grid, Energy quantum);

class StrategyProfile {
 public:
  StrategyProfile(TimeGrid grid, std::vector<std::string> player_ids,
                  std::vector<Schedules> schedules);

  const TimeGrid& grid() const { return grid_; }
  std::size_t player_count() const { return schedules_.size(); }
  const std::string& player_id(std::size_t i) const;
  const Schedules& schedules(std::size_t i) const;
  const LoadVector& aggregate(std::size_t i) const;
  const LoadVector& total_load() const { return total_; }
  Energy player_energy(std::size_t i) const { return sum(aggregate(i)); }
  Energy total_energy() const { return sum(total_); }
  LoadVector others_load(std::size_t i) const;

  StrategyProfile with_player(std::size_t i, Schedules schedules) const;

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) {
    return a.grid_ == b.grid_ && a.ids_ == b.ids_ && a.schedules_ == b.schedules_;
  }

 private:
  void check_index(std::size_t i) const;
  void recompute_total();

  TimeGrid grid_;
  std::vector<std::string> ids_;
  std::vector<Schedules> schedules_;
  std::vector<LoadVector> aggregates_;
  LoadVector total_;
};

}  // namespace loadgame
