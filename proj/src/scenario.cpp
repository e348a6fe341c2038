#include "loadgame/scenario.hpp"

#include "loadgame/errors.hpp"

namespace loadgame {

void validate(const Scenario& s) {
  s.game.validate();
  validate_price_model(s.price);
  validate_utility_model(s.utility, s.game);
  if (s.solver.flex_quantum <= Energy{}) throw ParameterError("solver.flex_quantum must be > 0");
  if (sgn(s.solver.tolerance) < 0) throw ParameterError("solver.tolerance must be >= 0");
  if (s.solver.max_iterations < 1) throw ParameterError("solver.max_iterations must be >= 1");
  if (s.solver.strategy_cap < 1) throw ParameterError("solver.strategy_cap must be >= 1");
  for (const auto& p : s.game.players) {
    for (const auto& a : p.appliances) {
      if (const auto* f = std::get_if<ShiftableFlexible>(&a.kind)) flexible_quanta(a.id, *f, s.solver.flex_quantum);
    }
  }
  for (const auto& [pid, apps] : s.initial) {
    const Player& p = s.game.players[s.game.player_index(pid)];
    for (const auto& [aid, x] : apps) {
      bool found = false;
      for (const auto& a : p.appliances) {
        if (a.id != aid) continue;
        found = true;
        const auto v = validate_schedule(a, x, s.game.grid);
        if (!v.empty()) {
          throw InfeasibleError(aid, "initial schedule of '" + pid + "/" + aid + "': " +
                                         std::string(to_string(v.front().kind)) + " (" + v.front().detail + ")");
        }
      }
      if (!found) throw MissingPlayerError("initial schedule for unknown appliance '" + pid + "/" + aid + "'");
    }
    if (apps.size() != p.appliances.size()) {
      throw ScenarioError("initial schedules of '" + pid + "' must cover all of its appliances");
    }
  }
}

StrategyProfile initial_profile(const Scenario& s) {
  std::vector<std::string> ids;
  std::vector<Schedules> schedules;
  for (const auto& p : s.game.players) {
    ids.push_back(p.id);
    const auto it = s.initial.find(p.id);
    if (it == s.initial.end()) {
      schedules.push_back(earliest_feasible_schedules(p, s.game.grid, s.solver.flex_quantum));
      continue;
    }
    Schedules mine;
    for (const auto& a : p.appliances) {
      const auto x = it->second.find(a.id);
      if (x == it->second.end()) throw ScenarioError("initial schedules of '" + p.id + "' lack '" + a.id + "'");
      mine.push_back({a.id, x->second});
    }
    schedules.push_back(std::move(mine));
  }
  return StrategyProfile(s.game.grid, std::move(ids), std::move(schedules));
}

Scenario to_appliance_granularity(const Scenario& s) {
  Scenario out = s;
  out.granularity = Granularity::Household;
  out.game.players.clear();
  out.initial.clear();
  const auto* voe = std::get_if<ValueOfEnergy>(&s.utility);
  ValueOfEnergy split_voe;
  if (voe != nullptr) split_voe.p_avg = voe->p_avg;

  auto add = [&](const Player& household, Player player) {
    if (voe != nullptr) split_voe.players[player.id] = valuation_for(*voe, household.id);
    const auto it = s.initial.find(household.id);
    if (it != s.initial.end()) {
      auto& dst = out.initial[player.id];
      for (const auto& a : player.appliances) dst[a.id] = it->second.at(a.id);
    }
    out.game.players.push_back(std::move(player));
  };

  for (const auto& p : s.game.players) {
    Player fixed{p.id + "/fixed", {}};
    for (const auto& a : p.appliances) {
      if (a.is_fixed()) {
        fixed.appliances.push_back(a);
      } else {
        add(p, Player{p.id + "/" + a.id, {a}});
      }
    }
    if (!fixed.appliances.empty()) add(p, std::move(fixed));
  }
  if (voe != nullptr) out.utility = std::move(split_voe);
  return out;
}

Scenario effective_scenario(const Scenario& s) {
  return s.granularity == Granularity::Appliance ? to_appliance_granularity(s) : s;
}

DynamicsOptions dynamics_options(const SolverConfig& c, std::optional<std::uint64_t> seed) {
  DynamicsOptions o;
  o.selection = seed ? Selection(SeededRandom{*seed}) : c.selection;
  o.flex_quantum = c.flex_quantum;
  o.tolerance = c.tolerance;
  o.max_iterations = c.max_iterations;
  o.reject_phi_increase = c.reject_phi_increase;
  o.strategy_cap = c.strategy_cap;
  return o;
}

}  // namespace loadgame
