#include "loadgame/dynamics.hpp"

#include <random>
#include <unordered_map>

#include "loadgame/errors.hpp"

namespace loadgame {

namespace {

// Unbiased draw in [0, n) from a 64-bit engine; identical on every platform,
// unlike std::uniform_int_distribution.
std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t range = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::size_t>(r % range);
}

std::vector<std::int64_t> state_key(const StrategyProfile& p, std::size_t pointer) {
  std::vector<std::int64_t> key;
  key.push_back(static_cast<std::int64_t>(pointer));
  for (std::size_t i = 0; i < p.player_count(); ++i)
    for (const auto& s : p.schedules(i))
      for (Energy e : s.x) key.push_back(e.milli());
  return key;
}

std::uint64_t hash_key(const std::vector<std::int64_t>& key) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::int64_t v : key) {
    auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

void check_initial(const Game& game, const StrategyProfile& initial) {
  if (initial.player_count() != game.players.size()) {
    throw DimensionError("initial profile has " + std::to_string(initial.player_count()) + " players, game has " +
                         std::to_string(game.players.size()));
  }
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    const Player& p = game.players[i];
    if (initial.player_id(i) != p.id) throw MissingPlayerError("initial profile lacks player '" + p.id + "'");
    const Schedules& s = initial.schedules(i);
    if (s.size() != p.appliances.size()) {
      throw DimensionError("player '" + p.id + "': initial schedules do not match its appliances");
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
      const Appliance& app = p.appliances[a];
      if (s[a].appliance_id != app.id) {
        throw DimensionError("player '" + p.id + "': initial schedule for '" + s[a].appliance_id +
                             "' where '" + app.id + "' was expected");
      }
      const auto violations = validate_schedule(app, s[a].x, game.grid);
      if (!violations.empty()) {
        throw InfeasibleError(app.id, "player '" + p.id + "', appliance '" + app.id + "': infeasible initial schedule (" +
                                          std::string(to_string(violations.front().kind)) + ": " +
                                          violations.front().detail + ")");
      }
    }
  }
}

}  // namespace

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Converged: return "converged";
    case Termination::IterationCap: return "iteration-cap";
    case Termination::CycleDetected: return "cycle-detected";
  }
  return "unknown";
}

std::uint64_t fnv1a(const LoadVector& load) {
  std::uint64_t h = 14695981039346656037ULL;
  for (Energy e : load) {
    auto u = static_cast<std::uint64_t>(e.milli());
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

PotentialStep check_ordinal_potential_step(const StrategyProfile& before, const StrategyProfile& after,
                                           std::size_t player, const UtilityModel& utility_model,
                                           const PriceModel& price, const Rational& tolerance) {
  if (before.player_count() != after.player_count() || !(before.grid() == after.grid())) {
    throw MisuseError("potential check needs two profiles of the same game");
  }
  for (std::size_t j = 0; j < before.player_count(); ++j) {
    if (j == player) continue;
    if (before.player_id(j) != after.player_id(j) || before.schedules(j) != after.schedules(j)) {
      throw MisuseError("potential check: player '" + before.player_id(j) + "' also changed");
    }
  }
  PotentialStep r;
  r.player_delta = utility(after, player, utility_model, price) - utility(before, player, utility_model, price);
  r.phi_delta = production_cost(price, after.total_load()).total - production_cost(price, before.total_load()).total;
  r.consistent = !(r.player_delta.value() < -tolerance && r.phi_delta.value() > tolerance);
  return r;
}

EpsilonShift epsilon_shift_deltas(const Rational& x, const Rational& y, const Rational& eps, const Rational& alpha) {
  if (sgn(eps) <= 0 || sgn(x) < 0 || x + eps > y || sgn(alpha) <= 0) {
    throw DomainError("epsilon shift needs eps > 0, x >= 0, x + eps <= y and alpha > 0");
  }
  EpsilonShift d;
  d.phi_delta = Money(Rational(4 * alpha * eps * eps / 100));
  d.player_delta = Money(Rational(alpha * (2 * eps * eps - 2 * x * eps) / 100));
  return d;
}

DynamicsTrace run_dynamics(const Game& game, const StrategyProfile& initial, const UtilityModel& utility_model,
                           const PriceModel& price, const DynamicsOptions& options) {
  if (options.max_iterations < 1) throw DomainError("max_iterations must be >= 1");
  game.validate();
  validate_price_model(price);
  validate_utility_model(utility_model, game);
  check_initial(game, initial);

  const std::size_t n = game.players.size();
  DynamicsTrace trace{{}, Termination::IterationCap, initial, 0};
  if (n == 0) {
    trace.status = Termination::Converged;
    return trace;
  }

  const bool round_robin = std::holds_alternative<RoundRobin>(options.selection);
  std::mt19937_64 rng(round_robin ? 0 : std::get<SeededRandom>(options.selection).seed);

  BestResponseOptions br_options;
  br_options.flex_quantum = options.flex_quantum;
  br_options.tolerance = options.tolerance;
  br_options.strategy_cap = options.strategy_cap;
  br_options.execution = options.execution;

  StrategyProfile& current = trace.final_profile;
  Money phi = production_cost(price, current.total_load()).total;
  std::size_t pointer = 0;
  std::size_t quiet = 0;                    // round robin: consecutive non-accepted steps
  std::vector<char> idle_seen(n, 0);        // random: players selected since the last acceptance
  std::size_t idle_count = 0;
  std::unordered_map<std::uint64_t, std::vector<std::vector<std::int64_t>>> visited;

  auto remember = [&](std::size_t ptr) {
    auto key = state_key(current, ptr);
    auto& bucket = visited[hash_key(key)];
    for (const auto& k : bucket)
      if (k == key) return true;
    bucket.push_back(std::move(key));
    return false;
  };
  if (round_robin) remember(pointer);

  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    const std::size_t i = round_robin ? pointer : draw_index(rng, n);
    const Player& player = game.players[i];

    const auto br = best_response(player, current.schedules(i), OpponentAggregate{current.others_load(i)},
                                  utility_model, price, br_options);
    TraceStep step;
    step.iteration = it;
    step.player = i;
    step.player_id = player.id;
    step.improved = br.improved;
    step.own_cost_before = br.incumbent_cost;
    step.proposed_cost = br.cost;
    step.phi_before = phi;

    bool accept = br.improved;
    StrategyProfile next = current;
    Money next_phi = phi;
    if (accept) {
      next = current.with_player(i, br.schedules);
      next_phi = production_cost(price, next.total_load()).total;
      if (options.reject_phi_increase && (next_phi - phi).value() > options.tolerance) accept = false;
    }
    step.accepted = accept;
    step.delta.assign(game.grid.slot_count, Energy{});
    if (accept) {
      const auto check = check_ordinal_potential_step(current, next, i, utility_model, price, options.tolerance);
      for (std::size_t h = 0; h < step.delta.size(); ++h) step.delta[h] = next.aggregate(i)[h] - current.aggregate(i)[h];
      step.own_cost_after = br.cost;
      step.phi_after = next_phi;
      step.potential_consistent = check.consistent;
      current = std::move(next);
      phi = next_phi;
    } else {
      step.own_cost_after = step.own_cost_before;
      step.phi_after = phi;
    }
    step.load_hash = fnv1a(current.total_load());
    trace.steps.push_back(std::move(step));

    if (round_robin) {
      pointer = (pointer + 1) % n;
      quiet = accept ? 0 : quiet + 1;
      if (quiet >= n) {
        trace.status = Termination::Converged;
        break;
      }
      if (remember(pointer)) {
        trace.status = Termination::CycleDetected;
        break;
      }
    } else {
      if (accept) {
        std::fill(idle_seen.begin(), idle_seen.end(), 0);
        idle_count = 0;
      } else if (!idle_seen[i]) {
        idle_seen[i] = 1;
        ++idle_count;
      }
      if (idle_count == n) {
        trace.status = Termination::Converged;
        break;
      }
    }
  }
  trace.passes = (trace.steps.size() + n - 1) / n;
  return trace;
}

}  // namespace loadgame
