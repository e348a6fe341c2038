#include "loadgame/random_scenario.hpp"

#include <algorithm>

#include "loadgame/errors.hpp"

namespace loadgame {

std::size_t draw_below(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t range = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::size_t>(r % range);
}

namespace {

std::size_t between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) { return lo + draw_below(rng, hi - lo + 1); }

// Multiple of `step` milli-kWh in [lo, hi] steps.
Energy steps(std::mt19937_64& rng, std::int64_t step, std::size_t lo, std::size_t hi) {
  return Energy::from_milli(step * static_cast<std::int64_t>(between(rng, lo, hi)));
}

Appliance profile_appliance(std::mt19937_64& rng, const std::string& id, std::size_t slots, std::size_t max_len,
                            std::size_t max_slack) {
  const std::size_t len = between(rng, 1, std::min(max_len, slots));
  LoadVector lp;
  for (std::size_t k = 0; k < len; ++k) lp.push_back(steps(rng, 500, 1, 4));
  const std::size_t width = std::min(slots, len + between(rng, 0, max_slack));
  const std::size_t start = between(rng, 0, slots - width);
  return {id, ShiftableProfile{lp, start, start + width - 1}};
}

Appliance flexible_appliance(std::mt19937_64& rng, const std::string& id, std::size_t slots, std::size_t max_quanta,
                             std::size_t max_width) {
  const Energy pmax = steps(rng, 500, 1, 4);
  const std::int64_t cap = pmax.milli() / 500;
  const std::size_t quanta = between(rng, 1, std::min(max_quanta, static_cast<std::size_t>(cap) * slots));
  const Energy total = Energy::from_milli(500 * static_cast<std::int64_t>(quanta));
  const auto need = static_cast<std::size_t>((static_cast<std::int64_t>(quanta) + cap - 1) / cap);
  const std::size_t width = std::min(slots, std::max(need, between(rng, 1, max_width)));
  const std::size_t start = between(rng, 0, slots - width);
  // power_min of 1 kWh makes the load semi-continuous; keep it only when some
  // number of active slots can hold the energy.
  Energy pmin = draw_below(rng, 2) == 0 ? Energy{} : Energy::from_milli(250);
  if (cap >= 2 && draw_below(rng, 3) == 0) {
    const auto q = static_cast<std::int64_t>(quanta);
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(width); ++j) {
      if (2 * j <= q && q <= cap * j) {
        pmin = Energy::from_kwh(1);
        break;
      }
    }
  }
  return {id, ShiftableFlexible{total, pmin, pmax, start, start + width - 1}};
}

Appliance base_load(std::mt19937_64& rng, std::size_t slots, std::size_t max_quarter_kwh) {
  LoadVector v;
  for (std::size_t h = 0; h < slots; ++h) v.push_back(steps(rng, 250, 0, max_quarter_kwh));
  return {"base", FixedProfile{v}};
}

UtilityModel make_utility(UtilityKind kind, const Game& game, std::mt19937_64& rng) {
  switch (kind) {
    case UtilityKind::HourlyPrice: return HourlyPrice{};
    case UtilityKind::ProRataCost: return ProRataCost{};
    case UtilityKind::ValueOfEnergy: break;
  }
  ValueOfEnergy v;
  v.p_avg = Price(Rational(static_cast<long>(between(rng, 5, 40))));
  for (const auto& p : game.players) {
    const Energy slack = steps(rng, 500, 0, 10);
    v.players[p.id] = EnergyValuation{p.total_energy() + slack, ratio(static_cast<long>(between(rng, 1, 20)), 10)};
  }
  return v;
}

}  // namespace

Scenario random_scenario(std::size_t players, std::size_t slots, std::uint64_t seed, UtilityKind utility) {
  if (players < 1 || slots < 1) throw DomainError("random scenario needs at least one player and one slot");
  std::mt19937_64 rng(seed);
  Scenario s;
  s.game.grid.slot_count = slots;
  for (std::size_t i = 0; i < players; ++i) {
    Player p{"h" + std::to_string(i + 1), {}};
    p.appliances.push_back(base_load(rng, slots, 4));
    const std::size_t profiles = between(rng, 1, 2);
    for (std::size_t k = 0; k < profiles; ++k) {
      p.appliances.push_back(profile_appliance(rng, "profile" + std::to_string(k + 1), slots, 3, 8));
    }
    if (draw_below(rng, 2) == 0) p.appliances.push_back(flexible_appliance(rng, "flex", slots, 12, 10));
    s.game.players.push_back(std::move(p));
  }
  s.price = PowerLaw{ratio(static_cast<long>(between(rng, 1, 8)), 4), Rational(2)};
  s.utility = make_utility(utility, s.game, rng);
  s.solver.max_iterations = 50 * players;
  return s;
}

Scenario random_small_scenario(std::uint64_t seed, UtilityKind utility) {
  std::mt19937_64 rng(seed);
  Scenario s;
  const std::size_t slots = between(rng, 3, 4);
  const std::size_t players = between(rng, 2, 3);
  s.game.grid.slot_count = slots;
  for (std::size_t i = 0; i < players; ++i) {
    Player p{"p" + std::to_string(i + 1), {}};
    if (draw_below(rng, 3) != 0) p.appliances.push_back(base_load(rng, slots, 8));
    switch (draw_below(rng, 3)) {
      case 0: p.appliances.push_back(profile_appliance(rng, "profile", slots, 2, 3)); break;
      case 1: p.appliances.push_back(flexible_appliance(rng, "flex", slots, 4, 3)); break;
      default:
        p.appliances.push_back(profile_appliance(rng, "profile", slots, 1, 2));
        p.appliances.push_back(flexible_appliance(rng, "flex", slots, 2, 2));
        break;
    }
    s.game.players.push_back(std::move(p));
  }
  const std::size_t beta = between(rng, 1, 3);
  s.price = PowerLaw{ratio(static_cast<long>(between(rng, 1, 8)), 4), Rational(static_cast<long>(beta))};
  s.utility = make_utility(utility, s.game, rng);
  s.solver.max_iterations = 200;
  return s;
}

}  // namespace loadgame
