#include "loadgame/best_response.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <unordered_map>

#include <omp.h>

#include "loadgame/errors.hpp"

namespace loadgame {

namespace {

enum class Objective { OwnBill, TotalCost };

__extension__ typedef __int128 Wide;

// Scores are proportional to EUR with a positive constant factor, so only
// their order matters. All scorers are exact.

// Integer power-law prices on milli-kWh: (o+s)^beta * s, or (o+s)^(beta+1).
struct IntScorer {
  using Score = Wide;
  std::vector<std::int64_t> others;
  unsigned beta = 2;
  Objective objective = Objective::OwnBill;

  Score operator()(std::size_t h, std::int64_t own) const {
    const Wide y = others[h] + own;
    Wide p = 1;
    for (unsigned k = 0; k < beta; ++k) p *= y;
    return objective == Objective::OwnBill ? p * own : p * y;
  }
};

// Any price model; prices memoized by slot load.
struct RationalScorer {
  using Score = Rational;
  const PriceModel* model = nullptr;
  std::vector<std::int64_t> others;
  Objective objective = Objective::OwnBill;
  mutable std::unordered_map<std::int64_t, Rational> prices;

  Score operator()(std::size_t h, std::int64_t own) const {
    const std::int64_t y = others[h] + own;
    auto it = prices.find(y);
    if (it == prices.end()) it = prices.emplace(y, unit_price(*model, Energy::from_milli(y)).value()).first;
    return Rational(it->second * (objective == Objective::OwnBill ? own : y));
  }
};

// Prices that ignore the player's own load.
struct LinearScorer {
  using Score = Rational;
  const PriceVector* prices = nullptr;

  Score operator()(std::size_t h, std::int64_t own) const { return Rational((*prices)[h].value() * own); }
};

struct SoftFlexible {
  std::size_t appliance;
  std::size_t lo, hi;
  std::int64_t cap_q;
  std::int64_t quanta;
};

struct Search {
  std::size_t slots = 0;
  std::int64_t quantum = 0;
  std::vector<std::int64_t> fixed;
  std::vector<std::size_t> outer;
  std::vector<std::vector<std::vector<std::int64_t>>> outer_choices;
  std::vector<SoftFlexible> soft;
  std::uint64_t combos = 1;
};

std::vector<std::int64_t> to_milli(const LoadVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (Energy e : v) out.push_back(e.milli());
  return out;
}

Search plan_search(const Player& player, const TimeGrid& grid, Energy quantum, std::uint64_t cap) {
  if (quantum <= Energy{}) throw DomainError("flex quantum must be positive");
  Search s;
  s.slots = grid.slot_count;
  s.quantum = quantum.milli();
  s.fixed.assign(s.slots, 0);
  for (std::size_t i = 0; i < player.appliances.size(); ++i) {
    const Appliance& a = player.appliances[i];
    if (const auto* f = std::get_if<FixedProfile>(&a.kind)) {
      if (f->profile.size() != s.slots) throw DimensionError("appliance '" + a.id + "': profile length mismatch");
      for (std::size_t h = 0; h < s.slots; ++h) s.fixed[h] += f->profile[h].milli();
      continue;
    }
    const auto* flex = std::get_if<ShiftableFlexible>(&a.kind);
    if (flex != nullptr) {
      const std::int64_t quanta = flexible_quanta(a.id, *flex, quantum);
      const std::int64_t min_q = std::max<std::int64_t>(1, (flex->power_min.milli() + s.quantum - 1) / s.quantum);
      const std::int64_t cap_q = flex->power_max.milli() / s.quantum;
      const auto width = static_cast<std::int64_t>(flex->window_end - flex->window_start + 1);
      if (min_q == 1) {
        if (quanta > cap_q * width) {
          throw InfeasibleError(a.id, "appliance '" + a.id + "': energy does not fit its window at this quantum");
        }
        s.soft.push_back({i, flex->window_start, flex->window_end, cap_q, quanta});
        continue;
      }
    }
    // Profiles and semi-continuous flexible loads are enumerated.
    std::vector<std::vector<std::int64_t>> choices;
    for (const auto& x : appliance_choices(a, grid, quantum, cap)) choices.push_back(to_milli(x));
    if (choices.empty()) throw InfeasibleError(a.id, "appliance '" + a.id + "': no feasible schedule");
    if (s.combos > cap / choices.size()) {
      throw SizeError(cap + 1, "player '" + player.id + "': best-response search exceeds cap " + std::to_string(cap));
    }
    s.combos *= choices.size();
    s.outer.push_back(i);
    s.outer_choices.push_back(std::move(choices));
  }
  return s;
}

template <class Scorer>
struct Evaluation {
  typename Scorer::Score score{};
  std::vector<std::size_t> digits;
  std::vector<std::vector<std::int64_t>> allocation;  // per soft appliance, quanta per slot
};

// Successive shortest paths: every quantum travels along a zero-cost
// alternating path (appliance -> slot with room, slot -> appliance already
// using it) to the reachable slot with the smallest marginal score.
template <class Scorer>
void allocate_soft(const Search& s, const Player& player, const Scorer& score, std::vector<std::int64_t>& own,
                   std::vector<std::vector<std::int64_t>>& alloc) {
  const std::size_t n = s.soft.size();
  alloc.assign(n, std::vector<std::int64_t>(s.slots, 0));
  if (n == 0) return;
  std::vector<std::int64_t> remaining(n);
  std::int64_t left = 0;
  for (std::size_t a = 0; a < n; ++a) left += remaining[a] = s.soft[a].quanta;

  using Score = typename Scorer::Score;
  std::vector<Score> marginal(s.slots);
  std::vector<char> in_window(s.slots, 0);
  for (const auto& f : s.soft)
    for (std::size_t h = f.lo; h <= f.hi; ++h) in_window[h] = 1;
  auto refresh = [&](std::size_t h) { marginal[h] = score(h, own[h] + s.quantum) - score(h, own[h]); };
  for (std::size_t h = 0; h < s.slots; ++h)
    if (in_window[h]) refresh(h);

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent_app(s.slots), parent_slot(n);
  std::vector<char> seen_app(n), seen_slot(s.slots);
  std::vector<std::size_t> queue;
  queue.reserve(n);

  while (left > 0) {
    std::fill(seen_app.begin(), seen_app.end(), 0);
    std::fill(seen_slot.begin(), seen_slot.end(), 0);
    queue.clear();
    for (std::size_t a = 0; a < n; ++a) {
      if (remaining[a] > 0) {
        seen_app[a] = 1;
        parent_slot[a] = kNone;
        queue.push_back(a);
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t a = queue[qi];
      const auto& f = s.soft[a];
      for (std::size_t h = f.lo; h <= f.hi; ++h) {
        if (seen_slot[h] || alloc[a][h] >= f.cap_q) continue;
        seen_slot[h] = 1;
        parent_app[h] = a;
        for (std::size_t b = 0; b < n; ++b) {
          if (!seen_app[b] && alloc[b][h] > 0) {
            seen_app[b] = 1;
            parent_slot[b] = h;
            queue.push_back(b);
          }
        }
      }
    }
    std::size_t target = kNone;
    for (std::size_t h = 0; h < s.slots; ++h) {
      if (seen_slot[h] && (target == kNone || marginal[h] < marginal[target])) target = h;
    }
    if (target == kNone) {
      std::size_t stuck = 0;
      while (remaining[stuck] == 0) ++stuck;
      const std::string& id = player.appliances[s.soft[stuck].appliance].id;
      throw InfeasibleError(id, "appliance '" + id + "': flexible energy cannot be placed");
    }
    std::size_t a = parent_app[target];
    ++alloc[a][target];
    while (parent_slot[a] != kNone) {
      const std::size_t h = parent_slot[a];
      --alloc[a][h];
      a = parent_app[h];
      ++alloc[a][h];
    }
    --remaining[a];
    --left;
    own[target] += s.quantum;
    refresh(target);
  }
}

template <class Scorer>
Evaluation<Scorer> evaluate(const Search& s, const Player& player, const Scorer& score, std::uint64_t index) {
  Evaluation<Scorer> ev;
  ev.digits.assign(s.outer.size(), 0);
  std::vector<std::int64_t> own = s.fixed;
  for (std::size_t i = s.outer.size(); i-- > 0;) {
    const std::size_t radix = s.outer_choices[i].size();
    ev.digits[i] = static_cast<std::size_t>(index % radix);
    index /= radix;
    const auto& x = s.outer_choices[i][ev.digits[i]];
    for (std::size_t h = 0; h < s.slots; ++h) own[h] += x[h];
  }
  allocate_soft(s, player, score, own, ev.allocation);
  for (std::size_t h = 0; h < s.slots; ++h) ev.score += score(h, own[h]);
  return ev;
}

// Lowest (score, index) over every outer combination.
template <class Scorer>
Evaluation<Scorer> search_best(const Search& s, const Player& player, const Scorer& score, Execution execution) {
  using Score = typename Scorer::Score;
  // Combination 0 first: it surfaces infeasibility outside any parallel region.
  Evaluation<Scorer> first = evaluate(s, player, score, 0);
  Score best = first.score;
  std::uint64_t best_index = 0;

  const auto total = static_cast<std::int64_t>(s.combos);
  if (execution == Execution::Serial || total < 2) {
    for (std::int64_t n = 1; n < total; ++n) {
      Score sc = evaluate(s, player, score, static_cast<std::uint64_t>(n)).score;
      if (sc < best) {
        best = std::move(sc);
        best_index = static_cast<std::uint64_t>(n);
      }
    }
  } else {
    std::exception_ptr failure;
#pragma omp parallel
    {
      const Scorer local = score;
      Score local_best{};
      std::uint64_t local_index = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(static)
      for (std::int64_t n = 1; n < total; ++n) {
        try {
          Score sc = evaluate(s, player, local, static_cast<std::uint64_t>(n)).score;
          if (local_index == std::numeric_limits<std::uint64_t>::max() || sc < local_best) {
            local_best = std::move(sc);
            local_index = static_cast<std::uint64_t>(n);
          }
        } catch (...) {
#pragma omp critical(loadgame_br_failure)
          if (!failure) failure = std::current_exception();
        }
      }
#pragma omp critical(loadgame_br_merge)
      {
        if (local_index != std::numeric_limits<std::uint64_t>::max() &&
            (local_best < best || (local_best == best && local_index < best_index))) {
          best = local_best;
          best_index = local_index;
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return best_index == 0 ? first : evaluate(s, player, score, best_index);
}

template <class Scorer>
Schedules schedules_of(const Search& s, const Player& player, const Evaluation<Scorer>& ev) {
  Schedules out;
  out.reserve(player.appliances.size());
  for (const auto& a : player.appliances) out.push_back({a.id, LoadVector(s.slots)});
  for (const auto& a : player.appliances) {
    if (const auto* f = std::get_if<FixedProfile>(&a.kind)) {
      out[static_cast<std::size_t>(&a - player.appliances.data())].x = f->profile;
    }
  }
  for (std::size_t i = 0; i < s.outer.size(); ++i) {
    const auto& x = s.outer_choices[i][ev.digits[i]];
    auto& dst = out[s.outer[i]].x;
    for (std::size_t h = 0; h < s.slots; ++h) dst[h] = Energy::from_milli(x[h]);
  }
  for (std::size_t k = 0; k < s.soft.size(); ++k) {
    auto& dst = out[s.soft[k].appliance].x;
    for (std::size_t h = 0; h < s.slots; ++h) dst[h] = Energy::from_milli(ev.allocation[k][h] * s.quantum);
  }
  return out;
}

// Integer scores are exact as long as the largest term stays well inside 128 bits.
bool integer_scores_fit(const PriceModel& price, const std::vector<std::int64_t>& others, std::int64_t own_max,
                        unsigned& beta) {
  const auto* law = std::get_if<PowerLaw>(&price);
  if (law == nullptr || law->beta.get_den() != 1 || law->beta > 8) return false;
  beta = static_cast<unsigned>(law->beta.get_num().get_ui());
  std::int64_t peak = 0;
  for (std::int64_t o : others) peak = std::max(peak, o);
  const double top = static_cast<double>(peak) + static_cast<double>(own_max) + 1.0;
  const double bits = (beta + 1) * std::log2(top) + std::log2(static_cast<double>(others.size()) + 1.0);
  return bits < 120.0;
}

Money response_cost(const LoadVector& own, const LoadVector& others, const Player& player,
                    const UtilityModel& utility, const PriceModel& price) {
  LoadVector total(own.size());
  for (std::size_t h = 0; h < own.size(); ++h) total[h] = own[h] + others[h];
  return std::visit(
      [&](const auto& m) -> Money {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ProRataCost>) {
          const Energy all = sum(total);
          if (all.is_zero()) throw DomainError("pro-rata share undefined: total energy is zero");
          return production_cost(price, total).total * Rational(sum(own).kwh() / all.kwh());
        } else {
          Money c = bill(price_vector(price, total), own);
          if constexpr (std::is_same_v<T, ValueOfEnergy>) {
            c -= value_of_energy(m.p_avg, valuation_for(m, player.id), sum(own));
          }
          return c;
        }
      },
      utility);
}

template <class Scorer>
Schedules solve(const Search& s, const Player& player, const Scorer& score, Execution execution) {
  return schedules_of(s, player, search_best(s, player, score, execution));
}

}  // namespace

BestResponse best_response(const Player& player, const Schedules& incumbent, const OpponentAggregate& others,
                           const UtilityModel& utility, const PriceModel& price, const BestResponseOptions& options) {
  const TimeGrid grid{others.load.size(), Rational(1)};
  for (Energy e : others.load)
    if (e < Energy{}) throw DomainError("opponent aggregate has a negative slot load");
  validate_price_model(price);

  const LoadVector incumbent_load = aggregate_strategy(incumbent, grid);
  const Search s = plan_search(player, grid, options.flex_quantum, options.strategy_cap);
  const Objective objective =
      std::holds_alternative<ProRataCost>(utility) ? Objective::TotalCost : Objective::OwnBill;
  const std::vector<std::int64_t> others_milli = to_milli(others.load);

  Schedules chosen;
  unsigned beta = 0;
  if (integer_scores_fit(price, others_milli, player.total_energy().milli(), beta)) {
    chosen = solve(s, player, IntScorer{others_milli, beta, objective}, options.execution);
  } else {
    RationalScorer scorer;
    scorer.model = &price;
    scorer.others = others_milli;
    scorer.objective = objective;
    chosen = solve(s, player, scorer, options.execution);
  }

  BestResponse br;
  br.aggregate = aggregate_strategy(chosen, grid);
  br.schedules = std::move(chosen);
  br.cost = response_cost(br.aggregate, others.load, player, utility, price);
  br.incumbent_cost = response_cost(incumbent_load, others.load, player, utility, price);
  br.improved = (br.incumbent_cost - br.cost).value() > options.tolerance;
  return br;
}

namespace {

const ShiftableFlexible& require_flexible(const Appliance& a) {
  const auto* f = std::get_if<ShiftableFlexible>(&a.kind);
  if (f == nullptr) throw MisuseError("appliance '" + a.id + "' is not a flexible load");
  return *f;
}

}  // namespace

LoadVector marginal_allocation(const Appliance& flexible, const LoadVector& others, const PriceModel& price,
                               Energy quantum) {
  require_flexible(flexible);
  const TimeGrid grid{others.size(), Rational(1)};
  const Player solo{"", {flexible}};
  const Search s = plan_search(solo, grid, quantum, kDefaultStrategyCap);
  RationalScorer scorer;
  scorer.model = &price;
  scorer.others = to_milli(others);
  return solve(s, solo, scorer, Execution::Serial).front().x;
}

LoadVector marginal_allocation(const Appliance& flexible, const PriceVector& prices, Energy quantum) {
  require_flexible(flexible);
  const TimeGrid grid{prices.size(), Rational(1)};
  const Player solo{"", {flexible}};
  const Search s = plan_search(solo, grid, quantum, kDefaultStrategyCap);
  return solve(s, solo, LinearScorer{&prices}, Execution::Serial).front().x;
}

}  // namespace loadgame
