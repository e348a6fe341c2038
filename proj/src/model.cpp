#include "loadgame/model.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "loadgame/errors.hpp"

namespace loadgame {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::string label(const std::string& id) { return "appliance '" + id + "'"; }

void check_window(const std::string& id, std::size_t start, std::size_t end, const TimeGrid& grid) {
  if (end < start) {
    throw ParameterError(label(id) + ": window end " + std::to_string(end) +
                         " precedes window start " + std::to_string(start));
  }
  if (end >= grid.slot_count) {
    throw ParameterError(label(id) + ": window end " + std::to_string(end) +
                         " outside the " + std::to_string(grid.slot_count) + "-slot grid");
  }
}

// Quantum bounds of a flexible appliance: a slot holds 0 or [min_q, cap_q] quanta.
struct QuantumBounds {
  std::int64_t min_q;
  std::int64_t cap_q;
};

QuantumBounds quantum_bounds(const ShiftableFlexible& f, Energy quantum) {
  const std::int64_t q = quantum.milli();
  const std::int64_t min_q = std::max<std::int64_t>(1, (f.power_min.milli() + q - 1) / q);
  return {min_q, f.power_max.milli() / q};
}

bool placeable(std::int64_t remaining, std::size_t slots, const QuantumBounds& b) {
  if (remaining == 0) return true;
  for (std::size_t j = 1; j <= slots; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    if (jj * b.min_q <= remaining && remaining <= jj * b.cap_q) return true;
  }
  return false;
}

std::uint64_t count_flexible(std::int64_t quanta, std::size_t slots, const QuantumBounds& b) {
  // ways[r] = allocations of r quanta over the slots processed so far
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(quanta) + 1, 0);
  ways[0] = 1;
  for (std::size_t s = 0; s < slots; ++s) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::int64_t r = 0; r <= quanta; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      next[ur] = saturating_add(next[ur], ways[ur]);
      for (std::int64_t k = b.min_q; k <= b.cap_q && r + k <= quanta; ++k) {
        const auto target = static_cast<std::size_t>(r + k);
        next[target] = saturating_add(next[target], ways[ur]);
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(quanta)];
}

void enumerate_flexible(const ShiftableFlexible& f, const QuantumBounds& b, Energy quantum,
                        std::size_t slot, std::int64_t remaining, LoadVector& current,
                        std::vector<LoadVector>& out) {
  const std::size_t last = f.window_end;
  if (slot > last) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const std::size_t slots_after = last - slot;
  const std::int64_t top = std::min(remaining, b.cap_q);
  for (std::int64_t k = top; k >= 0; --k) {
    if (k != 0 && k < b.min_q) continue;
    if (!placeable(remaining - k, slots_after, b)) continue;
    current[slot] = quantum * k;
    enumerate_flexible(f, b, quantum, slot + 1, remaining - k, current, out);
  }
  current[slot] = Energy{};
}

std::vector<std::int64_t> key_of(const LoadVector& v) {
  std::vector<std::int64_t> k;
  k.reserve(v.size());
  for (Energy e : v) k.push_back(e.milli());
  return k;
}

}  // namespace

void TimeGrid::validate() const {
  if (slot_count < 1) throw ParameterError("time grid needs at least one slot");
  if (sgn(slot_duration_hours) <= 0) throw ParameterError("slot duration must be positive");
}

Energy Appliance::total_energy() const {
  return std::visit(
      [](const auto& k) -> Energy {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FixedProfile>) {
          return sum(k.profile);
        } else if constexpr (std::is_same_v<T, ShiftableProfile>) {
          return sum(k.load_profile);
        } else {
          return k.total_energy;
        }
      },
      kind);
}

void validate_appliance(const Appliance& a, const TimeGrid& grid) {
  if (a.id.empty()) throw ParameterError("appliance id must not be empty");
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FixedProfile>) {
          if (k.profile.size() != grid.slot_count) {
            throw DimensionError(label(a.id) + ": profile has " + std::to_string(k.profile.size()) +
                                 " slots, grid has " + std::to_string(grid.slot_count));
          }
          for (Energy e : k.profile)
            if (e < Energy{}) throw ParameterError(label(a.id) + ": negative fixed load");
        } else if constexpr (std::is_same_v<T, ShiftableProfile>) {
          check_window(a.id, k.window_start, k.window_end, grid);
          if (k.load_profile.empty()) throw ParameterError(label(a.id) + ": empty load profile");
          for (Energy e : k.load_profile)
            if (e <= Energy{}) throw ParameterError(label(a.id) + ": load profile entries must be > 0");
          if (k.load_profile.size() > k.window_end - k.window_start + 1) {
            throw ParameterError(label(a.id) + ": load profile longer than its window");
          }
        } else {
          check_window(a.id, k.window_start, k.window_end, grid);
          if (k.total_energy <= Energy{}) throw ParameterError(label(a.id) + ": total energy must be > 0");
          if (k.power_min < Energy{}) throw ParameterError(label(a.id) + ": power_min must be >= 0");
          if (k.power_max < k.power_min) throw ParameterError(label(a.id) + ": power_min exceeds power_max");
          const auto slots = static_cast<std::int64_t>(k.window_end - k.window_start + 1);
          if (k.total_energy > k.power_max * slots) {
            throw ParameterError(label(a.id) + ": total energy exceeds power_max over the window");
          }
        }
      },
      a.kind);
}

Energy Player::total_energy() const {
  Energy e;
  for (const auto& a : appliances) e += a.total_energy();
  return e;
}

void validate_player(const Player& p, const TimeGrid& grid) {
  if (p.id.empty()) throw ParameterError("player id must not be empty");
  std::set<std::string> seen;
  for (const auto& a : p.appliances) {
    if (!seen.insert(a.id).second) {
      throw ParameterError("player '" + p.id + "': duplicate appliance id '" + a.id + "'");
    }
    validate_appliance(a, grid);
  }
}

void Game::validate() const {
  grid.validate();
  std::set<std::string> seen;
  for (const auto& p : players) {
    if (!seen.insert(p.id).second) throw ParameterError("duplicate player id '" + p.id + "'");
    validate_player(p, grid);
  }
}

std::size_t Game::player_index(std::string_view id) const {
  for (std::size_t i = 0; i < players.size(); ++i)
    if (players[i].id == id) return i;
  throw MissingPlayerError("unknown player '" + std::string(id) + "'");
}

LoadVector aggregate_strategy(std::span<const ApplianceSchedule> schedules, const TimeGrid& grid) {
  LoadVector s(grid.slot_count);
  for (const auto& sch : schedules) {
    if (sch.x.size() != grid.slot_count) {
      throw DimensionError(label(sch.appliance_id) + ": schedule has " + std::to_string(sch.x.size()) +
                           " slots, grid has " + std::to_string(grid.slot_count));
    }
    for (std::size_t h = 0; h < s.size(); ++h) s[h] += sch.x[h];
  }
  return s;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::LengthMismatch: return "length-mismatch";
    case ViolationKind::WindowBreach: return "window-breach";
    case ViolationKind::PowerBound: return "power-bound";
    case ViolationKind::EnergySum: return "energy-sum";
    case ViolationKind::ProfileMismatch: return "profile-mismatch";
  }
  return "unknown";
}

std::vector<Violation> validate_schedule(const Appliance& a, const LoadVector& x, const TimeGrid& grid) {
  std::vector<Violation> out;
  if (x.size() != grid.slot_count) {
    out.push_back({ViolationKind::LengthMismatch, std::nullopt,
                   "schedule has " + std::to_string(x.size()) + " slots, grid has " +
                       std::to_string(grid.slot_count)});
    return out;
  }
  for (std::size_t h = 0; h < x.size(); ++h) {
    if (x[h] < Energy{}) out.push_back({ViolationKind::PowerBound, h, "negative energy"});
  }

  auto outside_window = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t h = 0; h < x.size(); ++h) {
      if ((h < lo || h > hi) && !x[h].is_zero()) {
        out.push_back({ViolationKind::WindowBreach, h, "energy " + x[h].to_string() + " outside window"});
      }
    }
  };

  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FixedProfile>) {
          for (std::size_t h = 0; h < x.size(); ++h) {
            if (h < k.profile.size() && x[h] != k.profile[h]) {
              out.push_back({ViolationKind::ProfileMismatch, h,
                             "expected " + k.profile[h].to_string() + ", got " + x[h].to_string()});
            }
          }
        } else if constexpr (std::is_same_v<T, ShiftableProfile>) {
          const auto first = std::find_if(x.begin(), x.end(), [](Energy e) { return !e.is_zero(); });
          if (first == x.end()) {
            out.push_back({ViolationKind::ProfileMismatch, std::nullopt, "appliance never runs"});
            return;
          }
          const auto start = static_cast<std::size_t>(first - x.begin());
          const std::size_t len = k.load_profile.size();
          if (start < k.window_start) {
            out.push_back({ViolationKind::WindowBreach, start, "starts before window"});
          }
          if (start + len - 1 > k.window_end) {
            out.push_back({ViolationKind::WindowBreach, start,
                           "profile started at slot " + std::to_string(start) + " overruns window end " +
                               std::to_string(k.window_end)});
          }
          for (std::size_t h = 0; h < x.size(); ++h) {
            const bool in_run = h >= start && h < start + len;
            const Energy want = in_run ? k.load_profile[h - start] : Energy{};
            if (x[h] != want && (in_run || h <= k.window_end)) {
              // Slots past the overrun or inside the window but off-profile.
              if (!in_run || h < x.size()) {
                out.push_back({ViolationKind::ProfileMismatch, h,
                               "expected " + want.to_string() + ", got " + x[h].to_string()});
              }
            }
          }
          for (std::size_t h = k.window_end + 1; h < x.size(); ++h) {
            const bool in_run = h >= start && h < start + len;
            if (!in_run && !x[h].is_zero()) {
              out.push_back({ViolationKind::WindowBreach, h, "energy outside window"});
            }
          }
        } else {
          outside_window(k.window_start, k.window_end);
          Energy total;
          for (std::size_t h = 0; h < x.size(); ++h) {
            total += x[h];
            if (h < k.window_start || h > k.window_end || x[h] <= Energy{}) continue;
            if (x[h] < k.power_min || x[h] > k.power_max) {
              out.push_back({ViolationKind::PowerBound, h,
                             x[h].to_string() + " outside [" + k.power_min.to_string() + ", " +
                                 k.power_max.to_string() + "]"});
            }
          }
          if (total != k.total_energy) {
            out.push_back({ViolationKind::EnergySum, std::nullopt,
                           "sum " + total.to_string() + " != " + k.total_energy.to_string()});
          }
        }
      },
      a.kind);
  return out;
}

LoadVector place_profile(const std::string& id, const ShiftableProfile& p, std::size_t start,
                         const TimeGrid& grid) {
  const std::size_t len = p.load_profile.size();
  if (start < p.window_start || start + len - 1 > p.window_end || start + len > grid.slot_count) {
    throw InfeasibleError(id, label(id) + ": start slot " + std::to_string(start) + " leaves window [" +
                                  std::to_string(p.window_start) + ", " + std::to_string(p.window_end) + "]");
  }
  LoadVector x(grid.slot_count);
  for (std::size_t k = 0; k < len; ++k) x[start + k] = p.load_profile[k];
  return x;
}

std::size_t feasible_start_count(const ShiftableProfile& p) {
  const std::size_t window = p.window_end - p.window_start + 1;
  return p.load_profile.size() > window ? 0 : window - p.load_profile.size() + 1;
}

std::int64_t flexible_quanta(const std::string& id, const ShiftableFlexible& f, Energy quantum) {
  if (quantum <= Energy{}) throw DomainError("flex quantum must be positive");
  if (f.total_energy.milli() % quantum.milli() != 0) {
    throw InfeasibleError(id, label(id) + ": quantum " + quantum.to_string() + " does not divide " +
                                  f.total_energy.to_string() + " kWh");
  }
  return f.total_energy.milli() / quantum.milli();
}

std::uint64_t count_appliance_choices(const Appliance& a, const TimeGrid&, Energy quantum) {
  return std::visit(
      [&](const auto& k) -> std::uint64_t {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FixedProfile>) {
          return 1;
        } else if constexpr (std::is_same_v<T, ShiftableProfile>) {
          return feasible_start_count(k);
        } else {
          const auto quanta = flexible_quanta(a.id, k, quantum);
          return count_flexible(quanta, k.window_end - k.window_start + 1, quantum_bounds(k, quantum));
        }
      },
      a.kind);
}

std::vector<LoadVector> appliance_choices(const Appliance& a, const TimeGrid& grid, Energy quantum,
                                          std::uint64_t cap) {
  const std::uint64_t n = count_appliance_choices(a, grid, quantum);
  if (n > cap) {
    throw SizeError(n, label(a.id) + ": " + std::to_string(n) + " choices exceed cap " + std::to_string(cap));
  }
  std::vector<LoadVector> out;
  out.reserve(static_cast<std::size_t>(n));
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FixedProfile>) {
          out.push_back(k.profile);
        } else if constexpr (std::is_same_v<T, ShiftableProfile>) {
          const std::size_t starts = feasible_start_count(k);
          for (std::size_t s = 0; s < starts; ++s) out.push_back(place_profile(a.id, k, k.window_start + s, grid));
        } else {
          const auto quanta = flexible_quanta(a.id, k, quantum);
          LoadVector current(grid.slot_count);
          enumerate_flexible(k, quantum_bounds(k, quantum), quantum, k.window_start, quanta, current, out);
        }
      },
      a.kind);
  return out;
}

StrategySet enumerate_pure_strategies(const Player& player, const TimeGrid& grid, Energy flex_quantum,
                                      std::uint64_t cap) {
  if (flex_quantum <= Energy{}) throw DomainError("flex quantum must be positive");
  std::uint64_t product = 1;
  for (const auto& a : player.appliances) product = saturating_mul(product, count_appliance_choices(a, grid, flex_quantum));
  if (product > cap) {
    throw SizeError(product, "player '" + player.id + "': " + std::to_string(product) +
                                 " strategy combinations exceed cap " + std::to_string(cap));
  }

  std::vector<std::vector<LoadVector>> choices;
  choices.reserve(player.appliances.size());
  for (const auto& a : player.appliances) choices.push_back(appliance_choices(a, grid, flex_quantum, cap));

  StrategySet set;
  set.raw_combinations = product;
  if (product == 0) return set;

  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::size_t> digit(choices.size(), 0);
  for (std::uint64_t n = 0; n < product; ++n) {
    PureStrategy st;
    st.schedules.reserve(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i) {
      st.schedules.push_back({player.appliances[i].id, choices[i][digit[i]]});
    }
    st.aggregate = aggregate_strategy(st.schedules, grid);
    if (seen.insert(key_of(st.aggregate)).second) set.strategies.push_back(std::move(st));
    // odometer, last appliance fastest
    for (std::size_t i = choices.size(); i-- > 0;) {
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
    }
  }
  return set;
}

Schedules earliest_feasible_schedules(const Player& player, const TimeGrid& grid, Energy quantum) {
  Schedules out;
  out.reserve(player.appliances.size());
  for (const auto& a : player.appliances) {
    LoadVector x = std::visit(
        [&](const auto& k) -> LoadVector {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, FixedProfile>) {
            return k.profile;
          } else if constexpr (std::is_same_v<T, ShiftableProfile>) {
            if (feasible_start_count(k) == 0) throw InfeasibleError(a.id, label(a.id) + ": no feasible start slot");
            return place_profile(a.id, k, k.window_start, grid);
          } else {
            const auto b = quantum_bounds(k, quantum);
            std::int64_t remaining = flexible_quanta(a.id, k, quantum);
            LoadVector v(grid.slot_count);
            for (std::size_t h = k.window_start; h <= k.window_end; ++h) {
              const std::size_t after = k.window_end - h;
              for (std::int64_t q = std::min(remaining, b.cap_q); q >= 0; --q) {
                if (q != 0 && q < b.min_q) continue;
                if (placeable(remaining - q, after, b)) {
                  v[h] = quantum * q;
                  remaining -= q;
                  break;
                }
              }
            }
            if (remaining != 0) throw InfeasibleError(a.id, label(a.id) + ": no feasible allocation");
            return v;
          }
        },
        a.kind);
    out.push_back({a.id, std::move(x)});
  }
  return out;
}

StrategyProfile::StrategyProfile(TimeGrid grid, std::vector<std::string> player_ids,
                                 std::vector<Schedules> schedules)
    : grid_(std::move(grid)), ids_(std::move(player_ids)), schedules_(std::move(schedules)) {
  if (ids_.size() != schedules_.size()) {
    throw DimensionError("strategy profile: " + std::to_string(ids_.size()) + " player ids for " +
                         std::to_string(schedules_.size()) + " schedule lists");
  }
  aggregates_.reserve(schedules_.size());
  for (const auto& s : schedules_) aggregates_.push_back(aggregate_strategy(s, grid_));
  recompute_total();
}

void StrategyProfile::recompute_total() {
  total_.assign(grid_.slot_count, Energy{});
  for (const auto& agg : aggregates_)
    for (std::size_t h = 0; h < total_.size(); ++h) total_[h] += agg[h];
}

void StrategyProfile::check_index(std::size_t i) const {
  if (i >= schedules_.size()) {
    throw MissingPlayerError("strategy profile has no player #" + std::to_string(i));
  }
}

const std::string& StrategyProfile::player_id(std::size_t i) const {
  check_index(i);
  return ids_[i];
}

const Schedules& StrategyProfile::schedules(std::size_t i) const {
  check_index(i);
  return schedules_[i];
}

const LoadVector& StrategyProfile::aggregate(std::size_t i) const {
  check_index(i);
  return aggregates_[i];
}

LoadVector StrategyProfile::others_load(std::size_t i) const {
  check_index(i);
  LoadVector o = total_;
  for (std::size_t h = 0; h < o.size(); ++h) o[h] -= aggregates_[i][h];
  return o;
}

StrategyProfile StrategyProfile::with_player(std::size_t i, Schedules schedules) const {
  check_index(i);
  StrategyProfile next = *this;
  next.aggregates_[i] = aggregate_strategy(schedules, grid_);
  next.schedules_[i] = std::move(schedules);
  next.recompute_total();
  return next;
}

}  // namespace loadgame
