#include "loadgame/utility.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "loadgame/errors.hpp"
#include "transcendental.hpp"

namespace loadgame {

namespace {

std::size_t index_of(const StrategyProfile& profile, std::string_view id) {
  for (std::size_t i = 0; i < profile.player_count(); ++i)
    if (profile.player_id(i) == id) return i;
  throw MissingPlayerError("strategy profile has no player '" + std::string(id) + "'");
}

}  // namespace

std::string_view utility_name(const UtilityModel& model) {
  switch (model.index()) {
    case 0: return "hourly_price";
    case 1: return "pro_rata_cost";
    default: return "value_of_energy";
  }
}

void validate_utility_model(const UtilityModel& model, const Game& game) {
  const auto* voe = std::get_if<ValueOfEnergy>(&model);
  if (voe == nullptr) return;
  if (voe->p_avg < Price{}) throw ParameterError("value of energy: p_avg must be >= 0");
  for (const auto& [id, v] : voe->players) {
    bool known = false;
    for (const auto& p : game.players) known = known || p.id == id;
    if (!known) throw MissingPlayerError("value of energy: unknown player '" + id + "'");
  }
  for (const auto& p : game.players) {
    const auto& v = valuation_for(*voe, p.id);
    if (sgn(v.omega) <= 0) throw ParameterError("value of energy: omega of '" + p.id + "' must be > 0");
    if (v.e_max < p.total_energy()) {
      throw ParameterError("value of energy: e_max of '" + p.id + "' below its total energy " +
                           p.total_energy().to_string());
    }
  }
}

Money bill(const PriceVector& prices, const LoadVector& load) {
  if (prices.size() != load.size()) throw DimensionError("price vector and load differ in length");
  Money m;
  for (std::size_t h = 0; h < load.size(); ++h) m += cost_of(prices[h], load[h]);
  return m;
}

Money player_cost_hourly(const StrategyProfile& profile, std::size_t player, const PriceModel& price) {
  return bill(price_vector(price, profile.total_load()), profile.aggregate(player));
}

Money player_cost_hourly(const StrategyProfile& profile, std::string_view player, const PriceModel& price) {
  return player_cost_hourly(profile, index_of(profile, player), price);
}

Money player_cost_prorata(const StrategyProfile& profile, std::size_t player, const PriceModel& price) {
  const Energy mine = profile.player_energy(player);
  const Energy all = profile.total_energy();
  if (all.is_zero()) throw DomainError("pro-rata share undefined: total energy is zero");
  return production_cost(price, profile.total_load()).total * Rational(mine.kwh() / all.kwh());
}

Money player_cost_prorata(const StrategyProfile& profile, std::string_view player, const PriceModel& price) {
  return player_cost_prorata(profile, index_of(profile, player), price);
}

Money value_of_energy(const Price& p_avg, const EnergyValuation& v, Energy energy) {
  if (sgn(v.omega) <= 0) throw ParameterError("value of energy: omega must be > 0");
  if (energy.is_zero()) return Money{};
  const auto decay = boost::multiprecision::exp(-detail::to_decimal(Rational(v.omega * energy.kwh())));
  const Rational fraction = 1 - detail::to_rational(decay);
  return Money(Rational(p_avg.value() * v.e_max.kwh() * fraction / 100));
}

const EnergyValuation& valuation_for(const ValueOfEnergy& model, std::string_view player) {
  const auto it = model.players.find(std::string(player));
  if (it == model.players.end()) {
    throw MissingPlayerError("value of energy: no parameters for player '" + std::string(player) + "'");
  }
  return it->second;
}

Money utility(const StrategyProfile& profile, std::size_t player, const UtilityModel& model,
              const PriceModel& price) {
  return std::visit(
      [&](const auto& m) -> Money {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HourlyPrice>) {
          return player_cost_hourly(profile, player, price);
        } else if constexpr (std::is_same_v<T, ProRataCost>) {
          return player_cost_prorata(profile, player, price);
        } else {
          const auto& v = valuation_for(m, profile.player_id(player));
          return player_cost_hourly(profile, player, price) -
                 value_of_energy(m.p_avg, v, profile.player_energy(player));
        }
      },
      model);
}

Money utility(const StrategyProfile& profile, std::string_view player, const UtilityModel& model,
              const PriceModel& price) {
  return utility(profile, index_of(profile, player), model, price);
}

}  // namespace loadgame
