#include "support.hpp"

#include "loadgame/random_scenario.hpp"

namespace testing {

Energy kwh(std::string_view text) { return Energy::parse(text); }

LoadVector loads(std::initializer_list<std::string_view> kwh_values) {
  LoadVector v;
  for (auto s : kwh_values) v.push_back(Energy::parse(s));
  return v;
}

Money eur(std::string_view text) { return Money::parse(text); }

Rational q(std::string_view decimal) { return parse_decimal(decimal); }

namespace {

Rational price_at(const PriceModel& price, const Rational& load) {
  if (const auto* p = std::get_if<PowerLaw>(&price); p && p->beta.get_den() == 1) {
    Rational y = 1;
    for (long k = 0; k < p->beta.get_num().get_si(); ++k) y *= load;
    return p->alpha * y;
  }
  return unit_price(price, Energy::from_rational(load)).value();
}

}  // namespace

Money oracle_cost(const LoadVector& own, const LoadVector& others, const std::string& player_id,
                  const UtilityModel& utility, const PriceModel& price) {
  Rational own_bill = 0, production = 0, own_energy = 0, all_energy = 0;
  for (std::size_t h = 0; h < own.size(); ++h) {
    const Rational load = own[h].kwh() + others[h].kwh();
    const Rational p = price_at(price, load);
    own_bill += p * own[h].kwh() / 100;
    production += p * load / 100;
    own_energy += own[h].kwh();
    all_energy += load;
  }
  if (std::holds_alternative<ProRataCost>(utility)) return Money(Rational(production * own_energy / all_energy));
  if (const auto* v = std::get_if<ValueOfEnergy>(&utility)) {
    Energy e;
    for (const auto& x : own) e += x;
    return Money(own_bill) - value_of_energy(v->p_avg, valuation_for(*v, player_id), e);
  }
  return Money(own_bill);
}

OracleResult oracle_best_response(const Player& player, const LoadVector& others, const TimeGrid& grid,
                                  const UtilityModel& utility, const PriceModel& price, Energy quantum) {
  const StrategySet set = enumerate_pure_strategies(player, grid, quantum);
  OracleResult r;
  bool first = true;
  for (const auto& s : set.strategies) {
    const Money c = oracle_cost(s.aggregate, others, player.id, utility, price);
    if (first || c < r.best) {
      r.best = c;
      r.argmins.clear();
      first = false;
    }
    if (c == r.best) r.argmins.push_back(s.aggregate);
  }
  return r;
}

bool oracle_is_nash(const Game& game, const StrategyProfile& profile, const UtilityModel& utility,
                    const PriceModel& price, Energy quantum, const Rational& tolerance) {
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    const LoadVector others = profile.others_load(i);
    const Money current = oracle_cost(profile.aggregate(i), others, game.players[i].id, utility, price);
    const auto best = oracle_best_response(game.players[i], others, game.grid, utility, price, quantum);
    if ((current - best.best).value() > tolerance) return false;
  }
  return true;
}

LoadVector random_opponents(std::mt19937_64& rng, std::size_t slots, std::int64_t max_milli, std::int64_t step_milli) {
  LoadVector v;
  const auto steps = static_cast<std::size_t>(max_milli / step_milli);
  for (std::size_t h = 0; h < slots; ++h) {
    v.push_back(Energy::from_milli(static_cast<std::int64_t>(draw_below(rng, steps + 1)) * step_milli));
  }
  return v;
}

}  // namespace testing
