#include "loadgame/metrics.hpp"

#include <algorithm>

#include "loadgame/errors.hpp"

namespace loadgame {

Rational par(const LoadVector& total_load) {
  if (total_load.empty()) throw DimensionError("PAR of an empty load vector");
  Energy peak;
  for (Energy e : total_load) {
    if (e < Energy{}) throw DomainError("PAR of a negative load");
    peak = std::max(peak, e);
  }
  const Energy total = sum(total_load);
  if (total.is_zero()) throw DomainError("PAR undefined for an all-zero load");
  Rational r(peak.milli() * static_cast<long>(total_load.size()), total.milli());
  r.canonicalize();
  return r;
}

std::vector<Rational> par_table(const PayoffTable& table) {
  if (table.total_load.size() != table.cell_count()) throw MisuseError("payoff table carries no load profiles");
  std::vector<Rational> out;
  out.reserve(table.total_load.size());
  for (const auto& l : table.total_load) out.push_back(par(l));
  return out;
}

MetricsReport compare_to_baseline(const StrategyProfile& outcome, const StrategyProfile& baseline,
                                  const UtilityModel& model, const PriceModel& price) {
  if (!(outcome.grid() == baseline.grid()) || outcome.player_count() != baseline.player_count()) {
    throw DimensionError("outcome and baseline cover different grids or players");
  }
  for (std::size_t i = 0; i < outcome.player_count(); ++i) {
    if (outcome.player_id(i) != baseline.player_id(i)) throw DimensionError("outcome and baseline player order differs");
  }
  MetricsReport r;
  r.total_cost = production_cost(price, outcome.total_load()).total;
  for (std::size_t i = 0; i < outcome.player_count(); ++i) {
    r.player_costs.emplace_back(outcome.player_id(i), utility(outcome, i, model, price));
  }
  r.par = par(outcome.total_load());
  for (Energy e : outcome.total_load()) r.peak = std::max(r.peak, e);
  r.average_load = outcome.total_energy().kwh() / static_cast<long>(outcome.grid().slot_count);
  r.baseline_total_cost = production_cost(price, baseline.total_load()).total;
  r.baseline_par = par(baseline.total_load());
  if (sgn(r.baseline_total_cost.value()) == 0) throw DomainError("baseline total cost is zero");
  r.cost_reduction = 1 - r.total_cost / r.baseline_total_cost;
  r.par_reduction = 1 - r.par / r.baseline_par;
  return r;
}

}  // namespace loadgame
