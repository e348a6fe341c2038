#include "loadgame/payoff.hpp"

#include <algorithm>
#include <exception>

#include "loadgame/errors.hpp"
#include "loadgame/metrics.hpp"

namespace loadgame {

std::vector<std::size_t> PayoffTable::decode(std::size_t cell) const {
  std::vector<std::size_t> choice(player_count());
  for (std::size_t i = player_count(); i-- > 0;) {
    choice[i] = cell % strategy_count(i);
    cell /= strategy_count(i);
  }
  return choice;
}

std::size_t PayoffTable::encode(const std::vector<std::size_t>& choice) const {
  if (choice.size() != player_count()) throw DimensionError("cell index needs one choice per player");
  std::size_t cell = 0;
  for (std::size_t i = 0; i < choice.size(); ++i) {
    if (choice[i] >= strategy_count(i)) throw DomainError("strategy index out of range");
    cell = cell * strategy_count(i) + choice[i];
  }
  return cell;
}

void mark_best_responses(PayoffTable& table) {
  const std::size_t n = table.player_count();
  const std::size_t cells = table.cell_count();
  table.best_response.assign(cells, std::vector<char>(n, 0));
  table.nash.assign(cells, 0);
  // stride of player i's digit in the flattened index
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * table.strategy_count(i);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = table.strategy_count(i);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      const std::size_t digit = (cell / stride[i]) % k;
      if (digit != 0) continue;  // visit each line of player i once
      const Money* best = nullptr;
      for (std::size_t d = 0; d < k; ++d) {
        const Money& c = table.costs[cell + d * stride[i]][i];
        if (best == nullptr || c < *best) best = &c;
      }
      for (std::size_t d = 0; d < k; ++d) {
        const std::size_t c = cell + d * stride[i];
        table.best_response[c][i] = table.costs[c][i] == *best;
      }
    }
  }
  for (std::size_t cell = 0; cell < cells; ++cell) {
    table.nash[cell] = std::all_of(table.best_response[cell].begin(), table.best_response[cell].end(),
                                   [](char b) { return b != 0; });
  }
}

PayoffTable build_payoff_table(const Game& game, const UtilityModel& utility_model, const PriceModel& price,
                               const PayoffOptions& options) {
  game.validate();
  validate_price_model(price);
  validate_utility_model(utility_model, game);

  PayoffTable t;
  std::uint64_t cells = 1;
  for (const auto& p : game.players) {
    auto set = enumerate_pure_strategies(p, game.grid, options.flex_quantum, options.cap);
    if (set.strategies.empty()) throw InfeasibleError(p.id, "player '" + p.id + "' has no feasible strategy");
    const std::uint64_t k = set.strategies.size();
    cells = cells > options.cap / k ? options.cap + 1 : cells * k;
    t.player_ids.push_back(p.id);
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < k; ++s) labels.push_back(std::to_string(s + 1));
    t.strategy_labels.push_back(std::move(labels));
    t.strategies.push_back(std::move(set.strategies));
  }
  if (cells > options.cap) {
    std::uint64_t product = 1;
    bool overflow = false;
    for (const auto& s : t.strategies) {
      overflow = overflow || product > UINT64_MAX / s.size();
      product = overflow ? UINT64_MAX : product * s.size();
    }
    throw SizeError(product, "payoff table has " + std::to_string(product) + " cells, cap is " +
                                 std::to_string(options.cap));
  }

  const std::size_t n = t.player_count();
  t.costs.assign(cells, std::vector<Money>(n));
  t.total_load.assign(cells, LoadVector());

  auto fill = [&](std::size_t cell) {
    const auto choice = t.decode(cell);
    std::vector<Schedules> schedules;
    schedules.reserve(n);
    for (std::size_t i = 0; i < n; ++i) schedules.push_back(t.strategies[i][choice[i]].schedules);
    const StrategyProfile profile(game.grid, t.player_ids, std::move(schedules));
    for (std::size_t i = 0; i < n; ++i) t.costs[cell][i] = utility(profile, i, utility_model, price);
    t.total_load[cell] = profile.total_load();
  };

  const auto total = static_cast<std::int64_t>(cells);
  if (options.execution == Execution::Serial) {
    for (std::int64_t c = 0; c < total; ++c) fill(static_cast<std::size_t>(c));
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t c = 0; c < total; ++c) {
      try {
        fill(static_cast<std::size_t>(c));
      } catch (...) {
#pragma omp critical(loadgame_payoff_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  mark_best_responses(t);
  return t;
}

PayoffTable payoff_table_from_costs(std::vector<std::string> player_ids,
                                    std::vector<std::vector<std::string>> strategy_labels,
                                    std::vector<std::vector<Money>> costs) {
  if (player_ids.size() != strategy_labels.size()) throw DimensionError("one label list per player expected");
  std::size_t cells = 1;
  for (const auto& l : strategy_labels) {
    if (l.empty()) throw DomainError("every player needs at least one strategy");
    cells *= l.size();
  }
  if (costs.size() != cells) {
    throw DimensionError("cost table has " + std::to_string(costs.size()) + " cells, expected " + std::to_string(cells));
  }
  for (const auto& c : costs)
    if (c.size() != player_ids.size()) throw DimensionError("each cell needs one cost per player");
  PayoffTable t;
  t.player_ids = std::move(player_ids);
  t.strategy_labels = std::move(strategy_labels);
  t.costs = std::move(costs);
  mark_best_responses(t);
  return t;
}

std::vector<NashCell> find_pure_nash(const PayoffTable& table) {
  std::vector<NashCell> out;
  const bool loads = table.total_load.size() == table.cell_count();
  for (std::size_t cell = 0; cell < table.cell_count(); ++cell) {
    if (!table.nash[cell]) continue;
    NashCell nc;
    nc.cell = cell;
    nc.choice = table.decode(cell);
    nc.costs = table.costs[cell];
    for (const auto& c : nc.costs) nc.total += c;
    if (loads && sum(table.total_load[cell]) > Energy{}) nc.par = par(table.total_load[cell]);
    out.push_back(std::move(nc));
  }
  std::stable_sort(out.begin(), out.end(), [](const NashCell& a, const NashCell& b) { return a.total < b.total; });
  return out;
}

}  // namespace loadgame
