#include "loadgame/cases.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "loadgame/best_response.hpp"
#include "loadgame/dynamics.hpp"
#include "loadgame/errors.hpp"
#include "loadgame/metrics.hpp"
#include "loadgame/payoff.hpp"
#include "loadgame/random_scenario.hpp"

namespace loadgame {

namespace {

constexpr std::pair<CaseId, std::string_view> kNames[] = {
    {CaseId::Table4, "table4"},         {CaseId::Table5, "table5"},
    {CaseId::Table6_9, "table6_9"},     {CaseId::Table10_11, "table10_11"},
    {CaseId::Table12_13, "table12_13"}, {CaseId::Table14_15, "table14_15"},
    {CaseId::Table16, "table16"},       {CaseId::PrisonersDilemma, "prisoners_dilemma"},
};

Energy kwh(std::string_view s) { return Energy::parse(s); }

LoadVector kwh_vector(std::initializer_list<std::string_view> values) {
  LoadVector v;
  for (auto s : values) v.push_back(kwh(s));
  return v;
}

LoadVector slot_load(std::size_t slots, std::size_t at, std::string_view amount) {
  LoadVector v(slots);
  v.at(at) = kwh(amount);
  return v;
}

LoadVector range_load(std::size_t slots, std::size_t from, std::size_t to, std::string_view amount) {
  LoadVector v(slots);
  for (std::size_t h = from; h <= to; ++h) v[h] = kwh(amount);
  return v;
}

std::string render(const LoadVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "]";
}

// Display-rounded comparison: |actual - shown| <= 0.005.
Check near(std::string name, std::string_view shown, const Rational& actual) {
  const Rational expected = parse_decimal(shown);
  const Rational gap = abs(actual - expected);
  return {std::move(name), std::string(shown), format_decimal(actual, 8), gap <= Rational(1, 200)};
}

Check exact(std::string name, const Rational& expected, const Rational& actual) {
  return {std::move(name), format_decimal(expected, 12), format_decimal(actual, 12), expected == actual};
}

Check truth(std::string name, std::string expected, std::string actual) {
  const bool ok = expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), ok};
}

// ---- scenarios -----------------------------------------------------------

Scenario household_day(const std::vector<std::size_t>& starts, const LoadVector& car) {
  Scenario s;
  s.game.grid.slot_count = 24;
  Player p{"household", {}};
  p.appliances.push_back({"laundry", ShiftableProfile{kwh_vector({"1"}), 0, 23}});
  p.appliances.push_back({"dryer", ShiftableProfile{kwh_vector({"1"}), 0, 23}});
  p.appliances.push_back({"dishwasher", ShiftableProfile{kwh_vector({"1"}), 0, 23}});
  p.appliances.push_back({"car", ShiftableFlexible{kwh("20"), kwh("0.01"), kwh("4"), 0, 8}});
  p.appliances.push_back({"non_shiftable", FixedProfile{range_load(24, 17, 22, "1")}});
  auto& init = s.initial["household"];
  init["laundry"] = slot_load(24, starts[0], "1");
  init["dryer"] = slot_load(24, starts[1], "1");
  init["dishwasher"] = slot_load(24, starts[2], "1");
  init["car"] = car;
  init["non_shiftable"] = range_load(24, 17, 22, "1");
  s.game.players.push_back(std::move(p));
  s.price = PowerLaw{Rational(1), Rational(2)};
  s.utility = HourlyPrice{};
  return s;
}

Scenario two_player_three_slot(UtilityModel utility) {
  Scenario s;
  s.game.grid.slot_count = 3;
  s.game.players.push_back({"pl1",
                            {{"fixed", FixedProfile{kwh_vector({"1", "0", "0"})}},
                             {"shiftable", ShiftableProfile{kwh_vector({"2"}), 0, 2}}}});
  s.game.players.push_back({"pl2",
                            {{"fixed", FixedProfile{kwh_vector({"0", "5", "0"})}},
                             {"shiftable", ShiftableProfile{kwh_vector({"2.5"}), 0, 2}}}});
  s.price = PowerLaw{Rational(1), Rational(2)};
  s.utility = std::move(utility);
  return s;
}

// Player i holds x kWh fixed in slot 1 and a 2*eps profile that may run in
// either slot; everyone else holds y - x - eps and y.
Scenario linear_shift(const Energy& x, const Energy& y, const Energy& eps, const Rational& alpha) {
  Scenario s;
  s.game.grid.slot_count = 2;
  s.game.players.push_back(
      {"i", {{"fixed", FixedProfile{{x, Energy{}}}}, {"shiftable", ShiftableProfile{{eps * 2}, 0, 1}}}});
  s.game.players.push_back({"others", {{"fixed", FixedProfile{{y - x - eps, y}}}}});
  s.price = PowerLaw{alpha, Rational(1)};
  s.utility = HourlyPrice{};
  s.initial["i"]["fixed"] = {x, Energy{}};
  s.initial["i"]["shiftable"] = {eps * 2, Energy{}};
  s.initial["others"]["fixed"] = {y - x - eps, y};
  return s;
}

Scenario three_player_loop() {
  Scenario s;
  s.game.grid.slot_count = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string id = "pl" + std::to_string(i + 1);
    s.game.players.push_back({id,
                              {{"fixed", FixedProfile{slot_load(3, i, "6")}},
                               {"shiftable", ShiftableFlexible{kwh("6"), Energy{}, kwh("6"), 0, 2}}}});
    s.initial[id]["fixed"] = slot_load(3, i, "6");
    s.initial[id]["shiftable"] = slot_load(3, i, "6");
  }
  s.price = PowerLaw{Rational(1, 5), Rational(2)};
  s.utility = HourlyPrice{};
  s.solver.flex_quantum = kwh("1");
  s.solver.max_iterations = 50;
  return s;
}

// ---- verification --------------------------------------------------------

const Scenario& need_scenario(const ReferenceCase& c) {
  if (!c.scenario) throw MisuseError(std::string(to_string(c.id)) + " carries no scenario");
  return *c.scenario;
}

void check_schedules(CaseReport& r, const Scenario& s, const StrategyProfile& profile) {
  for (std::size_t i = 0; i < profile.player_count(); ++i) {
    const Player& p = s.game.players[i];
    for (std::size_t a = 0; a < p.appliances.size(); ++a) {
      const auto v = validate_schedule(p.appliances[a], profile.schedules(i)[a].x, s.game.grid);
      r.checks.push_back(truth(p.id + "/" + p.appliances[a].id + " schedule feasible", "ok",
                               v.empty() ? "ok" : std::string(to_string(v.front().kind))));
    }
  }
}

void verify_household(CaseReport& r, const Scenario& s, const LoadVector& expected) {
  const StrategyProfile profile = initial_profile(s);
  r.checks.push_back(truth("energy usage profile", render(expected), render(profile.aggregate(0))));
  check_schedules(r, s, profile);
}

void verify_table4(CaseReport& r, const Scenario& s) {
  verify_household(r, s, kwh_vector({"4", "4", "4", "4", "4", "0", "0", "0", "0", "0", "0", "0",
                                     "0", "0", "0", "0", "1", "1", "2", "1", "1", "2", "1", "0"}));
  // Flat prices: every 5-slot full-power placement ties; lowest slots win.
  const Player& p = s.game.players.front();
  const auto car = std::find_if(p.appliances.begin(), p.appliances.end(), [](const Appliance& a) { return a.id == "car"; });
  if (car != p.appliances.end()) {
    const PriceVector flat(s.game.grid.slot_count, Price(Rational(25)));
    r.checks.push_back(truth("car allocation under flat prices", render(initial_profile(s).schedules(0)[3].x),
                             render(marginal_allocation(*car, flat, s.solver.flex_quantum))));
  }
  // Two one-slot loads over the whole day before deduplication.
  const Player pair{"pair", {p.appliances[0], p.appliances[1]}};
  r.checks.push_back(truth("raw combinations of two one-slot loads", "576",
                           std::to_string(enumerate_pure_strategies(pair, s.game.grid, s.solver.flex_quantum).raw_combinations)));
}

void verify_table5(CaseReport& r, const Scenario& s) {
  verify_household(r, s, kwh_vector({"0", "4", "4", "4", "4", "4", "0", "0", "0", "0", "0", "0",
                                     "0", "0", "0", "0", "1", "1", "2", "1", "1", "2", "1", "0"}));
}

using Grid = std::vector<std::vector<std::string_view>>;

// Row = player 1 slot, column = player 2 slot, "a - b" cells.
void verify_payoff(CaseReport& r, const PayoffTable& t, const std::string& label, const Grid& expected) {
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const std::size_t cell = t.encode({a, b});
      const std::string where = label + " (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
      r.checks.push_back(near(where + " pl1", expected[a][2 * b], t.costs[cell][0].value()));
      r.checks.push_back(near(where + " pl2", expected[a][2 * b + 1], t.costs[cell][1].value()));
    }
  }
}

void verify_nash_pair(CaseReport& r, const PayoffTable& t, const std::string& label) {
  const auto nash = find_pure_nash(t);
  const std::pair<std::size_t, std::size_t> want[] = {{0, 2}, {2, 0}};
  const std::string_view totals[] = {"1.68", "1.76"};
  for (std::size_t k = 0; k < 2; ++k) {
    const std::string name = label + " nash #" + std::to_string(k + 1);
    const std::string expected = "(" + std::to_string(want[k].first + 1) + "," + std::to_string(want[k].second + 1) +
                                 ") of 2, total " + std::string(totals[k]) + ", PAR 1.43";
    std::string actual = "none";
    bool ok = false;
    if (k < nash.size()) {
      const auto& n = nash[k];
      actual = "(" + std::to_string(n.choice[0] + 1) + "," + std::to_string(n.choice[1] + 1) + ") of " +
               std::to_string(nash.size()) + ", total " + format_decimal(n.total.value(), 8) + ", PAR " +
               (n.par ? format_decimal(*n.par, 8) : std::string("-"));
      ok = nash.size() == 2 && n.choice[0] == want[k].first && n.choice[1] == want[k].second &&
           near("", totals[k], n.total.value()).pass && n.par && near("", "1.43", *n.par).pass;
    }
    r.checks.push_back({name, expected, actual, ok});
  }
}

const Grid kHourlyTable = {{"0.91", "2.01", "0.27", "4.22", "0.27", "1.41"},
                           {"1.10", "2.76", "1.82", "6.77", "0.99", "2.61"},
                           {"0.20", "1.56", "0.09", "4.22", "0.42", "1.76"}};

const Grid kProRataTable = {{"0.83", "2.08", "1.28", "3.21", "0.48", "1.20"},
                            {"1.10", "2.76", "2.45", "6.13", "1.03", "2.57"},
                            {"0.50", "1.26", "1.23", "3.08", "0.62", "1.55"}};

void verify_table6_9(CaseReport& r, const Scenario& s) {
  const PayoffTable t = build_payoff_table(s.game, s.utility, s.price, {s.solver.flex_quantum, s.solver.strategy_cap});
  // Both shiftable loads in slot 1.
  const std::size_t both_first = t.encode({0, 0});
  const PriceVector p6 = price_vector(s.price, t.total_load[both_first]);
  r.checks.push_back(near("table6 price t1", "30.25", p6[0].value()));
  r.checks.push_back(near("table6 price t2", "25.00", p6[1].value()));
  r.checks.push_back(near("table6 cost pl1", "0.91", t.costs[both_first][0].value()));
  r.checks.push_back(near("table6 cost pl2", "2.01", t.costs[both_first][1].value()));
  // Player 2 moved to slot 3.
  const std::size_t moved = t.encode({0, 2});
  const PriceVector p7 = price_vector(s.price, t.total_load[moved]);
  r.checks.push_back(near("table7 price t1", "9.00", p7[0].value()));
  r.checks.push_back(near("table7 price t2", "25.00", p7[1].value()));
  r.checks.push_back(near("table7 price t3", "6.25", p7[2].value()));
  r.checks.push_back(near("table7 cost pl1", "0.27", t.costs[moved][0].value()));
  r.checks.push_back(near("table7 cost pl2", "1.41", t.costs[moved][1].value()));

  verify_payoff(r, t, "table8", kHourlyTable);
  const Grid par_grid = {{"1.57", "2.14", "1.43"}, {"2.00", "2.71", "2.00"}, {"1.43", "2.14", "1.43"}};
  const auto pars = par_table(t);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      r.checks.push_back(near("table9 PAR (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")",
                              par_grid[a][b], pars[t.encode({a, b})]));
  verify_nash_pair(r, t, "table8");
}

void verify_table16(CaseReport& r, const Scenario& s) {
  const PayoffOptions opts{s.solver.flex_quantum, s.solver.strategy_cap};
  const PayoffTable left = build_payoff_table(s.game, s.utility, s.price, opts);
  const PayoffTable right = build_payoff_table(s.game, HourlyPrice{}, s.price, opts);
  verify_payoff(r, left, "table16 constant unit price", kProRataTable);
  verify_nash_pair(r, left, "table16 constant unit price");
  verify_nash_pair(r, right, "table16 hourly prices");
  // Cell totals agree and pro-rata shares are 3/10.5 and 7.5/10.5.
  bool totals = true, shares = true;
  for (std::size_t c = 0; c < left.cell_count(); ++c) {
    const Money l = left.costs[c][0] + left.costs[c][1];
    const Money h = right.costs[c][0] + right.costs[c][1];
    totals = totals && l == h;
    shares = shares && left.costs[c][0] == h * Rational(2, 7) && left.costs[c][1] == h * Rational(5, 7);
  }
  r.checks.push_back(truth("table16 equal cell totals across models", "9/9", totals ? "9/9" : "mismatch"));
  r.checks.push_back(truth("table16 shares 3/10.5 and 7.5/10.5 of cell totals", "9/9", shares ? "9/9" : "mismatch"));
}

void verify_table10_11(CaseReport& r, const Scenario& s) {
  const StrategyProfile before = initial_profile(s);
  const std::size_t i = s.game.player_index("i");
  const Player& player = s.game.players[i];
  const PriceVector p10 = price_vector(s.price, before.total_load());
  r.checks.push_back(near("table10 price t1", "25.25", p10[0].value()));
  r.checks.push_back(near("table10 price t2", "25.00", p10[1].value()));
  r.checks.push_back(near("table10 cost player i", "1.26", utility(before, i, s.utility, s.price).value()));
  r.checks.push_back(near("table10 cost others", "49.24", utility(before, 1 - i, s.utility, s.price).value()));
  r.checks.push_back(near("table10 total cost", "50.50", production_cost(s.price, before.total_load()).total.value()));

  BestResponseOptions bro;
  bro.flex_quantum = s.solver.flex_quantum;
  bro.tolerance = s.solver.tolerance;
  const auto br = best_response(player, before.schedules(i), OpponentAggregate{before.others_load(i)}, s.utility,
                                s.price, bro);
  r.checks.push_back(truth("best response of player i", "improved, load [3,2]",
                           std::string(br.improved ? "improved" : "not improved") + ", load " + render(br.aggregate)));
  const StrategyProfile after = before.with_player(i, br.schedules);
  const PriceVector p11 = price_vector(s.price, after.total_load());
  r.checks.push_back(near("table11 price t1", "24.75", p11[0].value()));
  r.checks.push_back(near("table11 price t2", "25.50", p11[1].value()));
  r.checks.push_back(near("table11 cost player i", "1.25", utility(after, i, s.utility, s.price).value()));
  r.checks.push_back(near("table11 cost others", "49.26", utility(after, 1 - i, s.utility, s.price).value()));
  r.checks.push_back(near("table11 total cost", "50.51", production_cost(s.price, after.total_load()).total.value()));

  const auto step = check_ordinal_potential_step(before, after, i, s.utility, s.price, s.solver.tolerance);
  r.checks.push_back(exact("player delta", Rational(-1, 100), step.player_delta.value()));
  r.checks.push_back(exact("total cost delta", Rational(1, 100), step.phi_delta.value()));
  r.checks.push_back(truth("potential consistent", "false", step.consistent ? "true" : "false"));
}

void verify_table12_13(CaseReport& r) {
  // The Table 10 instantiation and the indifference boundary.
  const auto t10 = epsilon_shift_deltas(Rational(3), Rational(100), Rational(1), Rational(1, 4));
  r.checks.push_back(exact("closed form total delta at x=3 y=100 eps=1 alpha=0.25", Rational(1, 100), t10.phi_delta.value()));
  r.checks.push_back(exact("closed form player delta at x=3 y=100 eps=1 alpha=0.25", Rational(-1, 100), t10.player_delta.value()));
  r.checks.push_back(exact("player delta at eps = x", Rational(0),
                           epsilon_shift_deltas(Rational(2), Rational(10), Rational(2), Rational(1)).player_delta.value()));

  std::mt19937_64 rng(1213);
  std::size_t phi_ok = 0, player_ok = 0, improving = 0;
  constexpr std::size_t kDraws = 100;
  for (std::size_t k = 0; k < kDraws; ++k) {
    // milli-kWh grid: 0 < eps < x, x + eps <= y
    const auto x = static_cast<std::int64_t>(2 + draw_below(rng, 20'000));
    const auto eps = static_cast<std::int64_t>(1 + draw_below(rng, static_cast<std::size_t>(x - 1)));
    const auto y = x + eps + static_cast<std::int64_t>(draw_below(rng, 500'000));
    const Rational alpha = ratio(static_cast<long>(1 + draw_below(rng, 1000)), static_cast<long>(1 + draw_below(rng, 1000)));
    const Scenario s = linear_shift(Energy::from_milli(x), Energy::from_milli(y), Energy::from_milli(eps), alpha);
    const StrategyProfile before = initial_profile(s);
    Schedules moved = before.schedules(0);
    moved[1].x = {Energy{}, Energy::from_milli(2 * eps)};
    const StrategyProfile after = before.with_player(0, moved);
    const auto sim = check_ordinal_potential_step(before, after, 0, s.utility, s.price, s.solver.tolerance);
    const auto closed = epsilon_shift_deltas(Energy::from_milli(x).kwh(), Energy::from_milli(y).kwh(),
                                             Energy::from_milli(eps).kwh(), alpha);
    phi_ok += sim.phi_delta == closed.phi_delta;
    player_ok += sim.player_delta == closed.player_delta;
    improving += sim.player_delta < Money{} && sim.phi_delta > Money{};
  }
  const std::string all = std::to_string(kDraws) + "/" + std::to_string(kDraws);
  r.checks.push_back(truth("simulated total delta == 4 alpha eps^2 (random draws)", all,
                           std::to_string(phi_ok) + "/" + std::to_string(kDraws)));
  r.checks.push_back(truth("simulated player delta == alpha(2eps^2 - 2x eps) (random draws)", all,
                           std::to_string(player_ok) + "/" + std::to_string(kDraws)));
  r.checks.push_back(truth("player gains while total rises (random draws)", all,
                           std::to_string(improving) + "/" + std::to_string(kDraws)));
}

void verify_table14_15(CaseReport& r, const Scenario& s) {
  const StrategyProfile before = initial_profile(s);
  const PriceVector p14 = price_vector(s.price, before.total_load());
  for (std::size_t h = 0; h < 3; ++h) r.checks.push_back(near("table14 price t" + std::to_string(h + 1), "28.8", p14[h].value()));
  for (std::size_t i = 0; i < 3; ++i) {
    r.checks.push_back(near("table14 cost pl" + std::to_string(i + 1), "3.46", utility(before, i, s.utility, s.price).value()));
  }
  // Player 1 moves 1 kWh of its flexible load to slot 2.
  Schedules shifted = before.schedules(0);
  shifted[1].x = kwh_vector({"5", "1", "0"});
  const StrategyProfile after = before.with_player(0, shifted);
  check_schedules(r, s, after);
  const PriceVector p15 = price_vector(s.price, after.total_load());
  const std::string_view prices[] = {"24.2", "33.8", "28.8"};
  for (std::size_t h = 0; h < 3; ++h) r.checks.push_back(near("table15 price t" + std::to_string(h + 1), prices[h], p15[h].value()));
  const std::string_view costs[] = {"3.00", "4.06", "3.46"};
  for (std::size_t i = 0; i < 3; ++i) {
    r.checks.push_back(near("table15 cost pl" + std::to_string(i + 1), costs[i], utility(after, i, s.utility, s.price).value()));
  }
  const auto step = check_ordinal_potential_step(before, after, 0, s.utility, s.price, s.solver.tolerance);
  r.checks.push_back(near("pl1 gain", "0.46", Rational(-step.player_delta.value())));
  r.checks.push_back(near("total cost rise", "0.14", step.phi_delta.value()));
  r.checks.push_back(exact("total cost before", parse_decimal("10.368"), production_cost(s.price, before.total_load()).total.value()));
  r.checks.push_back(exact("total cost after", parse_decimal("10.512"), production_cost(s.price, after.total_load()).total.value()));
  r.checks.push_back(truth("potential consistent", "false", step.consistent ? "true" : "false"));
}

void verify_prisoners(CaseReport& r) {
  const PayoffTable t = payoff_table_from_costs(
      {"gangster1", "gangster2"}, {{"silent", "betray"}, {"silent", "betray"}},
      {{Money(Rational(1)), Money(Rational(1))},
       {Money(Rational(6)), Money(Rational(0))},
       {Money(Rational(0)), Money(Rational(6))},
       {Money(Rational(5)), Money(Rational(5))}});
  const auto nash = find_pure_nash(t);
  std::string actual;
  for (const auto& n : nash) {
    actual += (actual.empty() ? "" : "; ") + t.strategy_labels[0][n.choice[0]] + "/" + t.strategy_labels[1][n.choice[1]] +
              " " + n.costs[0].to_string() + "-" + n.costs[1].to_string();
  }
  r.checks.push_back(truth("nash set", "betray/betray 5-5", actual.empty() ? "none" : actual));
  auto marks = [&](std::size_t player) {
    std::string m;
    for (std::size_t c = 0; c < t.cell_count(); ++c) {
      if (!t.best_response[c][player]) continue;
      const auto ch = t.decode(c);
      m += (m.empty() ? "" : ",") + t.strategy_labels[0][ch[0]] + "/" + t.strategy_labels[1][ch[1]];
    }
    return m;
  };
  r.checks.push_back(truth("gangster1 best responses", "betray/silent,betray/betray", marks(0)));
  r.checks.push_back(truth("gangster2 best responses", "silent/betray,betray/betray", marks(1)));
}

}  // namespace

std::string_view to_string(CaseId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

std::optional<CaseId> parse_case_id(std::string_view text) {
  for (const auto& [k, name] : kNames)
    if (name == text) return k;
  return std::nullopt;
}

const std::vector<CaseId>& all_cases() {
  static const std::vector<CaseId> ids = [] {
    std::vector<CaseId> v;
    for (const auto& [k, _] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

ReferenceCase build_case(CaseId id) {
  switch (id) {
    case CaseId::Table4:
      return {id, household_day({16, 18, 21}, range_load(24, 0, 4, "4")), "one household, day schedule"};
    case CaseId::Table5:
      return {id, household_day({16, 21, 18}, range_load(24, 1, 5, "4")), "car one hour later, dryer and dishwasher swapped"};
    case CaseId::Table6_9:
      return {id, two_player_three_slot(HourlyPrice{}), "two players, three slots, f(y) = y^2, hourly prices"};
    case CaseId::Table10_11:
      return {id, linear_shift(kwh("3"), kwh("100"), kwh("1"), Rational(1, 4)), "linear price 0.25 y, player i shifts 2 kWh"};
    case CaseId::Table12_13:
      return {id, std::nullopt, "closed-form shift deltas vs simulation"};
    case CaseId::Table14_15:
      return {id, three_player_loop(), "three players, f(y) = 0.2 y^2, player 1 moves 1 kWh"};
    case CaseId::Table16:
      return {id, two_player_three_slot(ProRataCost{}), "two players, three slots, pro-rata cost"};
    case CaseId::PrisonersDilemma:
      return {id, std::nullopt, "two gangsters, years in prison as costs"};
  }
  throw MisuseError("unknown case id");
}

bool CaseReport::passed() const { return failures() == 0 && !checks.empty(); }

std::size_t CaseReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

CaseReport verify_case(const ReferenceCase& c) {
  CaseReport r{c.id, {}};
  switch (c.id) {
    case CaseId::Table4: verify_table4(r, need_scenario(c)); break;
    case CaseId::Table5: verify_table5(r, need_scenario(c)); break;
    case CaseId::Table6_9: verify_table6_9(r, need_scenario(c)); break;
    case CaseId::Table10_11: verify_table10_11(r, need_scenario(c)); break;
    case CaseId::Table12_13: verify_table12_13(r); break;
    case CaseId::Table14_15: verify_table14_15(r, need_scenario(c)); break;
    case CaseId::Table16: verify_table16(r, need_scenario(c)); break;
    case CaseId::PrisonersDilemma: verify_prisoners(r); break;
  }
  return r;
}

std::string render_report(const CaseReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << to_string(r.id) << ": " << c.name << ": expected " << c.expected << ", got "
        << c.actual << '\n';
  }
  out << to_string(r.id) << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed"
      << '\n';
  return out.str();
}

}  // namespace loadgame
