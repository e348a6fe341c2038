#include "loadgame/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <optional>

#include "loadgame/cases.hpp"
#include "loadgame/dynamics.hpp"
#include "loadgame/errors.hpp"
#include "loadgame/metrics.hpp"
#include "loadgame/payoff.hpp"
#include "loadgame/random_scenario.hpp"
#include "loadgame/report.hpp"
#include "loadgame/scenario_io.hpp"

namespace loadgame {

namespace {

void apply_worker_env() {
  const char* raw = std::getenv("LOADGAME_WORKERS");
  if (!raw || !*raw) return;
  char* end = nullptr;
  const long n = std::strtol(raw, &end, 10);
  if (*end != '\0' || n < 1) throw MisuseError(std::string("LOADGAME_WORKERS must be a positive integer, got '") + raw + "'");
  omp_set_num_threads(static_cast<int>(n));
}

std::string choice_label(const PayoffTable& t, const std::vector<std::size_t>& choice) {
  std::string s = "(";
  for (std::size_t i = 0; i < choice.size(); ++i) s += (i ? "," : "") + t.strategy_labels[i][choice[i]];
  return s + ")";
}

int solve_bruteforce(const Scenario& s, std::ostream& out) {
  PayoffOptions opts;
  opts.flex_quantum = s.solver.flex_quantum;
  opts.cap = s.solver.strategy_cap;
  const PayoffTable t = build_payoff_table(s.game, s.utility, s.price, opts);
  const auto nash = find_pure_nash(t);
  out << "profiles: " << t.cell_count() << '\n';
  out << "pure Nash equilibria: " << nash.size() << '\n';
  for (const auto& n : nash) {
    out << choice_label(t, n.choice) << " total " << n.total.display(2);
    if (n.par) out << " PAR " << format_fixed(*n.par, 2);
    out << '\n';
    for (std::size_t i = 0; i < t.player_count(); ++i) out << "  " << t.player_ids[i] << ": " << n.costs[i].display(2) << '\n';
  }
  return 0;
}

int solve_dynamics(const Scenario& s, std::optional<std::uint64_t> seed, std::ostream& out, std::ostream& err) {
  const DynamicsTrace trace = run_dynamics(s.game, initial_profile(s), s.utility, s.price, dynamics_options(s.solver, seed));
  out << trace_csv(trace);
  err << "status: " << to_string(trace.status) << ", steps: " << trace.steps.size() << ", passes: " << trace.passes
      << ", total cost: " << production_cost(s.price, trace.final_profile.total_load()).total.display(2) << '\n';
  return trace.status == Termination::Converged ? 0 : 1;
}

int reproduce(const std::string& target, const std::string& scenario_path, std::ostream& out, std::ostream& err) {
  std::vector<CaseId> ids;
  if (target == "all") {
    if (!scenario_path.empty()) throw MisuseError("--scenario needs a single case id");
    ids = all_cases();
  } else if (auto id = parse_case_id(target)) {
    ids.push_back(*id);
  } else {
    err << "unknown case id '" << target << "'\n";
    return 2;
  }
  bool ok = true;
  for (CaseId id : ids) {
    ReferenceCase c = build_case(id);
    if (!scenario_path.empty()) {
      if (!c.scenario) throw MisuseError(std::string(to_string(id)) + " takes no scenario file");
      c.scenario = load_scenario_file(scenario_path);
    }
    const CaseReport r = verify_case(c);
    out << render_report(r);
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

std::optional<UtilityKind> parse_utility_kind(const std::string& s) {
  if (s == "hourly_price") return UtilityKind::HourlyPrice;
  if (s == "pro_rata_cost") return UtilityKind::ProRataCost;
  if (s == "value_of_energy") return UtilityKind::ValueOfEnergy;
  return std::nullopt;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Day-ahead load scheduling game solver", "loadgame"};
  app.require_subcommand(1);

  std::string scenario_path, method, case_target, utility_name = "pro_rata_cost";
  std::uint64_t seed = 0;
  std::size_t players = 0, slots = 0;
  bool against_baseline = false;

  auto* solve = app.add_subcommand("solve", "Find equilibria by enumeration or run best-response dynamics");
  solve->add_option("--scenario", scenario_path, "Scenario file")->required();
  solve->add_option("--method", method, "bruteforce | dynamics")->required()->check(CLI::IsMember({"bruteforce", "dynamics"}));
  auto* seed_opt = solve->add_option("--seed", seed, "Random player selection seed");

  auto* repro = app.add_subcommand("reproduce", "Verify a reference case");
  repro->add_option("case", case_target, "Case id or 'all'")->required();
  repro->add_option("--scenario", scenario_path, "Run the case on this scenario file");

  auto* payoff = app.add_subcommand("payoff", "Print the full payoff table");
  payoff->add_option("--scenario", scenario_path, "Scenario file")->required();

  auto* metrics = app.add_subcommand("metrics", "Cost and PAR of the scenario, or of its dynamics outcome");
  metrics->add_option("--scenario", scenario_path, "Scenario file")->required();
  metrics->add_flag("--against-baseline", against_baseline, "Solve and compare with the initial profile");

  auto* gen = app.add_subcommand("gen-random", "Emit a random scenario file");
  gen->add_option("--players", players, "Households")->required()->check(CLI::PositiveNumber);
  gen->add_option("--slots", slots, "Time slots")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--utility", utility_name, "hourly_price | pro_rata_cost | value_of_energy")
      ->check(CLI::IsMember({"hourly_price", "pro_rata_cost", "value_of_energy"}));

  auto* exp = app.add_subcommand("export-case", "Emit a reference case as a scenario file");
  exp->add_option("case", case_target, "Case id")->required();

  std::vector<std::string> argv_store{"loadgame"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    apply_worker_env();
    if (solve->parsed()) {
      const Scenario s = effective_scenario(load_scenario_file(scenario_path));
      if (method == "bruteforce") return solve_bruteforce(s, out);
      std::optional<std::uint64_t> chosen;
      if (seed_opt->count() > 0) chosen = seed;
      return solve_dynamics(s, chosen, out, err);
    }
    if (repro->parsed()) return reproduce(case_target, scenario_path, out, err);
    if (payoff->parsed()) {
      const Scenario s = effective_scenario(load_scenario_file(scenario_path));
      PayoffOptions opts;
      opts.flex_quantum = s.solver.flex_quantum;
      opts.cap = s.solver.strategy_cap;
      out << render_payoff(build_payoff_table(s.game, s.utility, s.price, opts));
      return 0;
    }
    if (metrics->parsed()) {
      const Scenario s = effective_scenario(load_scenario_file(scenario_path));
      const StrategyProfile baseline = initial_profile(s);
      if (!against_baseline) {
        out << render_metrics(compare_to_baseline(baseline, baseline, s.utility, s.price), false);
        return 0;
      }
      const DynamicsTrace trace = run_dynamics(s.game, baseline, s.utility, s.price, dynamics_options(s.solver));
      out << "dynamics: " << to_string(trace.status) << " after " << trace.steps.size() << " steps\n";
      out << render_metrics(compare_to_baseline(trace.final_profile, baseline, s.utility, s.price));
      return trace.status == Termination::Converged ? 0 : 1;
    }
    if (gen->parsed()) {
      out << serialize_scenario(random_scenario(players, slots, seed, *parse_utility_kind(utility_name)));
      return 0;
    }
    if (exp->parsed()) {
      const auto id = parse_case_id(case_target);
      if (!id) {
        err << "unknown case id '" << case_target << "'\n";
        return 2;
      }
      const ReferenceCase c = build_case(*id);
      if (!c.scenario) throw MisuseError(std::string(to_string(*id)) + " has no scenario to export");
      out << serialize_scenario(*c.scenario);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace loadgame
