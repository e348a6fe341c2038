#include "loadgame/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "loadgame/errors.hpp"

namespace loadgame {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ScenarioError(path + ": " + what);
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void expect_object(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const char* k : required) field(j, path, k);
  for (const auto& [key, _] : j.items()) {
    const auto known = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), known) && std::none_of(optional.begin(), optional.end(), known)) {
      fail(path, "unknown field '" + key + "'");
    }
  }
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const std::string& text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get_ref<const std::string&>();
}

Rational decimal(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a decimal string such as \"0.5\"");
  try {
    return parse_decimal(j.get<std::string>());
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

Energy energy(const Json& j, const std::string& path) {
  const Rational q = decimal(j, path);
  try {
    return Energy::from_rational(q);
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

std::uint64_t whole(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

bool flag(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

LoadVector loads(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of decimal strings");
  LoadVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(energy(j[i], at(path, i)));
  return v;
}

std::pair<std::size_t, std::size_t> window(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [start, end]");
  return {whole(j[0], at(path, 0)), whole(j[1], at(path, 1))};
}

Appliance appliance(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::string kind = text(field(j, path, "type"), join(path, "type"));
  Appliance a;
  if (kind == "fixed_profile") {
    expect_object(j, path, {"id", "type", "profile"});
    a.kind = FixedProfile{loads(j["profile"], join(path, "profile"))};
  } else if (kind == "shiftable_profile") {
    expect_object(j, path, {"id", "type", "load_profile", "window"});
    const auto [lo, hi] = window(j["window"], join(path, "window"));
    a.kind = ShiftableProfile{loads(j["load_profile"], join(path, "load_profile")), lo, hi};
  } else if (kind == "shiftable_flexible") {
    expect_object(j, path, {"id", "type", "total_energy", "power_min", "power_max", "window"});
    const auto [lo, hi] = window(j["window"], join(path, "window"));
    a.kind = ShiftableFlexible{energy(j["total_energy"], join(path, "total_energy")),
                               energy(j["power_min"], join(path, "power_min")),
                               energy(j["power_max"], join(path, "power_max")), lo, hi};
  } else {
    fail(join(path, "type"), "unknown appliance type '" + kind + "'");
  }
  a.id = text(j["id"], join(path, "id"));
  return a;
}

PriceModel price_model(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::string kind = text(field(j, path, "type"), join(path, "type"));
  if (kind == "power_law") {
    expect_object(j, path, {"type", "alpha", "beta"});
    return PowerLaw{decimal(j["alpha"], join(path, "alpha")), decimal(j["beta"], join(path, "beta"))};
  }
  if (kind == "load_log") {
    expect_object(j, path, {"type", "alpha"});
    return LoadLog{decimal(j["alpha"], join(path, "alpha"))};
  }
  fail(join(path, "type"), "unknown price model '" + kind + "'");
}

UtilityModel utility_model(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::string kind = text(field(j, path, "type"), join(path, "type"));
  if (kind == "hourly_price") {
    expect_object(j, path, {"type"});
    return HourlyPrice{};
  }
  if (kind == "pro_rata_cost") {
    expect_object(j, path, {"type"});
    return ProRataCost{};
  }
  if (kind == "value_of_energy") {
    expect_object(j, path, {"type", "p_avg", "players"});
    ValueOfEnergy v;
    v.p_avg = Price(decimal(j["p_avg"], join(path, "p_avg")));
    const std::string ppath = join(path, "players");
    if (!j["players"].is_object()) fail(ppath, "expected an object keyed by player id");
    for (const auto& [id, params] : j["players"].items()) {
      const std::string p = join(ppath, id);
      expect_object(params, p, {"e_max", "omega"});
      v.players[id] = EnergyValuation{energy(params["e_max"], join(p, "e_max")), decimal(params["omega"], join(p, "omega"))};
    }
    return v;
  }
  fail(join(path, "type"), "unknown utility model '" + kind + "'");
}

SolverConfig solver_config(const Json& j, const std::string& path) {
  expect_object(j, path, {}, {"flex_quantum", "tolerance", "max_iterations", "selection", "strategy_cap", "reject_phi_increase"});
  SolverConfig c;
  if (j.contains("flex_quantum")) c.flex_quantum = energy(j["flex_quantum"], join(path, "flex_quantum"));
  if (j.contains("tolerance")) c.tolerance = decimal(j["tolerance"], join(path, "tolerance"));
  if (j.contains("max_iterations")) c.max_iterations = whole(j["max_iterations"], join(path, "max_iterations"));
  if (j.contains("strategy_cap")) c.strategy_cap = whole(j["strategy_cap"], join(path, "strategy_cap"));
  if (j.contains("reject_phi_increase")) c.reject_phi_increase = flag(j["reject_phi_increase"], join(path, "reject_phi_increase"));
  if (j.contains("selection")) {
    const Json& s = j["selection"];
    const std::string sp = join(path, "selection");
    if (!s.is_object()) fail(sp, "expected an object");
    const std::string policy = text(field(s, sp, "policy"), join(sp, "policy"));
    if (policy == "round_robin") {
      expect_object(s, sp, {"policy"});
      c.selection = RoundRobin{};
    } else if (policy == "seeded_random") {
      expect_object(s, sp, {"policy", "seed"});
      c.selection = SeededRandom{whole(s["seed"], join(sp, "seed"))};
    } else {
      fail(join(sp, "policy"), "unknown selection policy '" + policy + "'");
    }
  }
  return c;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string dec(const Rational& q) { return format_decimal(q, 60); }

Json loads_json(const LoadVector& v) {
  Json a = Json::array();
  for (Energy e : v) a.push_back(e.to_string());
  return a;
}

}  // namespace

Scenario parse_scenario(std::string_view input) {
  Json root;
  try {
    root = Json::parse(input.begin(), input.end());
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ScenarioError("syntax error at line " + std::to_string(line_of(input, byte)) + ": " + e.what());
  }
  expect_object(root, "scenario", {"schema_version", "grid", "price_model", "utility_model", "players"},
                {"initial_schedules", "solver", "player_granularity"});
  const std::uint64_t version = whole(root["schema_version"], "schema_version");
  if (version != kSchemaVersion) {
    fail("schema_version", "unsupported version " + std::to_string(version) + " (expected " +
                               std::to_string(kSchemaVersion) + ")");
  }

  Scenario s;
  const Json& grid = root["grid"];
  expect_object(grid, "grid", {"slot_count"}, {"slot_duration_hours"});
  s.game.grid.slot_count = whole(grid["slot_count"], "grid.slot_count");
  if (grid.contains("slot_duration_hours")) {
    s.game.grid.slot_duration_hours = decimal(grid["slot_duration_hours"], "grid.slot_duration_hours");
  }
  s.price = price_model(root["price_model"], "price_model");
  s.utility = utility_model(root["utility_model"], "utility_model");

  const Json& players = root["players"];
  if (!players.is_array()) fail("players", "expected an array");
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string path = at("players", i);
    expect_object(players[i], path, {"id", "appliances"});
    Player p;
    p.id = text(players[i]["id"], join(path, "id"));
    const Json& apps = players[i]["appliances"];
    if (!apps.is_array()) fail(join(path, "appliances"), "expected an array");
    for (std::size_t a = 0; a < apps.size(); ++a) p.appliances.push_back(appliance(apps[a], at(join(path, "appliances"), a)));
    s.game.players.push_back(std::move(p));
  }

  if (root.contains("initial_schedules")) {
    const Json& init = root["initial_schedules"];
    if (!init.is_object()) fail("initial_schedules", "expected an object keyed by player id");
    for (const auto& [pid, apps] : init.items()) {
      const std::string path = join("initial_schedules", pid);
      if (!apps.is_object()) fail(path, "expected an object keyed by appliance id");
      for (const auto& [aid, x] : apps.items()) s.initial[pid][aid] = loads(x, join(path, aid));
    }
  }
  if (root.contains("solver")) s.solver = solver_config(root["solver"], "solver");
  if (root.contains("player_granularity")) {
    const std::string g = text(root["player_granularity"], "player_granularity");
    if (g == "household") {
      s.granularity = Granularity::Household;
    } else if (g == "appliance") {
      s.granularity = Granularity::Appliance;
    } else {
      fail("player_granularity", "expected 'household' or 'appliance'");
    }
  }
  validate(s);
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  Json root;
  root["schema_version"] = kSchemaVersion;
  root["grid"] = {{"slot_count", s.game.grid.slot_count}, {"slot_duration_hours", dec(s.game.grid.slot_duration_hours)}};
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PowerLaw>) {
          root["price_model"] = {{"type", "power_law"}, {"alpha", dec(m.alpha)}, {"beta", dec(m.beta)}};
        } else {
          root["price_model"] = {{"type", "load_log"}, {"alpha", dec(m.alpha)}};
        }
      },
      s.price);
  Json util;
  util["type"] = std::string(utility_name(s.utility));
  if (const auto* v = std::get_if<ValueOfEnergy>(&s.utility)) {
    util["p_avg"] = dec(v->p_avg.value());
    Json players = Json::object();
    // game order first, so the file reads like the player list
    std::set<std::string> done;
    for (const auto& p : s.game.players) {
      const auto it = v->players.find(p.id);
      if (it == v->players.end()) continue;
      players[p.id] = {{"e_max", it->second.e_max.to_string()}, {"omega", dec(it->second.omega)}};
      done.insert(p.id);
    }
    for (const auto& [id, val] : v->players) {
      if (!done.count(id)) players[id] = {{"e_max", val.e_max.to_string()}, {"omega", dec(val.omega)}};
    }
    util["players"] = players;
  }
  root["utility_model"] = util;

  Json players = Json::array();
  for (const auto& p : s.game.players) {
    Json apps = Json::array();
    for (const auto& a : p.appliances) {
      Json j;
      j["id"] = a.id;
      std::visit(
          [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, FixedProfile>) {
              j["type"] = "fixed_profile";
              j["profile"] = loads_json(k.profile);
            } else if constexpr (std::is_same_v<T, ShiftableProfile>) {
              j["type"] = "shiftable_profile";
              j["load_profile"] = loads_json(k.load_profile);
              j["window"] = {k.window_start, k.window_end};
            } else {
              j["type"] = "shiftable_flexible";
              j["total_energy"] = k.total_energy.to_string();
              j["power_min"] = k.power_min.to_string();
              j["power_max"] = k.power_max.to_string();
              j["window"] = {k.window_start, k.window_end};
            }
          },
          a.kind);
      apps.push_back(j);
    }
    players.push_back({{"id", p.id}, {"appliances", apps}});
  }
  root["players"] = players;

  if (!s.initial.empty()) {
    Json init = Json::object();
    for (const auto& p : s.game.players) {
      const auto it = s.initial.find(p.id);
      if (it == s.initial.end()) continue;
      Json apps = Json::object();
      for (const auto& a : p.appliances) {
        const auto x = it->second.find(a.id);
        if (x != it->second.end()) apps[a.id] = loads_json(x->second);
      }
      init[p.id] = apps;
    }
    root["initial_schedules"] = init;
  }

  Json solver;
  solver["flex_quantum"] = s.solver.flex_quantum.to_string();
  solver["tolerance"] = dec(s.solver.tolerance);
  solver["max_iterations"] = s.solver.max_iterations;
  if (const auto* r = std::get_if<SeededRandom>(&s.solver.selection)) {
    solver["selection"] = {{"policy", "seeded_random"}, {"seed", r->seed}};
  } else {
    solver["selection"] = {{"policy", "round_robin"}};
  }
  solver["strategy_cap"] = s.solver.strategy_cap;
  solver["reject_phi_increase"] = s.solver.reject_phi_increase;
  root["solver"] = solver;
  root["player_granularity"] = s.granularity == Granularity::Appliance ? "appliance" : "household";
  return root.dump(2) + "\n";
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace loadgame
