#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "loadgame/cases.hpp"
#include "loadgame/errors.hpp"
#include "loadgame/random_scenario.hpp"
#include "loadgame/scenario_io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string table6_9_text() { return serialize_scenario(*build_case(CaseId::Table6_9).scenario); }

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

std::string error_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped scenario files are canonical") {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SCENARIO_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const std::string text = read_file(entry.path());
    CHECK(serialize_scenario(parse_scenario(text)) == text);
    ++count;
  }
  CHECK(count >= 7);
}

TEST_CASE("exported cases match their files and still verify after a round trip") {
  for (CaseId id : all_cases()) {
    const ReferenceCase c = build_case(id);
    if (!c.scenario) continue;
    CAPTURE(to_string(id));
    const std::string text = serialize_scenario(*c.scenario);
    CHECK(read_file(std::filesystem::path(SCENARIO_DIR) / (std::string(to_string(id)) + ".json")) == text);
    ReferenceCase reread = c;
    reread.scenario = parse_scenario(text);
    CHECK(verify_case(reread).passed());
  }
}

TEST_CASE("random scenarios always parse and validate") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t players = 1 + draw_below(rng, 12), slots = 1 + draw_below(rng, 48);
    const auto kind = static_cast<UtilityKind>(draw_below(rng, 3));
    const std::string text = serialize_scenario(random_scenario(players, slots, seed, kind));
    CAPTURE(seed);
    Scenario s;
    REQUIRE_NOTHROW(s = parse_scenario(text));
    CHECK(serialize_scenario(s) == text);
    CHECK(s.game.players.size() == players);
    const std::string small = serialize_scenario(random_small_scenario(seed, kind));
    CHECK(serialize_scenario(parse_scenario(small)) == small);
  }
}

TEST_CASE("schema errors name the field") {
  const std::string base = table6_9_text();
  CHECK(error_of(replace(base, "\"slot_count\": 3", "\"slot_count\": 3, \"colour\": 1")).find("grid: unknown field 'colour'") !=
        std::string::npos);
  CHECK(error_of(replace(base, "\"alpha\": \"1\"", "\"alpha\": 1")).find("price_model.alpha") != std::string::npos);
  CHECK(error_of(replace(base, "\"schema_version\": 1", "\"schema_version\": 2")).find("unsupported version 2") !=
        std::string::npos);
  CHECK(error_of(replace(base, "\"type\": \"shiftable_profile\"", "\"type\": \"teleporter\"")).find("players[0].appliances[1]") !=
        std::string::npos);
  CHECK(error_of(replace(base, "\"slot_count\": 3,", "")).find("missing field 'slot_count'") != std::string::npos);
  CHECK(error_of(replace(base, "\"2.5\"", "\"2,5\"")).find("players[1]") != std::string::npos);
}

TEST_CASE("syntax errors give the line") {
  const std::string base = table6_9_text();
  const std::string broken = replace(base, "\"beta\": \"2\"", "\"beta\": \"2\",,");
  const std::string what = error_of(broken);
  CAPTURE(what);
  CHECK(what.find("syntax error at line 10") != std::string::npos);
}

TEST_CASE("model invariants keep their own errors") {
  const std::string base = table6_9_text();
  CHECK_THROWS_AS(parse_scenario(replace(base, "\"beta\": \"2\"", "\"beta\": \"0.5\"")), ParameterError);
  CHECK(error_of(replace(base, "\"beta\": \"2\"", "\"beta\": \"0.5\"")).find("beta must be >= 1") != std::string::npos);
  const std::string reversed = replace(base, "\"window\": [\n            0,\n            2\n          ]",
                                       "\"window\": [\n            2,\n            0\n          ]");
  CHECK_THROWS_AS(parse_scenario(reversed), DomainError);
  CHECK(error_of(reversed).find("shiftable") != std::string::npos);
}

TEST_CASE("initial schedules are checked") {
  Scenario s = *build_case(CaseId::Table6_9).scenario;
  s.initial["pl1"]["fixed"] = loads({"1", "0", "0"});
  s.initial["pl1"]["shiftable"] = loads({"0", "2", "0"});
  CHECK(initial_profile(s).aggregate(0) == loads({"1", "2", "0"}));
  CHECK(initial_profile(s).aggregate(1) == loads({"2.5", "5", "0"}));
  const std::string text = serialize_scenario(s);
  CHECK(parse_scenario(text).initial.at("pl1").at("shiftable") == loads({"0", "2", "0"}));
  s.initial["pl1"]["shiftable"] = loads({"1", "1", "0"});
  CHECK_THROWS_AS(validate(s), InfeasibleError);
  s.initial["pl1"].erase("shiftable");
  s.initial["pl1"]["dryer"] = loads({"0", "2", "0"});
  CHECK_THROWS_AS(validate(s), MissingPlayerError);
  s.initial.clear();
  s.initial["nobody"]["fixed"] = loads({"0", "0", "0"});
  CHECK_THROWS_AS(validate(s), MissingPlayerError);
}

TEST_CASE("flexible energy must sit on the quantum grid") {
  Scenario s = *build_case(CaseId::Table14_15).scenario;
  s.solver.flex_quantum = kwh("4");
  CHECK_THROWS_AS(validate(s), InfeasibleError);
}

TEST_CASE("seed overrides the configured selection") {
  SolverConfig c;
  c.max_iterations = 7;
  CHECK(std::holds_alternative<RoundRobin>(dynamics_options(c).selection));
  const auto o = dynamics_options(c, 5);
  REQUIRE(std::holds_alternative<SeededRandom>(o.selection));
  CHECK(std::get<SeededRandom>(o.selection).seed == 5);
  CHECK(o.max_iterations == 7);
  c.selection = SeededRandom{9};
  const std::string text = replace(table6_9_text(), "\"policy\": \"round_robin\"", "\"policy\": \"seeded_random\",\n      \"seed\": 9");
  CHECK(std::get<SeededRandom>(parse_scenario(text).solver.selection).seed == 9);
}

TEST_CASE("appliance granularity") {
  Scenario s = random_scenario(3, 24, 5, UtilityKind::ValueOfEnergy);
  s.granularity = Granularity::Appliance;
  const Scenario t = effective_scenario(s);
  std::size_t expected = 0;
  for (const auto& p : s.game.players) {
    for (const auto& a : p.appliances) expected += a.is_fixed() ? 0 : 1;
    ++expected;  // residual fixed player
  }
  REQUIRE(t.game.players.size() == expected);
  CHECK(t.game.players.front().id == s.game.players.front().id + "/" + s.game.players.front().appliances[1].id);
  CHECK(t.game.players[expected / 3 - 1].id.ends_with("/fixed"));
  for (const auto& p : t.game.players) CHECK(std::get<ValueOfEnergy>(t.utility).players.count(p.id) == 1);
  CHECK(initial_profile(t).total_load() == initial_profile(s).total_load());
  CHECK(serialize_scenario(parse_scenario(serialize_scenario(s))) == serialize_scenario(s));
  // Household mode is left alone.
  s.granularity = Granularity::Household;
  CHECK(effective_scenario(s).game.players.size() == 3);
}
