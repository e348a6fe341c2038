#pragma once

#include <string>
#include <string_view>

#include "loadgame/scenario.hpp"

namespace loadgame {

inline constexpr int kSchemaVersion = 1;

// Strict JSON reader: unknown fields, wrong types and non-string decimals are
// ScenarioErrors naming the field path (syntax errors name the line). Model
// invariant breaches keep their own error types.
Scenario parse_scenario(std::string_view text);

// Canonical form: fixed key order, two-space indent, trailing newline.
std::string serialize_scenario(const Scenario& scenario);

Scenario load_scenario_file(const std::string& path);

}  // namespace loadgame
