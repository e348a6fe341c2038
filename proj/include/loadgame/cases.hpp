#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loadgame/scenario.hpp"

namespace loadgame {

enum class CaseId { Table4, Table5, Table6_9, Table10_11, Table12_13, Table14_15, Table16, PrisonersDilemma };

std::string_view to_string(CaseId id);
std::optional<CaseId> parse_case_id(std::string_view text);
const std::vector<CaseId>& all_cases();

struct ReferenceCase {
  CaseId id;
  std::optional<Scenario> scenario;  // absent for table12_13 and prisoners_dilemma
  std::string summary;
};

ReferenceCase build_case(CaseId id);

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CaseReport {
  CaseId id;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
};

// Recomputes every golden value of the case from its scenario through the
// public solver API. Displayed values match within 0.005; derived values must
// match exactly.
CaseReport verify_case(const ReferenceCase& reference_case);

std::string render_report(const CaseReport& report);

}  // namespace loadgame
