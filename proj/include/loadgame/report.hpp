#pragma once

#include <string>

#include "loadgame/dynamics.hpp"
#include "loadgame/metrics.hpp"
#include "loadgame/payoff.hpp"

namespace loadgame {

// One row per step; money as exact decimals (rounded at 12 places).
// Columns: iteration, player, accepted, own_cost_before, own_cost_after,
// phi_before, phi_after, potential_consistent, phi_delta.
std::string trace_csv(const DynamicsTrace& trace);

// RFC 4180 field quoting.
std::string csv_field(const std::string& value);

// Grid for two players, one line per cell otherwise. Costs shown with two
// decimals; '*' marks a best response, '**' a Nash cell.
std::string render_payoff(const PayoffTable& table);

// Baseline columns and reductions only when `with_baseline`.
std::string render_metrics(const MetricsReport& report, bool with_baseline = true);

}  // namespace loadgame
