#include "loadgame/report.hpp"

#include <algorithm>
#include <sstream>

namespace loadgame {

namespace {

std::string money(const Money& m) { return format_decimal(m.value(), 12); }

std::string percent(const Rational& fraction) { return format_fixed(Rational(fraction * 100), 2) + "%"; }

std::string marked(const PayoffTable& t, std::size_t cell, std::size_t player) {
  std::string s = t.costs[cell][player].display(2);
  if (t.nash[cell]) {
    s += "**";
  } else if (t.best_response[cell][player]) {
    s += "*";
  }
  return s;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string trace_csv(const DynamicsTrace& trace) {
  std::ostringstream out;
  out << "iteration,player,accepted,own_cost_before,own_cost_after,phi_before,phi_after,potential_consistent,phi_delta\n";
  for (const auto& s : trace.steps) {
    out << s.iteration << ',' << csv_field(s.player_id) << ',' << (s.accepted ? "true" : "false") << ','
        << money(s.own_cost_before) << ',' << money(s.own_cost_after) << ',' << money(s.phi_before) << ','
        << money(s.phi_after) << ',' << (s.potential_consistent ? "true" : "false") << ','
        << money(s.phi_after - s.phi_before) << '\n';
  }
  return out.str();
}

std::string render_payoff(const PayoffTable& t) {
  std::ostringstream out;
  if (t.player_count() == 2) {
    const std::size_t rows = t.strategy_count(0), cols = t.strategy_count(1);
    std::vector<std::string> cells(rows * cols);
    std::size_t width = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      cells[c] = marked(t, c, 0) + " - " + marked(t, c, 1);
      width = std::max(width, cells[c].size());
    }
    const std::string corner = t.player_ids[0] + " \\ " + t.player_ids[1];
    std::size_t label_width = corner.size();
    for (const auto& l : t.strategy_labels[0]) label_width = std::max(label_width, l.size());
    for (const auto& l : t.strategy_labels[1]) width = std::max(width, l.size());
    out << pad(corner, label_width);
    for (const auto& l : t.strategy_labels[1]) out << " | " << pad(l, width);
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
      out << pad(t.strategy_labels[0][r], label_width);
      for (std::size_t c = 0; c < cols; ++c) out << " | " << pad(cells[r * cols + c], width);
      out << '\n';
    }
  } else {
    for (std::size_t c = 0; c < t.cell_count(); ++c) {
      const auto choice = t.decode(c);
      out << '(';
      for (std::size_t i = 0; i < choice.size(); ++i) out << (i ? "," : "") << t.strategy_labels[i][choice[i]];
      out << "):";
      for (std::size_t i = 0; i < choice.size(); ++i) out << ' ' << marked(t, c, i);
      out << '\n';
    }
  }
  const auto nash = find_pure_nash(t);
  out << "pure Nash equilibria: " << nash.size() << '\n';
  for (const auto& n : nash) {
    out << "  (";
    for (std::size_t i = 0; i < n.choice.size(); ++i) out << (i ? "," : "") << t.strategy_labels[i][n.choice[i]];
    out << ") total " << n.total.display(2);
    if (n.par) out << " PAR " << format_fixed(*n.par, 2);
    out << '\n';
  }
  return out.str();
}

std::string render_metrics(const MetricsReport& r, bool with_baseline) {
  std::ostringstream out;
  out << "total cost: " << r.total_cost.display(2);
  if (with_baseline) out << " (baseline " << r.baseline_total_cost.display(2) << ")";
  out << '\n';
  for (const auto& [id, c] : r.player_costs) out << "  " << id << ": " << c.display(2) << '\n';
  out << "PAR: " << format_fixed(r.par, 2);
  if (with_baseline) out << " (baseline " << format_fixed(r.baseline_par, 2) << ")";
  out << '\n';
  out << "peak load: " << r.peak.to_string() << " kWh, average load: " << format_fixed(r.average_load, 3) << " kWh\n";
  if (with_baseline) {
    out << "cost reduction: " << percent(r.cost_reduction) << '\n';
    out << "PAR reduction: " << percent(r.par_reduction) << '\n';
  }
  return out.str();
}

}  // namespace loadgame
