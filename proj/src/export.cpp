#include "trifree/export.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace trifree {

void render_report(const RunReport& report, const Graph& g, std::ostream& out) {
  char num[64];
  out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
      << " max_degree=" << g.max_degree() << '\n';
  out << "params: colors=" << report.num_colors;
  std::snprintf(num, sizeof num, " k=%.17g q=%.17g", report.k_effective, report.q);
  out << num << " seed=" << report.seed << '\n';
  out << "schedule: rounds=" << report.schedule_rounds << " stage1=" << report.stage1_rounds
      << " stage2=" << report.stage2_rounds << '\n';
  if (report.success) {
    out << "outcome: success\n";
  } else {
    out << "outcome: failure reason=" << failure_reason_name(report.reason)
        << " stage=" << report.fail_stage << " round=" << report.fail_round;
    if (report.reason == FailureReason::greedy_stuck) out << " vertex=" << report.fail_vertex;
    if (report.reason == FailureReason::not_triangle_free)
      out << " triangle=(" << report.triangle[0] << "," << report.triangle[1] << ","
          << report.triangle[2] << ")";
    out << '\n';
  }
  out << "rounds_used: " << report.rounds_used << '\n';
  out << "colors_used: " << report.colors_used << '\n';
}

void write_trace_jsonl(std::span<const RoundTrace> traces, std::ostream& out) {
  for (const auto& tr : traces) {
    nlohmann::json row;
    row["t"] = tr.t;
    row["eta_ideal"] = tr.eta_ideal;
    row["d_ideal"] = tr.d_ideal;
    row["s_ideal"] = tr.s_ideal;
    row["max_eta_ratio"] = tr.max_eta_ratio;
    row["min_palette_ratio"] = tr.min_palette_ratio;
    row["max_avg_dcount_ratio"] = tr.max_avg_dcount_ratio;
    row["max_dcount_ratio"] = tr.max_dcount_ratio;
    row["envelope"] = tr.envelope;
    row["uncolored"] = tr.uncolored;
    auto violations = nlohmann::json::array();
    for (const auto& v : tr.violations)
      violations.push_back(nlohmann::json::array({v.vertex, v.inequality}));
    row["violations"] = violations;
    out << row.dump() << '\n';
  }
}

}  // namespace trifree
