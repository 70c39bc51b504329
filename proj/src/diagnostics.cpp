#include "trifree/diagnostics.hpp"

#include <algorithm>

namespace trifree {

namespace {

double ratio_or_zero(double num, double den) { return den > 0 ? num / den : 0.0; }

}  // namespace

RoundTrace snapshot(const ColoringState& st, const Schedule& schedule, std::uint32_t t) {
  const ScheduleRow& row = schedule.row(t);
  const double q = schedule.params().q;
  const double e = row.envelope;

  RoundTrace trace;
  trace.t = t;
  trace.eta_ideal = row.eta;
  trace.d_ideal = row.d;
  trace.s_ideal = row.s;
  trace.envelope = e;
  trace.uncolored = st.uncolored_count();

  const double palette_floor = ((q - 1) / q) * row.s;
  bool any = false;
  double min_palette = 0;

  const std::uint32_t colors = st.num_colors();
  for (Vertex u = 0; u < st.vertex_count(); ++u) {
    if (st.is_colored(u)) continue;
    const double eta_u = double(st.uncolored_degree(u));
    const double s_u = double(st.palette_size(u));

    trace.max_eta_ratio = std::max(trace.max_eta_ratio, ratio_or_zero(eta_u, row.eta));
    const double pr = ratio_or_zero(s_u, palette_floor);
    if (!any || pr < min_palette) min_palette = pr;
    any = true;

    double sum = 0;
    double max_dc = 0;
    for (std::uint32_t c = 0; c < colors; ++c) {
      if (!st.palette_has(u, ColorId(c))) continue;
      const double dc = double(st.dcount(u, ColorId(c)));
      sum += dc;
      max_dc = std::max(max_dc, dc);
    }
    const double avg = st.palette_size(u) ? sum / double(st.palette_size(u)) : 0.0;
    trace.max_avg_dcount_ratio = std::max(trace.max_avg_dcount_ratio, ratio_or_zero(avg, row.d));
    trace.max_dcount_ratio = std::max(trace.max_dcount_ratio, ratio_or_zero(max_dc, q * row.d));

    // per-vertex envelope checks
    if (s_u < palette_floor * (1.0 - e)) trace.violations.push_back({u, "palette"});
    if (avg > row.d * (1.0 + e)) trace.violations.push_back({u, "avg_dcount"});
    if (eta_u > row.eta * (1.0 + e)) trace.violations.push_back({u, "eta"});
    if (max_dc > q * row.d * (1.0 + e)) trace.violations.push_back({u, "dcount"});
  }
  trace.min_palette_ratio = any ? min_palette : 0.0;
  return trace;
}

DispersionReport bipartite_dispersion_check(const ColoringState& after_round0, double d1) {
  DispersionReport report;
  report.d1 = d1;
  report.applicable = after_round0.num_colors() >= 2 && d1 >= 1.0;
  if (!report.applicable) return report;

  const std::uint32_t colors = after_round0.num_colors();
  for (Vertex u = 0; u < after_round0.vertex_count(); ++u) {
    if (after_round0.is_colored(u)) continue;
    for (std::uint32_t c = 0; c < colors; ++c) {
      if (after_round0.palette_has(u, ColorId(c)) && after_round0.dcount(u, ColorId(c)) == 0) {
        report.dispersion_present = true;
        report.vertex = u;
        report.color = ColorId(c);
        return report;
      }
    }
  }
  return report;
}

}  // namespace trifree
