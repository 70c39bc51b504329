#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trifree/coloring_state.hpp"
#include "trifree/schedule.hpp"

namespace trifree {

// Violation inequality ids used in RoundTrace::violations:
//   "palette"     s_t(u) <  ((q-1)/q) s_t (1 - e_t)
//   "avg_dcount"  d_t(u) >  d_t (1 + e_t)
//   "eta"         eta_t(u) > eta_t (1 + e_t)
//   "dcount"      d_t(u,c) > q d_t (1 + e_t) for some c

struct TraceViolation {
  Vertex vertex = 0;
  std::string inequality;
};

/// Per-round diagnostic record: extremes of the per-vertex quantities
/// relative to the schedule row, and the vertices outside the envelope.
struct RoundTrace {
  std::uint32_t t = 0;
  double eta_ideal = 0;
  double d_ideal = 0;
  double s_ideal = 0;
  double max_eta_ratio = 0;          // max_u eta_t(u) / eta_t
  double min_palette_ratio = 0;      // min_u s_t(u) / (((q-1)/q) s_t)
  double max_avg_dcount_ratio = 0;   // max_u d_t(u) / d_t
  double max_dcount_ratio = 0;       // max_{u,c} d_t(u,c) / (q d_t)
  double envelope = 0;
  std::uint32_t uncolored = 0;
  std::vector<TraceViolation> violations;
};

/// Pure observer: scans the state at the beginning of round t and
/// reports extremes and envelope violations against schedule row t.
RoundTrace snapshot(const ColoringState& st, const Schedule& schedule, std::uint32_t t);

struct DispersionReport {
  bool applicable = false;        // needs >= 2 colors and d_1 >= 1
  bool dispersion_present = false;
  Vertex vertex = 0;
  ColorId color = kNoColor;
  double d1 = 0;
};

/// Checks the complete-bipartite concentration failure: after round 0
/// there is an uncolored u and a palette color c with dcount(u,c) = 0
/// while the schedule still expects d_1 >= 1. This is the dispersion
/// that motivates the cleanup phase.
DispersionReport bipartite_dispersion_check(const ColoringState& after_round0, double d1);

}  // namespace trifree
