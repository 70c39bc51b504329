#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "trifree/engine.hpp"
#include "trifree/graph.hpp"

namespace trifree {

struct SweepConfig {
  RunConfig run;              // seed field is ignored; the range below wins
  std::uint64_t seed_begin = 1;
  std::uint64_t seed_end = 1;  // inclusive
  std::uint32_t parallelism = 1;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  bool success = false;
  FailureReason reason = FailureReason::none;
  std::uint32_t rounds_used = 0;
  std::uint32_t colors_used = 0;
  double wall_ms = 0;
};

struct SweepSummary {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint32_t min_rounds = 0;
  std::uint32_t max_rounds = 0;
  double mean_rounds = 0;
  double mean_colors_used = 0;
  std::uint32_t greedy_baseline_colors = 0;
  std::vector<TrialRecord> records;  // seed order
};

/// Independent trials over the seed range, fanned out across up to
/// `parallelism` workers. Trials share only the graph (read-only); the
/// aggregate is a pure fold over per-trial reports in seed order, so the
/// summary does not depend on the parallelism degree.
SweepSummary sweep(const Graph& g, const SweepConfig& cfg);

/// Per-trial CSV: seed,outcome,rounds,colors_used,greedy_baseline,wall_ms.
void write_sweep_csv(const SweepSummary& s, std::ostream& out);

/// Aggregate text, wall-time free (stable across identical invocations).
void render_sweep_summary(const SweepSummary& s, std::ostream& out);

}  // namespace trifree
