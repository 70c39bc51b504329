#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trifree/coloring_state.hpp"
#include "trifree/diagnostics.hpp"
#include "trifree/graph.hpp"
#include "trifree/rng.hpp"
#include "trifree/schedule.hpp"

namespace trifree {

// The engine executes one schedule round as three synchronous phases.
// Every decision in a phase depends only on the state at the start of
// the round (phases I and II) or at the end of phase II (phase III);
// all mutations are applied after the whole phase has been decided.

/// Colors tentatively assigned in the coloring attempt, in CSR form.
/// Per-vertex color lists are ascending.
class TentativeTable {
 public:
  TentativeTable(Vertex n) : offsets_(std::size_t(n) + 1, 0) {}

  std::span<const ColorId> at(Vertex u) const {
    return {colors_.data() + offsets_[u], colors_.data() + offsets_[u + 1]};
  }
  bool has(Vertex u, ColorId c) const;
  std::size_t total() const noexcept { return colors_.size(); }

  // filled by phase_assign
  std::vector<std::size_t> offsets_;
  std::vector<ColorId> colors_;
};

/// Exact per-(vertex,color) survival of the conflict phase: the chance
/// that none of the dcount relevant neighbors picks c, (1 - p)^dcount.
double survival_probability(double assign_prob, std::uint32_t dcount);

/// Phase I: every uncolored u tentatively takes each palette color
/// independently with probability assign_prob. A vertex may hold several
/// tentative colors. Pure draw per (round, vertex, color).
TentativeTable phase_assign(const Graph& g, const ColoringState& st, double assign_prob,
                            const TrialRng& rng, std::uint32_t round);

struct ConflictResult {
  std::uint32_t newly_colored = 0;
  std::uint32_t removals_phase2_1 = 0;  // conflict removals
  std::uint32_t removals_phase2_2 = 0;  // equalizing-coin removals
};

/// Phase II. II.1 removes from each palette every color tentatively held
/// by a neighbor. II.2 removes each surviving color with probability
/// 1 - min(1, desired / survival), where survival uses the dcount values
/// frozen at round start. A vertex whose palette still contains one of
/// its own tentative colors is permanently colored with the smallest
/// such color. Counter updates are applied after all vertices decided.
ConflictResult phase_conflict(const Graph& g, ColoringState& st, const TentativeTable& tent,
                              double desired_survival, double assign_prob, const TrialRng& rng,
                              std::uint32_t round);

struct CleanupDecision {
  Vertex vertex = 0;
  double gamma = 1.0;
  double threshold = 0.0;  // q * gamma * d_next; colors at or above it go
};

struct CleanupResult {
  std::uint32_t removals = 0;
  std::vector<CleanupDecision> decisions;  // only when keep_decisions
};

/// Phase III: per-vertex Markov trim. With m = |palette(u)|,
///   alpha = clamp(1 - m/s_next, 0, 1/q),
///   gamma = max(1, avg * (1-alpha) / ((1-q*alpha) * d_next)),
/// every color with dcount(u,c) >= q*gamma*d_next is dropped. When
/// 1 - q*alpha vanishes no finite gamma exists and nothing is removed.
/// dcount here is the end-of-phase-II state; updates are synchronous.
CleanupResult phase_cleanup(const Graph& g, ColoringState& st, double d_next, double s_next,
                            double q, bool keep_decisions = false);

struct RoundOutcome {
  std::uint32_t newly_colored = 0;
  std::uint32_t removals_phase2_1 = 0;
  std::uint32_t removals_phase2_2 = 0;
  std::uint32_t removals_phase3 = 0;
  bool clamped = false;
};

/// Observer hooks for tests and diagnostics. Called while the round's
/// intermediate data is still available.
class RoundObserver {
 public:
  virtual ~RoundObserver() = default;
  virtual void after_cleanup(std::uint32_t /*t*/, const ColoringState& /*st*/,
                             std::span<const CleanupDecision> /*decisions*/) {}
  virtual void after_round(std::uint32_t /*t*/, const ColoringState& /*st*/,
                           const RoundOutcome& /*outcome*/) {}
};

/// Runs round t (phases I-III) with the schedule's row-t parameters and
/// advances the state's round counter. Throws a distinct error when the
/// row's assignment probability was clamped and strict is set.
RoundOutcome run_round(const Graph& g, ColoringState& st, const Schedule& schedule,
                       std::uint32_t t, const TrialRng& rng, bool strict = false,
                       RoundObserver* observer = nullptr);

struct GreedyOutcome {
  bool completed = false;
  Vertex stuck_vertex = 0;
};

/// Third stage: uncolored vertices in ascending id order each take the
/// smallest palette color not already on a colored neighbor. Reports the
/// first vertex with no admissible color.
GreedyOutcome greedy_complete(const Graph& g, ColoringState& st);

struct RunConfig {
  std::uint32_t num_colors = 0;  // 0: use floor(delta / k)
  double k = 2.0;
  double q = 7.0;
  double psi = 0.0;     // <= 0: default 3 log n
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  std::uint64_t seed = 0;
  std::uint32_t schedule_round_cap = 1'000'000;
  std::uint32_t max_rounds = 0;  // 0: run all schedule rounds
  bool collect_traces = false;
  bool strict_regime = false;
  bool check_triangle_free = true;
  bool debug_recount = false;
};

enum class FailureReason {
  none,
  invalid_config,
  not_triangle_free,
  schedule_cap_exceeded,
  clamped_probability,
  greedy_stuck,
  improper_coloring,
};

const char* failure_reason_name(FailureReason r);

struct RunReport {
  bool success = false;
  FailureReason reason = FailureReason::none;
  std::uint32_t fail_stage = 0;  // 1, 2, or 3 (greedy)
  std::uint32_t fail_round = 0;
  Vertex fail_vertex = 0;
  std::array<Vertex, 3> triangle{0, 0, 0};

  std::uint32_t num_colors = 0;
  double k_effective = 0;  // delta / num_colors as used by the schedule
  double q = 0;
  std::uint32_t schedule_rounds = 0;  // tau
  std::uint32_t stage1_rounds = 0;
  std::uint32_t stage2_rounds = 0;
  std::uint32_t rounds_used = 0;
  std::uint32_t colors_used = 0;
  std::optional<Coloring> coloring;  // present on success
  std::vector<RoundTrace> traces;    // present when collect_traces
  double wall_ms = 0;
  std::uint64_t seed = 0;
};

/// One full trial: schedule construction, rounds 0..tau-1 (stopping early
/// once everything is colored or cfg.max_rounds is reached), then greedy
/// completion. Every failure mode is reported through the RunReport; the
/// call itself only throws on programming errors. Deterministic per
/// (graph, config, seed).
RunReport run(const Graph& g, const RunConfig& cfg, RoundObserver* observer = nullptr);

}  // namespace trifree
