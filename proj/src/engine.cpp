#include "trifree/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "trifree/error.hpp"

namespace trifree {

bool TentativeTable::has(Vertex u, ColorId c) const {
  auto span = at(u);
  return std::binary_search(span.begin(), span.end(), c);
}

double survival_probability(double assign_prob, std::uint32_t dcount) {
  return std::pow(1.0 - assign_prob, double(dcount));
}

TentativeTable phase_assign(const Graph& g, const ColoringState& st, double assign_prob,
                            const TrialRng& rng, std::uint32_t round) {
  const Vertex n = g.vertex_count();
  const std::uint32_t colors = st.num_colors();
  TentativeTable tent(n);
  for (Vertex u = 0; u < n; ++u) {
    tent.offsets_[u] = tent.colors_.size();
    if (st.is_colored(u)) continue;
    for (std::uint32_t c = 0; c < colors; ++c) {
      if (!st.palette_has(u, ColorId(c))) continue;
      if (rng.bernoulli(assign_prob, round, u, c, TrialRng::tag_assign))
        tent.colors_.push_back(ColorId(c));
    }
  }
  tent.offsets_[n] = tent.colors_.size();
  return tent;
}

ConflictResult phase_conflict(const Graph& g, ColoringState& st, const TentativeTable& tent,
                              double desired_survival, double assign_prob, const TrialRng& rng,
                              std::uint32_t round) {
  const Vertex n = g.vertex_count();
  const std::uint32_t colors = st.num_colors();
  ConflictResult res;

  // (u,c) pairs where some neighbor of u tentatively holds c
  std::vector<std::uint8_t> neighbor_tent(std::size_t(n) * colors, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto tv = tent.at(v);
    if (tv.empty()) continue;
    for (Vertex u : g.neighbors(v)) {
      if (st.is_colored(u)) continue;
      for (ColorId c : tv) neighbor_tent[std::size_t(u) * colors + std::size_t(c)] = 1;
    }
  }

  // decision pass: reads only round-start state
  std::vector<std::uint8_t> removed(std::size_t(n) * colors, 0);
  std::vector<std::pair<Vertex, ColorId>> winners;
  for (Vertex u = 0; u < n; ++u) {
    if (st.is_colored(u)) continue;
    ColorId pick = kNoColor;
    for (std::uint32_t c = 0; c < colors; ++c) {
      if (!st.palette_has(u, ColorId(c))) continue;
      const std::size_t idx = std::size_t(u) * colors + c;
      if (neighbor_tent[idx]) {
        removed[idx] = 1;
        ++res.removals_phase2_1;
        continue;
      }
      const double survival = survival_probability(assign_prob, st.dcount(u, ColorId(c)));
      const double remove_prob = 1.0 - std::min(1.0, desired_survival / survival);
      if (rng.bernoulli(remove_prob, round, u, c, TrialRng::tag_equalize)) {
        removed[idx] = 1;
        ++res.removals_phase2_2;
        continue;
      }
      if (pick == kNoColor && tent.has(u, ColorId(c))) pick = ColorId(c);
    }
    if (pick != kNoColor) winners.emplace_back(u, pick);
  }

  // apply pass: colorings first (they retire the whole palette), then
  // the per-color removals of vertices that stay uncolored
  for (auto [u, c] : winners) {
    st.mark_colored(g, u, c);
    ++res.newly_colored;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (st.is_colored(u)) continue;
    for (std::uint32_t c = 0; c < colors; ++c)
      if (removed[std::size_t(u) * colors + c]) st.remove_palette_color(g, u, ColorId(c));
  }
  return res;
}

CleanupResult phase_cleanup(const Graph& g, ColoringState& st, double d_next, double s_next,
                            double q, bool keep_decisions) {
  const Vertex n = g.vertex_count();
  const std::uint32_t colors = st.num_colors();
  constexpr double kGammaGuard = 1e-12;
  CleanupResult res;

  std::vector<std::pair<Vertex, ColorId>> removals;
  for (Vertex u = 0; u < n; ++u) {
    if (st.is_colored(u)) continue;
    const std::uint32_t m = st.palette_size(u);
    if (m == 0) continue;

    double alpha = 1.0 - double(m) / s_next;
    alpha = std::clamp(alpha, 0.0, 1.0 / q);

    double sum = 0;
    for (std::uint32_t c = 0; c < colors; ++c)
      if (st.palette_has(u, ColorId(c))) sum += double(st.dcount(u, ColorId(c)));
    const double avg = sum / double(m);

    const double denom = 1.0 - q * alpha;
    double gamma, threshold;
    if (denom <= kGammaGuard || !(d_next > 0)) {
      // no finite gamma in [1, inf) satisfies the averaging bound
      gamma = std::numeric_limits<double>::infinity();
      threshold = std::numeric_limits<double>::infinity();
    } else {
      gamma = std::max(1.0, avg * (1.0 - alpha) / (denom * d_next));
      threshold = q * gamma * d_next;
    }
    if (keep_decisions) res.decisions.push_back({u, gamma, threshold});

    for (std::uint32_t c = 0; c < colors; ++c)
      if (st.palette_has(u, ColorId(c)) && double(st.dcount(u, ColorId(c))) >= threshold)
        removals.emplace_back(u, ColorId(c));
  }

  for (auto [u, c] : removals) {
    st.remove_palette_color(g, u, c);
    ++res.removals;
  }
  return res;
}

RoundOutcome run_round(const Graph& g, ColoringState& st, const Schedule& schedule,
                       std::uint32_t t, const TrialRng& rng, bool strict,
                       RoundObserver* observer) {
  if (t >= schedule.total_rounds())
    throw Error(ErrorCode::out_of_range, "round at or past schedule end");
  const ScheduleRow& row = schedule.row(t);
  if (row.clamped && strict)
    throw Error(ErrorCode::out_of_range,
                "strict regime: assignment probability clamped at round " + std::to_string(t));
  const ScheduleRow& next = schedule.row(t + 1);

  RoundOutcome out;
  out.clamped = row.clamped;

  TentativeTable tent = phase_assign(g, st, row.assign_prob, rng, t);
  ConflictResult conflict =
      phase_conflict(g, st, tent, row.desired_survival, row.assign_prob, rng, t);
  out.newly_colored = conflict.newly_colored;
  out.removals_phase2_1 = conflict.removals_phase2_1;
  out.removals_phase2_2 = conflict.removals_phase2_2;

  CleanupResult cleanup =
      phase_cleanup(g, st, next.d, next.s, schedule.params().q, observer != nullptr);
  out.removals_phase3 = cleanup.removals;
  if (observer) observer->after_cleanup(t, st, cleanup.decisions);

  st.advance_round();
  if (observer) observer->after_round(t, st, out);
  return out;
}

GreedyOutcome greedy_complete(const Graph& g, ColoringState& st) {
  const Vertex n = g.vertex_count();
  const std::uint32_t colors = st.num_colors();
  std::vector<std::uint8_t> used(colors, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (st.is_colored(u)) continue;
    std::fill(used.begin(), used.end(), 0);
    for (Vertex v : g.neighbors(u))
      if (st.is_colored(v)) used[std::size_t(st.color_of(v))] = 1;
    ColorId pick = kNoColor;
    for (std::uint32_t c = 0; c < colors; ++c) {
      if (st.palette_has(u, ColorId(c)) && !used[c]) {
        pick = ColorId(c);
        break;
      }
    }
    if (pick == kNoColor) return {false, u};
    st.mark_colored(g, u, pick);
  }
  return {true, 0};
}

const char* failure_reason_name(FailureReason r) {
  switch (r) {
    case FailureReason::none: return "";
    case FailureReason::invalid_config: return "invalid_config";
    case FailureReason::not_triangle_free: return "not_triangle_free";
    case FailureReason::schedule_cap_exceeded: return "schedule_cap_exceeded";
    case FailureReason::clamped_probability: return "clamped_probability";
    case FailureReason::greedy_stuck: return "greedy_stuck";
    case FailureReason::improper_coloring: return "improper_coloring";
  }
  return "unknown";
}

namespace {

Coloring extract_coloring(const ColoringState& st, Vertex n) {
  Coloring c;
  c.num_colors = st.num_colors();
  c.assignment.resize(n);
  for (Vertex u = 0; u < n; ++u) c.assignment[u] = st.color_of(u);
  return c;
}

}  // namespace

RunReport run(const Graph& g, const RunConfig& cfg, RoundObserver* observer) {
  const auto t_start = std::chrono::steady_clock::now();
  RunReport report;
  report.seed = cfg.seed;

  auto finish = [&](RunReport& r) -> RunReport& {
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          t_start)
                    .count();
    return r;
  };
  auto fail = [&](FailureReason reason, std::uint32_t stage, std::uint32_t round) {
    report.success = false;
    report.reason = reason;
    report.fail_stage = stage;
    report.fail_round = round;
  };

  const double delta = double(g.max_degree());
  std::uint32_t num_colors = cfg.num_colors;
  if (num_colors == 0) {
    if (!(cfg.k > 0)) {
      fail(FailureReason::invalid_config, 0, 0);
      return finish(report);
    }
    num_colors = std::uint32_t(std::floor(delta / cfg.k));
  }
  if (num_colors == 0) {
    fail(FailureReason::invalid_config, 0, 0);
    return finish(report);
  }
  report.num_colors = num_colors;
  report.q = cfg.q;
  report.k_effective =
      delta > 0 ? (cfg.num_colors != 0 ? delta / double(num_colors) : cfg.k) : 0.0;

  if (cfg.check_triangle_free) {
    if (auto tri = find_triangle(g)) {
      fail(FailureReason::not_triangle_free, 0, 0);
      report.triangle = *tri;
      return finish(report);
    }
  }

  ColoringState st(g, num_colors);
  TrialRng rng(cfg.seed);

  if (delta > 0) {
    ScheduleParams sp;
    sp.delta = delta;
    sp.k = cfg.num_colors != 0 ? delta / double(num_colors) : cfg.k;
    sp.q = cfg.q;
    sp.psi = cfg.psi > 0 ? cfg.psi
                         : 3.0 * std::log(double(std::max<Vertex>(2, g.vertex_count())));
    sp.alpha1 = cfg.alpha1;
    sp.alpha2 = cfg.alpha2;
    sp.round_cap = cfg.schedule_round_cap;

    std::optional<Schedule> built;
    try {
      built.emplace(Schedule::build(sp));
    } catch (const Error& e) {
      fail(e.code() == ErrorCode::round_cap_exceeded ? FailureReason::schedule_cap_exceeded
                                                     : FailureReason::invalid_config,
           0, 0);
      return finish(report);
    }
    const Schedule& schedule = *built;
    report.schedule_rounds = schedule.total_rounds();
    report.stage1_rounds = schedule.stage1_rounds();
    report.stage2_rounds = schedule.stage2_rounds();

    for (std::uint32_t t = 0; t < schedule.total_rounds(); ++t) {
      if (cfg.max_rounds != 0 && t >= cfg.max_rounds) break;
      if (st.uncolored_count() == 0) break;
      // all uncolored palettes empty: the remaining rounds are no-ops
      // (kept alive under strict mode so a later clamped row still trips)
      if (!cfg.strict_regime && st.palette_mass() == 0) break;
      const ScheduleRow& row = schedule.row(t);
      if (row.clamped && cfg.strict_regime) {
        fail(FailureReason::clamped_probability, std::uint32_t(row.stage), t);
        report.rounds_used = t;
        report.colors_used = count_colors_used(extract_coloring(st, g.vertex_count()));
        return finish(report);
      }
      if (cfg.collect_traces) report.traces.push_back(snapshot(st, schedule, t));
      run_round(g, st, schedule, t, rng, /*strict=*/false, observer);
      report.rounds_used = t + 1;
      if (cfg.debug_recount) st.check_counters(g);
    }
  }

  GreedyOutcome greedy = greedy_complete(g, st);
  Coloring coloring = extract_coloring(st, g.vertex_count());
  report.colors_used = count_colors_used(coloring);
  if (!greedy.completed) {
    fail(FailureReason::greedy_stuck, 3, report.rounds_used);
    report.fail_vertex = greedy.stuck_vertex;
    return finish(report);
  }

  ProperCheck check = verify_proper(g, coloring);
  if (!check.proper()) {
    fail(FailureReason::improper_coloring, 3, report.rounds_used);
    return finish(report);
  }
  report.success = true;
  report.coloring = std::move(coloring);
  return finish(report);
}

}  // namespace trifree
