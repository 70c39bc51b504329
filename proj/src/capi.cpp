#include "trifree.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "trifree/baseline.hpp"
#include "trifree/dimacs.hpp"
#include "trifree/engine.hpp"
#include "trifree/error.hpp"
#include "trifree/export.hpp"
#include "trifree/generators.hpp"
#include "trifree/graph.hpp"
#include "trifree/schedule.hpp"
#include "trifree/sweep.hpp"

struct tf_graph {
  trifree::Graph g;
};
struct tf_schedule {
  trifree::Schedule s;
};
struct tf_report {
  trifree::RunReport r;
};

namespace {

thread_local std::string g_last_error;

tf_status map_code(trifree::ErrorCode code) {
  using EC = trifree::ErrorCode;
  switch (code) {
    case EC::invalid_argument: return TF_ERROR_INVALID_ARGUMENT;
    case EC::parse_error: return TF_ERROR_PARSE;
    case EC::io_error: return TF_ERROR_IO;
    case EC::not_triangle_free: return TF_ERROR_NOT_TRIANGLE_FREE;
    case EC::round_cap_exceeded: return TF_ERROR_ROUND_CAP_EXCEEDED;
    case EC::out_of_range: return TF_ERROR_OUT_OF_RANGE;
    case EC::incomplete_coloring: return TF_ERROR_INCOMPLETE_COLORING;
  }
  return TF_ERROR_INTERNAL;
}

template <typename Fn>
tf_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const trifree::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TF_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TF_ERROR_INTERNAL;
  }
}

tf_status require(bool ok, const char* message) {
  if (ok) return TF_OK;
  g_last_error = message;
  return TF_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

trifree::RunConfig to_run_config(const tf_run_options& o) {
  trifree::RunConfig cfg;
  cfg.num_colors = o.num_colors;
  cfg.k = o.k;
  cfg.q = o.q;
  cfg.psi = o.psi;
  cfg.alpha1 = o.alpha1 > 0 ? o.alpha1 : 1.0;
  cfg.alpha2 = o.alpha2 > 0 ? o.alpha2 : 1.0;
  cfg.seed = o.seed;
  cfg.schedule_round_cap = o.schedule_round_cap ? o.schedule_round_cap : 1'000'000;
  cfg.max_rounds = o.max_rounds;
  cfg.collect_traces = o.collect_traces != 0;
  cfg.strict_regime = o.strict_regime != 0;
  cfg.check_triangle_free = o.skip_triangle_check == 0;
  return cfg;
}

}  // namespace

extern "C" {

const char* tf_status_name(tf_status status) {
  switch (status) {
    case TF_OK: return "ok";
    case TF_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case TF_ERROR_PARSE: return "parse_error";
    case TF_ERROR_IO: return "io_error";
    case TF_ERROR_NOT_TRIANGLE_FREE: return "not_triangle_free";
    case TF_ERROR_ROUND_CAP_EXCEEDED: return "round_cap_exceeded";
    case TF_ERROR_OUT_OF_RANGE: return "out_of_range";
    case TF_ERROR_INCOMPLETE_COLORING: return "incomplete_coloring";
    case TF_ERROR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* tf_last_error(void) { return g_last_error.c_str(); }

tf_status tf_graph_complete_bipartite(uint32_t side, tf_graph** out) {
  if (auto s = require(out != nullptr, "null output")) return s;
  return guarded([&] {
    *out = new tf_graph{trifree::gen_complete_bipartite(side)};
    return TF_OK;
  });
}

tf_status tf_graph_random_bipartite(uint32_t per_side, double edge_prob, uint64_t seed,
                                    tf_graph** out) {
  if (auto s = require(out != nullptr, "null output")) return s;
  return guarded([&] {
    *out = new tf_graph{trifree::gen_random_bipartite(per_side, edge_prob, seed)};
    return TF_OK;
  });
}

tf_status tf_graph_random_triangle_free(uint32_t n, uint32_t target_degree, uint64_t seed,
                                        tf_graph** out) {
  if (auto s = require(out != nullptr, "null output")) return s;
  return guarded([&] {
    *out = new tf_graph{trifree::gen_random_triangle_free(n, target_degree, seed)};
    return TF_OK;
  });
}

tf_status tf_graph_read_dimacs(const char* path, tf_graph** out) {
  if (auto s = require(path && out, "null argument")) return s;
  return guarded([&] {
    *out = new tf_graph{trifree::read_dimacs_file(path)};
    return TF_OK;
  });
}

tf_status tf_graph_write_dimacs(const tf_graph* g, const char* path) {
  if (auto s = require(g && path, "null argument")) return s;
  return guarded([&] {
    trifree::write_dimacs_file(g->g, path);
    return TF_OK;
  });
}

void tf_graph_free(tf_graph* g) { delete g; }

uint32_t tf_graph_vertex_count(const tf_graph* g) { return g ? g->g.vertex_count() : 0; }
uint64_t tf_graph_edge_count(const tf_graph* g) { return g ? g->g.edge_count() : 0; }
uint32_t tf_graph_max_degree(const tf_graph* g) { return g ? g->g.max_degree() : 0; }
int tf_graph_is_triangle_free(const tf_graph* g) {
  return g && trifree::is_triangle_free(g->g) ? 1 : 0;
}

tf_status tf_verify_coloring(const tf_graph* g, const int32_t* colors, size_t n,
                             uint64_t* violations_out) {
  if (auto s = require(g && colors && violations_out, "null argument")) return s;
  if (auto s = require(n == g->g.vertex_count(), "coloring length mismatch")) return s;
  return guarded([&]() -> tf_status {
    trifree::Coloring c;
    c.assignment.assign(colors, colors + n);
    int32_t max_color = -1;
    for (size_t i = 0; i < n; ++i) max_color = std::max(max_color, colors[i]);
    c.num_colors = uint32_t(max_color + 1);
    trifree::ProperCheck check = trifree::verify_proper(g->g, c);
    if (!check.uncolored.empty()) {
      g_last_error = "coloring incomplete: " + std::to_string(check.uncolored.size()) +
                     " unassigned vertices";
      return TF_ERROR_INCOMPLETE_COLORING;
    }
    *violations_out = check.violating_edges.size();
    return TF_OK;
  });
}

tf_status tf_greedy_baseline(const tf_graph* g, uint32_t* colors_used_out) {
  if (auto s = require(g && colors_used_out, "null argument")) return s;
  return guarded([&] {
    *colors_used_out = trifree::greedy_baseline_colors(g->g);
    return TF_OK;
  });
}

tf_status tf_schedule_build(const tf_schedule_params* params, tf_schedule** out) {
  if (auto s = require(params && out, "null argument")) return s;
  return guarded([&] {
    trifree::ScheduleParams p;
    p.delta = params->delta;
    p.k = params->k;
    p.q = params->q;
    p.psi = params->psi;
    p.alpha1 = params->alpha1;
    p.alpha2 = params->alpha2;
    p.round_cap = params->round_cap ? params->round_cap : 1'000'000;
    *out = new tf_schedule{trifree::Schedule::build(p)};
    return TF_OK;
  });
}

void tf_schedule_free(tf_schedule* s) { delete s; }

uint32_t tf_schedule_total_rounds(const tf_schedule* s) { return s ? s->s.total_rounds() : 0; }
uint32_t tf_schedule_stage1_rounds(const tf_schedule* s) { return s ? s->s.stage1_rounds() : 0; }

tf_status tf_schedule_get_row(const tf_schedule* s, uint32_t t, tf_schedule_row* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    const trifree::ScheduleRow& row = s->s.row(t);
    out->t = row.t;
    out->stage = row.stage;
    out->eta = row.eta;
    out->d = row.d;
    out->s = row.s;
    out->assign_prob = row.assign_prob;
    out->desired_survival = row.desired_survival;
    out->envelope = row.envelope;
    out->clamped = row.clamped ? 1 : 0;
    return TF_OK;
  });
}

tf_status tf_schedule_write_csv(const tf_schedule* s, const char* path) {
  if (auto st = require(s && path, "null argument")) return st;
  return guarded([&]() -> tf_status {
    std::ofstream out(path);
    if (!out) {
      g_last_error = std::string("cannot open ") + path;
      return TF_ERROR_IO;
    }
    s->s.write_csv(out);
    return out ? TF_OK : TF_ERROR_IO;
  });
}

void tf_run_options_init(tf_run_options* opts) {
  if (!opts) return;
  std::memset(opts, 0, sizeof *opts);
  opts->k = 2.0;
  opts->q = 7.0;
}

tf_status tf_run_schedule_params(const tf_graph* g, const tf_run_options* opts,
                                 tf_schedule_params* out) {
  if (auto s = require(g && opts && out, "null argument")) return s;
  return guarded([&]() -> tf_status {
    const double delta = double(g->g.max_degree());
    if (!(delta > 0)) {
      g_last_error = "graph has no edges: no schedule";
      return TF_ERROR_INVALID_ARGUMENT;
    }
    double k = opts->k;
    if (opts->num_colors != 0) k = delta / double(opts->num_colors);
    out->delta = delta;
    out->k = k;
    out->q = opts->q;
    out->psi = opts->psi > 0
                   ? opts->psi
                   : 3.0 * std::log(double(std::max<uint32_t>(2, g->g.vertex_count())));
    out->alpha1 = opts->alpha1 > 0 ? opts->alpha1 : 1.0;
    out->alpha2 = opts->alpha2 > 0 ? opts->alpha2 : 1.0;
    out->round_cap = opts->schedule_round_cap ? opts->schedule_round_cap : 1'000'000;
    return TF_OK;
  });
}

tf_status tf_run(const tf_graph* g, const tf_run_options* opts, tf_report** out) {
  if (auto s = require(g && opts && out, "null argument")) return s;
  return guarded([&] {
    *out = new tf_report{trifree::run(g->g, to_run_config(*opts))};
    return TF_OK;
  });
}

void tf_report_free(tf_report* r) { delete r; }

int tf_report_succeeded(const tf_report* r) { return r && r->r.success ? 1 : 0; }
const char* tf_report_failure_reason(const tf_report* r) {
  return r ? trifree::failure_reason_name(r->r.reason) : "";
}
uint32_t tf_report_fail_stage(const tf_report* r) { return r ? r->r.fail_stage : 0; }
uint32_t tf_report_fail_round(const tf_report* r) { return r ? r->r.fail_round : 0; }
uint32_t tf_report_fail_vertex(const tf_report* r) { return r ? r->r.fail_vertex : 0; }
uint32_t tf_report_rounds_used(const tf_report* r) { return r ? r->r.rounds_used : 0; }
uint32_t tf_report_schedule_rounds(const tf_report* r) { return r ? r->r.schedule_rounds : 0; }
uint32_t tf_report_colors_used(const tf_report* r) { return r ? r->r.colors_used : 0; }
uint32_t tf_report_num_colors(const tf_report* r) { return r ? r->r.num_colors : 0; }
double tf_report_wall_ms(const tf_report* r) { return r ? r->r.wall_ms : 0; }

tf_status tf_report_coloring(const tf_report* r, int32_t* colors, size_t n) {
  if (auto s = require(r && colors, "null argument")) return s;
  return guarded([&]() -> tf_status {
    if (!r->r.coloring) {
      g_last_error = "run did not produce a complete coloring";
      return TF_ERROR_INCOMPLETE_COLORING;
    }
    if (n != r->r.coloring->assignment.size()) {
      g_last_error = "coloring length mismatch";
      return TF_ERROR_INVALID_ARGUMENT;
    }
    std::copy(r->r.coloring->assignment.begin(), r->r.coloring->assignment.end(), colors);
    return TF_OK;
  });
}

tf_status tf_report_render_text(const tf_report* r, const tf_graph* g, char** out) {
  if (auto s = require(r && g && out, "null argument")) return s;
  return guarded([&] {
    std::ostringstream os;
    trifree::render_report(r->r, g->g, os);
    *out = dup_string(os.str());
    return TF_OK;
  });
}

tf_status tf_report_write_trace_jsonl(const tf_report* r, const char* path) {
  if (auto s = require(r && path, "null argument")) return s;
  return guarded([&]() -> tf_status {
    std::ofstream out(path);
    if (!out) {
      g_last_error = std::string("cannot open ") + path;
      return TF_ERROR_IO;
    }
    trifree::write_trace_jsonl(r->r.traces, out);
    return out ? TF_OK : TF_ERROR_IO;
  });
}

void tf_string_free(char* s) { delete[] s; }

tf_status tf_sweep(const tf_graph* g, const tf_sweep_options* opts, tf_sweep_summary* out,
                   const char* per_trial_csv_path, char** summary_text_out) {
  if (auto s = require(g && opts && out, "null argument")) return s;
  return guarded([&]() -> tf_status {
    trifree::SweepConfig cfg;
    cfg.run = to_run_config(opts->run);
    cfg.seed_begin = opts->seed_begin;
    cfg.seed_end = opts->seed_end;
    cfg.parallelism = opts->parallelism;
    trifree::SweepSummary summary = trifree::sweep(g->g, cfg);

    if (per_trial_csv_path) {
      std::ofstream csv(per_trial_csv_path);
      if (!csv) {
        g_last_error = std::string("cannot open ") + per_trial_csv_path;
        return TF_ERROR_IO;
      }
      trifree::write_sweep_csv(summary, csv);
      if (!csv) return TF_ERROR_IO;
    }
    if (summary_text_out) {
      std::ostringstream os;
      trifree::render_sweep_summary(summary, os);
      *summary_text_out = dup_string(os.str());
    }
    out->trials = summary.trials;
    out->successes = summary.successes;
    out->min_rounds = summary.min_rounds;
    out->max_rounds = summary.max_rounds;
    out->mean_rounds = summary.mean_rounds;
    out->mean_colors_used = summary.mean_colors_used;
    out->greedy_baseline_colors = summary.greedy_baseline_colors;
    return TF_OK;
  });
}

}  // extern "C"
