/*
 * trifree — randomized coloring of triangle-free graphs.
 *
 * C API over the C++ core. All objects are opaque handles created and
 * destroyed through these functions; every fallible call returns a
 * tf_status and reports its result through out-parameters. A detail
 * message for the most recent failure on the calling thread is
 * available from tf_last_error().
 */
#ifndef TRIFREE_H
#define TRIFREE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_ERROR_INVALID_ARGUMENT = 1,
  TF_ERROR_PARSE = 2,
  TF_ERROR_IO = 3,
  TF_ERROR_NOT_TRIANGLE_FREE = 4,
  TF_ERROR_ROUND_CAP_EXCEEDED = 5,
  TF_ERROR_OUT_OF_RANGE = 6,
  TF_ERROR_INCOMPLETE_COLORING = 7,
  TF_ERROR_INTERNAL = 8
} tf_status;

typedef struct tf_graph tf_graph;
typedef struct tf_schedule tf_schedule;
typedef struct tf_report tf_report;

const char* tf_status_name(tf_status status);
const char* tf_last_error(void);

/* ---- graphs ------------------------------------------------------- */

tf_status tf_graph_complete_bipartite(uint32_t side, tf_graph** out);
tf_status tf_graph_random_bipartite(uint32_t per_side, double edge_prob, uint64_t seed,
                                    tf_graph** out);
tf_status tf_graph_random_triangle_free(uint32_t n, uint32_t target_degree, uint64_t seed,
                                        tf_graph** out);
tf_status tf_graph_read_dimacs(const char* path, tf_graph** out);
tf_status tf_graph_write_dimacs(const tf_graph* g, const char* path);
void tf_graph_free(tf_graph* g);

uint32_t tf_graph_vertex_count(const tf_graph* g);
uint64_t tf_graph_edge_count(const tf_graph* g);
uint32_t tf_graph_max_degree(const tf_graph* g);
int tf_graph_is_triangle_free(const tf_graph* g);

/* colors: length-n array, -1 for unassigned. Fails with
 * TF_ERROR_INCOMPLETE_COLORING when a vertex is unassigned; otherwise
 * stores the number of improperly colored edges. */
tf_status tf_verify_coloring(const tf_graph* g, const int32_t* colors, size_t n,
                             uint64_t* violations_out);

/* greedy vertex-order baseline; at most max_degree + 1 colors */
tf_status tf_greedy_baseline(const tf_graph* g, uint32_t* colors_used_out);

/* ---- schedules ---------------------------------------------------- */

typedef struct tf_schedule_params {
  double delta;
  double k;
  double q;
  double psi;
  double alpha1;
  double alpha2;
  uint32_t round_cap; /* 0 = default 10^6 */
} tf_schedule_params;

typedef struct tf_schedule_row {
  uint32_t t;
  int32_t stage; /* 1 or 2 */
  double eta;
  double d;
  double s;
  double assign_prob;
  double desired_survival;
  double envelope;
  int32_t clamped;
} tf_schedule_row;

tf_status tf_schedule_build(const tf_schedule_params* params, tf_schedule** out);
void tf_schedule_free(tf_schedule* s);

uint32_t tf_schedule_total_rounds(const tf_schedule* s);  /* tau */
uint32_t tf_schedule_stage1_rounds(const tf_schedule* s); /* t1 */
/* valid t: 0..tau inclusive (row tau is the terminal row) */
tf_status tf_schedule_get_row(const tf_schedule* s, uint32_t t, tf_schedule_row* out);
tf_status tf_schedule_write_csv(const tf_schedule* s, const char* path);

/* ---- runs --------------------------------------------------------- */

typedef struct tf_run_options {
  double k;            /* palette divisor; colors = floor(delta/k) */
  double q;
  uint32_t num_colors; /* nonzero overrides k */
  uint64_t seed;
  double psi;          /* <= 0: default 3 log n */
  double alpha1;       /* <= 0: default 1 */
  double alpha2;       /* <= 0: default 1 */
  uint32_t schedule_round_cap; /* 0: default 10^6 */
  uint32_t max_rounds;         /* 0: run the whole schedule */
  int32_t collect_traces;
  int32_t strict_regime;
  int32_t skip_triangle_check;
} tf_run_options;

/* fills defaults: k=2, q=7, everything else derived */
void tf_run_options_init(tf_run_options* opts);

/* schedule parameters the run would use (delta from the graph, k from
 * the options); lets callers export the exact schedule of a run */
tf_status tf_run_schedule_params(const tf_graph* g, const tf_run_options* opts,
                                 tf_schedule_params* out);

tf_status tf_run(const tf_graph* g, const tf_run_options* opts, tf_report** out);
void tf_report_free(tf_report* r);

int tf_report_succeeded(const tf_report* r);
const char* tf_report_failure_reason(const tf_report* r); /* "" on success */
uint32_t tf_report_fail_stage(const tf_report* r);
uint32_t tf_report_fail_round(const tf_report* r);
uint32_t tf_report_fail_vertex(const tf_report* r);
uint32_t tf_report_rounds_used(const tf_report* r);
uint32_t tf_report_schedule_rounds(const tf_report* r);
uint32_t tf_report_colors_used(const tf_report* r);
uint32_t tf_report_num_colors(const tf_report* r);
double tf_report_wall_ms(const tf_report* r);

/* colors: caller-provided array of length n; entries are -1 where no
 * color was assigned (only possible on failed runs) */
tf_status tf_report_coloring(const tf_report* r, int32_t* colors, size_t n);

/* deterministic text report (wall-time free); returns a heap string the
 * caller releases with tf_string_free */
tf_status tf_report_render_text(const tf_report* r, const tf_graph* g, char** out);
tf_status tf_report_write_trace_jsonl(const tf_report* r, const char* path);

void tf_string_free(char* s);

/* ---- sweeps ------------------------------------------------------- */

typedef struct tf_sweep_options {
  tf_run_options run;
  uint64_t seed_begin;
  uint64_t seed_end; /* inclusive */
  uint32_t parallelism;
} tf_sweep_options;

typedef struct tf_sweep_summary {
  uint64_t trials;
  uint64_t successes;
  uint32_t min_rounds;
  uint32_t max_rounds;
  double mean_rounds;
  double mean_colors_used;
  uint32_t greedy_baseline_colors;
} tf_sweep_summary;

/* per_trial_csv_path may be NULL. summary_text_out (if non-NULL)
 * receives the deterministic aggregate text, released with
 * tf_string_free. The summary is independent of parallelism. */
tf_status tf_sweep(const tf_graph* g, const tf_sweep_options* opts, tf_sweep_summary* out,
                   const char* per_trial_csv_path, char** summary_text_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRIFREE_H */
