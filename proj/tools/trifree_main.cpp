// Command-line front end. Talks to the library exclusively through the
// C API in trifree.h.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "trifree.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFileError = 2;
constexpr int kExitRunFailed = 3;

struct GraphDeleter {
  void operator()(tf_graph* g) const { tf_graph_free(g); }
};
struct ReportDeleter {
  void operator()(tf_report* r) const { tf_report_free(r); }
};
struct ScheduleDeleter {
  void operator()(tf_schedule* s) const { tf_schedule_free(s); }
};
using GraphPtr = std::unique_ptr<tf_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<tf_report, ReportDeleter>;
using SchedulePtr = std::unique_ptr<tf_schedule, ScheduleDeleter>;

int fail_status(const char* what, tf_status status) {
  std::fprintf(stderr, "error: %s: %s (%s)\n", what, tf_last_error(), tf_status_name(status));
  switch (status) {
    case TF_ERROR_PARSE:
    case TF_ERROR_IO:
      return kExitFileError;
    default:
      return kExitUsage;
  }
}

GraphPtr load_graph(const std::string& path, int& exit_code) {
  tf_graph* raw = nullptr;
  tf_status status = tf_graph_read_dimacs(path.c_str(), &raw);
  if (status != TF_OK) {
    exit_code = fail_status(("reading " + path).c_str(), status);
    return nullptr;
  }
  exit_code = 0;
  return GraphPtr(raw);
}

bool parse_seed_range(const std::string& text, std::uint64_t& begin, std::uint64_t& end) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    begin = std::stoull(text.substr(0, pos));
    end = std::stoull(text.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return begin <= end;
}

struct RunFlags {
  std::string graph_path;
  double k = 2.0;
  double q = 7.0;
  std::uint32_t colors = 0;
  std::uint64_t seed = 0;
  std::uint32_t max_rounds = 0;
  std::string trace_path;
  std::string schedule_csv_path;
  bool strict_regime = false;
  bool no_triangle_check = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool with_seed) {
  cmd->add_option("--graph", f.graph_path, "input graph file")->required();
  cmd->add_option("--k", f.k, "palette divisor; colors = floor(max_degree/k)");
  cmd->add_option("--q", f.q, "control constant q (>= 2)");
  cmd->add_option("--colors", f.colors, "number of colors (overrides --k)");
  if (with_seed) cmd->add_option("--seed", f.seed, "trial seed");
  cmd->add_option("--max-rounds", f.max_rounds, "stop after this many rounds (0 = all)");
  cmd->add_option("--schedule-csv", f.schedule_csv_path, "write the schedule as CSV");
  cmd->add_flag("--strict-regime", f.strict_regime,
                "fail when an assignment probability clamps to 1");
  cmd->add_flag("--no-triangle-check", f.no_triangle_check,
                "skip the triangle-freeness precondition check");
}

tf_run_options to_options(const RunFlags& f, bool collect_traces) {
  tf_run_options opts;
  tf_run_options_init(&opts);
  opts.k = f.k;
  opts.q = f.q;
  opts.num_colors = f.colors;
  opts.seed = f.seed;
  opts.max_rounds = f.max_rounds;
  opts.collect_traces = collect_traces ? 1 : 0;
  opts.strict_regime = f.strict_regime ? 1 : 0;
  opts.skip_triangle_check = f.no_triangle_check ? 1 : 0;
  return opts;
}

int write_schedule_csv(const tf_graph* graph, const tf_run_options& opts,
                       const std::string& path) {
  tf_schedule_params params;
  tf_status status = tf_run_schedule_params(graph, &opts, &params);
  if (status != TF_OK) return fail_status("deriving schedule", status);
  tf_schedule* sched = nullptr;
  status = tf_schedule_build(&params, &sched);
  if (status != TF_OK) return fail_status("building schedule", status);
  SchedulePtr holder(sched);
  status = tf_schedule_write_csv(sched, path.c_str());
  if (status != TF_OK) return fail_status(("writing " + path).c_str(), status);
  return 0;
}

int cmd_generate(const std::string& kind, std::uint32_t m, std::uint32_t per_side,
                 double edge_prob, std::uint32_t n, std::uint32_t target_degree,
                 std::uint64_t seed, const std::string& out_path) {
  tf_graph* raw = nullptr;
  tf_status status = TF_ERROR_INVALID_ARGUMENT;
  if (kind == "complete-bipartite") {
    status = tf_graph_complete_bipartite(m, &raw);
  } else if (kind == "random-bipartite") {
    status = tf_graph_random_bipartite(per_side, edge_prob, seed, &raw);
  } else if (kind == "random-triangle-free") {
    status = tf_graph_random_triangle_free(n, target_degree, seed, &raw);
  } else {
    std::fprintf(stderr, "error: unknown generator kind '%s'\n", kind.c_str());
    return kExitUsage;
  }
  if (status != TF_OK) return fail_status("generating graph", status);
  GraphPtr graph(raw);

  status = tf_graph_write_dimacs(graph.get(), out_path.c_str());
  if (status != TF_OK) return fail_status(("writing " + out_path).c_str(), status);

  std::printf("n=%u m=%llu max_degree=%u triangle_free=%s\n", tf_graph_vertex_count(graph.get()),
              static_cast<unsigned long long>(tf_graph_edge_count(graph.get())),
              tf_graph_max_degree(graph.get()),
              tf_graph_is_triangle_free(graph.get()) ? "yes" : "no");
  return 0;
}

int cmd_run(const RunFlags& flags) {
  int exit_code = 0;
  GraphPtr graph = load_graph(flags.graph_path, exit_code);
  if (!graph) return exit_code;

  const bool want_traces = !flags.trace_path.empty();
  tf_run_options opts = to_options(flags, want_traces);

  if (!flags.schedule_csv_path.empty()) {
    if (int rc = write_schedule_csv(graph.get(), opts, flags.schedule_csv_path)) return rc;
  }

  tf_report* raw = nullptr;
  tf_status status = tf_run(graph.get(), &opts, &raw);
  if (status != TF_OK) return fail_status("running", status);
  ReportPtr report(raw);

  char* text = nullptr;
  status = tf_report_render_text(report.get(), graph.get(), &text);
  if (status != TF_OK) return fail_status("rendering report", status);
  std::fputs(text, stdout);
  tf_string_free(text);

  if (want_traces) {
    status = tf_report_write_trace_jsonl(report.get(), flags.trace_path.c_str());
    if (status != TF_OK) return fail_status(("writing " + flags.trace_path).c_str(), status);
  }
  return tf_report_succeeded(report.get()) ? 0 : kExitRunFailed;
}

int cmd_sweep(const RunFlags& flags, const std::string& seeds_text, std::uint32_t trials,
              std::uint32_t parallelism, const std::string& summary_path) {
  int exit_code = 0;
  GraphPtr graph = load_graph(flags.graph_path, exit_code);
  if (!graph) return exit_code;

  tf_sweep_options opts;
  opts.run = to_options(flags, /*collect_traces=*/false);
  opts.parallelism = parallelism;
  if (!seeds_text.empty()) {
    if (!parse_seed_range(seeds_text, opts.seed_begin, opts.seed_end)) {
      std::fprintf(stderr, "error: --seeds expects A..B with A <= B\n");
      return kExitUsage;
    }
  } else {
    opts.seed_begin = flags.seed;
    opts.seed_end = flags.seed + (trials ? trials - 1 : 0);
  }

  tf_sweep_summary summary;
  char* text = nullptr;
  tf_status status = tf_sweep(graph.get(), &opts, &summary,
                              summary_path.empty() ? nullptr : summary_path.c_str(), &text);
  if (status != TF_OK) return fail_status("sweeping", status);
  std::fputs(text, stdout);
  tf_string_free(text);
  return 0;
}

int cmd_baseline(const std::string& graph_path) {
  int exit_code = 0;
  GraphPtr graph = load_graph(graph_path, exit_code);
  if (!graph) return exit_code;
  std::uint32_t colors = 0;
  tf_status status = tf_greedy_baseline(graph.get(), &colors);
  if (status != TF_OK) return fail_status("running baseline", status);
  std::printf("greedy_baseline_colors: %u\n", colors);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized coloring of triangle-free graphs"};
  app.require_subcommand(1);

  // generate
  std::string gen_kind, gen_out;
  std::uint32_t gen_m = 1, gen_per_side = 1, gen_n = 1, gen_target = 1;
  double gen_edge_prob = 0.5;
  std::uint64_t gen_seed = 0;
  CLI::App* generate = app.add_subcommand("generate", "write a benchmark instance");
  generate->add_option("--kind", gen_kind,
                       "complete-bipartite | random-bipartite | random-triangle-free")
      ->required();
  generate->add_option("--out", gen_out, "output graph file")->required();
  generate->add_option("--m", gen_m, "side size (complete-bipartite)");
  generate->add_option("--per-side", gen_per_side, "side size (random-bipartite)");
  generate->add_option("--edge-prob", gen_edge_prob, "edge probability (random-bipartite)");
  generate->add_option("--n", gen_n, "vertex count (random-triangle-free)");
  generate->add_option("--target-degree", gen_target, "degree cap (random-triangle-free)");
  generate->add_option("--seed", gen_seed, "generator seed");

  // run
  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run one trial");
  add_run_flags(run, run_flags, /*with_seed=*/true);
  run->add_option("--trace", run_flags.trace_path, "write per-round traces (JSON Lines)");

  // sweep
  RunFlags sweep_flags;
  std::string sweep_seeds, sweep_summary;
  std::uint32_t sweep_trials = 1, sweep_parallelism = 1;
  CLI::App* sweep = app.add_subcommand("sweep", "run seeded independent trials");
  add_run_flags(sweep, sweep_flags, /*with_seed=*/true);
  sweep->add_option("--seeds", sweep_seeds, "seed range A..B (inclusive)");
  sweep->add_option("--trials", sweep_trials, "trial count starting at --seed");
  sweep->add_option("--parallelism", sweep_parallelism, "worker threads");
  sweep->add_option("--summary", sweep_summary, "write per-trial CSV");

  // baseline
  std::string baseline_graph;
  CLI::App* baseline = app.add_subcommand("baseline", "greedy vertex-order coloring");
  baseline->add_option("--graph", baseline_graph, "input graph file")->required();

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed())
    return cmd_generate(gen_kind, gen_m, gen_per_side, gen_edge_prob, gen_n, gen_target,
                        gen_seed, gen_out);
  if (run->parsed()) return cmd_run(run_flags);
  if (sweep->parsed())
    return cmd_sweep(sweep_flags, sweep_seeds, sweep_trials, sweep_parallelism, sweep_summary);
  if (baseline->parsed()) return cmd_baseline(baseline_graph);
  return kExitUsage;
}
