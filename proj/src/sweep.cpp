#include "trifree/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>

#include "trifree/baseline.hpp"
#include "trifree/error.hpp"

namespace trifree {

SweepSummary sweep(const Graph& g, const SweepConfig& cfg) {
  if (cfg.seed_end < cfg.seed_begin)
    throw Error(ErrorCode::invalid_argument, "empty seed range");
  const std::uint64_t trials = cfg.seed_end - cfg.seed_begin + 1;

  std::vector<TrialRecord> records(trials);
  std::atomic<std::uint64_t> cursor{0};

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t i = cursor.fetch_add(1);
      if (i >= trials) return;
      RunConfig rc = cfg.run;
      rc.seed = cfg.seed_begin + i;
      RunReport rep = run(g, rc);
      records[i] = {rc.seed,          rep.success,     rep.reason,
                    rep.rounds_used,  rep.colors_used, rep.wall_ms};
    }
  };

  const std::uint32_t workers =
      std::max<std::uint32_t>(1, std::min<std::uint64_t>(cfg.parallelism ? cfg.parallelism : 1,
                                                         trials));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepSummary summary;
  summary.trials = trials;
  summary.greedy_baseline_colors = greedy_baseline_colors(g);
  double rounds_sum = 0, colors_sum = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const TrialRecord& r = records[i];
    if (r.success) ++summary.successes;
    if (i == 0 || r.rounds_used < summary.min_rounds) summary.min_rounds = r.rounds_used;
    if (i == 0 || r.rounds_used > summary.max_rounds) summary.max_rounds = r.rounds_used;
    rounds_sum += double(r.rounds_used);
    colors_sum += double(r.colors_used);
  }
  summary.mean_rounds = rounds_sum / double(trials);
  summary.mean_colors_used = colors_sum / double(trials);
  summary.records = std::move(records);
  return summary;
}

void write_sweep_csv(const SweepSummary& s, std::ostream& out) {
  out << "seed,outcome,rounds,colors_used,greedy_baseline,wall_ms\n";
  char buf[256];
  for (const auto& r : s.records) {
    std::snprintf(buf, sizeof buf, "%llu,%s,%u,%u,%u,%.3f\n",
                  static_cast<unsigned long long>(r.seed),
                  r.success ? "success" : failure_reason_name(r.reason), r.rounds_used,
                  r.colors_used, s.greedy_baseline_colors, r.wall_ms);
    out << buf;
  }
}

void render_sweep_summary(const SweepSummary& s, std::ostream& out) {
  char buf[256];
  out << "trials: " << s.trials << '\n';
  out << "successes: " << s.successes << '\n';
  std::snprintf(buf, sizeof buf, "rounds: min=%u mean=%.6g max=%u\n", s.min_rounds,
                s.mean_rounds, s.max_rounds);
  out << buf;
  std::snprintf(buf, sizeof buf, "mean_colors_used: %.6g\n", s.mean_colors_used);
  out << buf;
  out << "greedy_baseline_colors: " << s.greedy_baseline_colors << '\n';
}

}  // namespace trifree
