#include "trifree/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "trifree/error.hpp"

namespace trifree {

namespace {

void validate(const ScheduleParams& p) {
  if (!(p.delta > 0)) throw Error(ErrorCode::invalid_argument, "delta must be positive");
  if (!(p.k > 0)) throw Error(ErrorCode::invalid_argument, "k must be positive");
  if (!(p.q >= 2)) throw Error(ErrorCode::invalid_argument, "q must be at least 2");
  if (!(p.psi > 0)) throw Error(ErrorCode::invalid_argument, "psi must be positive");
  if (!(p.alpha1 > 0)) throw Error(ErrorCode::invalid_argument, "alpha1 must be positive");
  if (!(p.delta / p.k >= 1)) throw Error(ErrorCode::invalid_argument, "delta/k must be at least 1");
}

}  // namespace

Schedule Schedule::build(const ScheduleParams& params) {
  validate(params);
  const double q = params.q;
  const double shrink = (q - 1) / (2 * q * q * q);
  const double inv_q2 = 1.0 / (q * q);
  const double greedy_ready = (q - 1) / q;  // terminate once eta < greedy_ready * s

  Schedule sched;
  sched.params_ = params;

  double eta = params.delta;
  double d = params.delta;
  double s = params.delta / params.k;

  std::uint32_t t = 0;
  bool seen_stage2 = false;
  while (true) {
    const bool stage1 = !seen_stage2 && d / s >= inv_q2;
    if (!stage1) seen_stage2 = true;

    ScheduleRow row;
    row.t = t;
    row.stage = stage1 ? 1 : 2;
    row.eta = eta;
    row.d = d;
    row.s = s;

    const double target = stage1 ? d : s;
    const double raw_prob = 1.0 / (q * q * target);
    row.clamped = !(raw_prob <= 1.0);
    row.assign_prob = row.clamped ? 1.0 : raw_prob;
    row.desired_survival = stage1 ? std::exp(-1.0 / q) : std::exp(-(1.0 / q) * (d / s));

    if (!stage1 && eta < greedy_ready * s) {
      // terminal row: first round where the greedy stage takes over
      sched.rows_.push_back(row);
      sched.tau_ = t;
      break;
    }
    sched.rows_.push_back(row);

    if (t >= params.round_cap)
      throw Error(ErrorCode::round_cap_exceeded,
                  "schedule did not terminate within the round cap");

    if (stage1) {
      const double factor = 1.0 - shrink * std::exp(-1.0 / q) * (s / d);
      eta *= factor;
      d = d * factor * std::exp(-1.0 / q);
      s *= std::exp(-1.0 / q);
    } else {
      const double decay = std::exp(-(1.0 / q) * (d / s));
      const double factor = 1.0 - shrink * decay;
      eta *= factor;
      d = d * factor * decay;
      s *= decay;
    }
    ++t;
  }

  sched.t1_ = 0;
  for (const auto& row : sched.rows_)
    if (row.stage == 1) ++sched.t1_;

  auto env = error_envelope(params, sched.rows_);
  for (std::size_t i = 0; i < sched.rows_.size(); ++i) sched.rows_[i].envelope = env[i];
  return sched;
}

const ScheduleRow& Schedule::row(std::uint32_t t) const {
  if (t >= rows_.size()) throw Error(ErrorCode::out_of_range, "schedule row out of range");
  return rows_[t];
}

double Schedule::assignment_prob(std::uint32_t t) const {
  if (t >= tau_) throw Error(ErrorCode::out_of_range, "round at or past schedule end");
  return rows_[t].assign_prob;
}

double Schedule::desired_survival(std::uint32_t t) const {
  if (t >= tau_) throw Error(ErrorCode::out_of_range, "round at or past schedule end");
  return rows_[t].desired_survival;
}

void Schedule::write_csv(std::ostream& out) const {
  out << "t,stage,eta,d,s,assign_prob,desired_survival,envelope\n";
  char buf[256];
  for (const auto& r : rows_) {
    std::snprintf(buf, sizeof buf, "%u,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.stage,
                  r.eta, r.d, r.s, r.assign_prob, r.desired_survival, r.envelope);
    out << buf;
  }
}

std::vector<double> error_envelope(const ScheduleParams& params,
                                   std::span<const ScheduleRow> rows) {
  std::vector<double> env(rows.size(), 0.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& prev = rows[i - 1];
    env[i] = params.alpha1 *
             (env[i - 1] + std::sqrt(params.psi / prev.d) + std::sqrt(params.psi / prev.s));
  }
  return env;
}

double failure_floor(const ScheduleParams& params, std::uint64_t n, std::uint32_t t) {
  return 1.0 - params.alpha2 * double(t) * double(n) * double(n) * std::exp(-params.psi);
}

std::pair<double, double> decay_constants(double q) {
  if (!(q >= 2)) throw Error(ErrorCode::invalid_argument, "q must be at least 2");
  const double rho = 1.0 - (q - 2) / (2 * q * q * q);
  const double mu = 1.0 - 1.0 / (2 * q * q);
  return {rho, mu};
}

}  // namespace trifree
