#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace trifree {

struct ScheduleParams {
  double delta = 0;   // maximum degree of the target graph
  double k = 2.0;     // palette size divisor: s_0 = delta / k
  double q = 7.0;     // control constant, >= 2
  double psi = 1.0;   // concentration exponent (typically 3 log n)
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  std::uint32_t round_cap = 1'000'000;
};

struct ScheduleRow {
  std::uint32_t t = 0;
  int stage = 1;  // 1 or 2
  double eta = 0;
  double d = 0;
  double s = 0;
  double assign_prob = 0;      // per-(vertex,color) coloring-attempt probability
  bool clamped = false;        // assign_prob hit the 1.0 cap (regime violation)
  double desired_survival = 0; // per-round palette survival target
  double envelope = 0;         // e_t
};

/// The idealized round-by-round plan the random process is designed to
/// track: sequences (eta_t, d_t, s_t), stage boundaries, per-round
/// coloring-attempt probabilities and palette-survival targets, plus the
/// multiplicative error envelope e_t.
///
/// Stage 1 starts from eta_0 = d_0 = delta, s_0 = delta/k and advances
///
///   eta_{t+1} = eta_t * (1 - (q-1)/(2q^3) * e^{-1/q} * s_t/d_t)
///   d_{t+1}   = d_t   * (1 - (q-1)/(2q^3) * e^{-1/q} * s_t/d_t) * e^{-1/q}
///   s_{t+1}   = s_t   * e^{-1/q}
///
/// while d_t/s_t >= 1/q^2. Stage 2 then advances, with x_t = (1/q)(d_t/s_t),
///
///   eta_{t+1} = eta_t * (1 - (q-1)/(2q^3) * e^{-x_t})
///   d_{t+1}   = d_t   * (1 - (q-1)/(2q^3) * e^{-x_t}) * e^{-x_t}
///   s_{t+1}   = s_t   * e^{-x_t}
///
/// while eta_t >= ((q-1)/q) * s_t. The first round tau violating that is
/// the terminal row; rounds 0..tau-1 are executable. Construction aborts
/// with a distinct error if tau would exceed params.round_cap.
///
/// Immutable after construction; safe for concurrent reads.
class Schedule {
 public:
  static Schedule build(const ScheduleParams& params);

  const ScheduleParams& params() const noexcept { return params_; }

  std::uint32_t stage1_rounds() const noexcept { return t1_; }
  std::uint32_t stage2_rounds() const noexcept { return tau_ - t1_; }
  std::uint32_t total_rounds() const noexcept { return tau_; }

  /// Rows 0..tau inclusive; row tau holds the terminal sequence values.
  std::span<const ScheduleRow> rows() const noexcept { return rows_; }
  const ScheduleRow& row(std::uint32_t t) const;

  /// 1/(q^2 d_t) in stage 1, 1/(q^2 s_t) in stage 2, clamped to <= 1.
  /// Rejects t >= tau.
  double assignment_prob(std::uint32_t t) const;

  /// e^{-1/q} in stage 1, e^{-(1/q)(d_t/s_t)} in stage 2. Rejects t >= tau.
  double desired_survival(std::uint32_t t) const;

  /// CSV with columns t,stage,eta,d,s,assign_prob,desired_survival,envelope.
  void write_csv(std::ostream& out) const;

 private:
  Schedule() = default;

  ScheduleParams params_;
  std::vector<ScheduleRow> rows_;
  std::uint32_t t1_ = 0;
  std::uint32_t tau_ = 0;
};

/// e_0 = 0, e_{t+1} = alpha1 * (e_t + sqrt(psi/d_t) + sqrt(psi/s_t)).
/// Returns one value per row in the input span.
std::vector<double> error_envelope(const ScheduleParams& params,
                                   std::span<const ScheduleRow> rows);

/// f_t = 1 - alpha2 * t * n^2 * e^{-psi}; with psi = 3 log n this is
/// 1 - alpha2 * t / n.
double failure_floor(const ScheduleParams& params, std::uint64_t n, std::uint32_t t);

/// (rho, mu) = (1 - (q-2)/(2q^3), 1 - 1/(2q^2)), the stage-2 decay rates.
std::pair<double, double> decay_constants(double q);

}  // namespace trifree
