#include "trifree/averaging.hpp"

#include "trifree/error.hpp"

namespace trifree {

double trimmed_mean_bound(double mu, double alpha, double q) {
  if (!(q > 1.0)) throw Error(ErrorCode::invalid_argument, "q must exceed 1");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw Error(ErrorCode::invalid_argument, "alpha must be in [0, 1)");
  if (alpha > 1.0 / q)
    throw Error(ErrorCode::out_of_range, "alpha above 1/q: trimmed bound would be negative");
  return mu * (1.0 - q * alpha) / (1.0 - alpha);
}

double padded_mean(double mu, double alpha, double q) {
  if (!(q > 1.0)) throw Error(ErrorCode::invalid_argument, "q must exceed 1");
  if (!(alpha >= 0.0)) throw Error(ErrorCode::invalid_argument, "alpha must be non-negative");
  return mu * (1.0 + q * alpha) / (1.0 + alpha);
}

}  // namespace trifree
