#pragma once

namespace trifree {

// Averaging bounds behind the cleanup phase. Both are consequences of
// rearranging  q*mu*alpha + mu'*(1 - alpha) <= mu  for a sample of mean mu
// from which a fraction alpha of elements, each of value >= q*mu, is
// removed (trim) or to which such elements are added (pad).

/// Upper bound mu*(1-q*alpha)/(1-alpha) on the mean after trimming.
/// Requires 0 <= alpha <= 1/q (beyond 1/q the bound would be negative).
double trimmed_mean_bound(double mu, double alpha, double q);

/// Exact mean mu*(1+q*alpha)/(1+alpha) after padding with alpha*n
/// elements of value q*mu.
double padded_mean(double mu, double alpha, double q);

}  // namespace trifree
