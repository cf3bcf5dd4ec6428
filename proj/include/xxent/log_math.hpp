#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace xxent {

/// log(sum_i exp(x_i)); -inf for an empty or all -inf input.
inline double log_sum_exp(std::span<const double> xs) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : xs) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - hi);
  return hi + std::log(sum);
}

/// log(1 - exp(-u)) for u > 0, given log u as well so that u may underflow.
inline double log_one_minus_exp_neg(double u, double log_u) {
  if (u > 1e-3) return std::log(-std::expm1(-u));
  return log_u + std::log1p(-0.5 * u + u * u / 6.0);
}

/// expm1(u) / u, continuous at 0.
inline double expm1_ratio(double u) {
  if (u > 1e-3) return std::expm1(u) / u;
  return 1.0 + 0.5 * u + u * u / 6.0;
}

/// atanh(y) / y, continuous at 0.
inline double atanh_ratio(double y) {
  if (y > 1e-4) return std::atanh(y) / y;
  return 1.0 + y * y / 3.0;
}

}  // namespace xxent
