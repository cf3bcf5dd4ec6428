#include "xxent/pair_density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xxent/errors.hpp"

namespace xxent {

namespace {

constexpr double kClampTol = 1e-12;

double clamp_probability(double x, const char* what) {
  if (!std::isfinite(x)) throw NumericalError(std::string("non-finite ") + what);
  if (x < -kClampTol || x > 1.0 + kClampTol)
    throw NumericalError(std::string(what) + " out of [0,1]: " + std::to_string(x));
  return std::clamp(x, 0.0, 1.0);
}

}  // namespace

double PairDensity::entanglement_margin() const noexcept {
  return std::abs(alpha) - std::sqrt(std::max(0.0, p_plus * p_minus));
}

PairDensity assemble_pair_density(double occupation, double p_plus, double alpha) {
  const double p_minus = 1.0 - 2.0 * occupation + p_plus;
  const double p = occupation - p_plus;
  PairDensity pd;
  pd.p_plus = clamp_probability(p_plus, "p_plus");
  pd.p_minus = clamp_probability(p_minus, "p_minus");
  pd.p = clamp_probability(p, "p");
  pd.alpha = alpha;
  check_pair_density(pd);
  return pd;
}

void check_pair_density(const PairDensity& pd) {
  if (!std::isfinite(pd.alpha)) throw NumericalError("non-finite alpha");
  if (std::abs(pd.trace() - 1.0) > 1e-10)
    throw NumericalError("pair density trace " + std::to_string(pd.trace()));
  if (pd.p_plus < -kClampTol || pd.p_minus < -kClampTol || pd.p < -kClampTol)
    throw NumericalError("negative diagonal in pair density");
  if (pd.p - std::abs(pd.alpha) < -kClampTol)
    throw NumericalError("pair density not positive: p - |alpha| = " +
                         std::to_string(pd.p - std::abs(pd.alpha)));
}

double concurrence(const PairDensity& pd) {
  return 2.0 * std::max(0.0, pd.entanglement_margin());
}

double entanglement_of_formation(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw InvalidArgument("concurrence must lie in [0,1]");
  const double root = std::sqrt(1.0 - c * c);
  const double q_hi = 0.5 * (1.0 + root);
  const double q_lo = 0.25 * c * c / q_hi;  // q_hi q_lo = c^2/4, no cancellation
  double e = 0.0;
  for (double q : {q_hi, q_lo})
    if (q > 0.0) e -= q * std::log2(q);
  return std::min(e, 1.0);
}

}  // namespace xxent
