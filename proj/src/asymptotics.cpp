#include "xxent/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "xxent/special_functions.hpp"

namespace xxent {

namespace {

constexpr double kPi = std::numbers::pi;

void check_projected_args(int L, int n) {
  if (n < 2) throw InvalidArgument("ring size n must be >= 2");
  if (L < 0 || L > n) throw InvalidArgument("separation must lie in [0, n]");
}

double max_exponent(double x, int n) {
  double m = -std::numeric_limits<double>::infinity();
  for (Parity s : {Parity::plus, Parity::minus})
    for (auto k : momentum_set(n, s)) m = std::max(m, x * std::cos(k.angle(n)));
  return m;
}

}  // namespace

double projected_bessel(int L, double x, int n, Parity sigma) {
  check_projected_args(L, n);
  double sum = 0.0;
  for (auto k : momentum_set(n, sigma)) {
    const double w = k.angle(n);
    sum += std::exp(x * std::cos(w)) * std::cos(L * w);
  }
  return sum / n;
}

ProjectedBesselPair projected_bessel_pair(int L, double x, int n) {
  return {projected_bessel(L, x, n, Parity::plus), projected_bessel(L, x, n, Parity::minus)};
}

ScaledProjectedBessel scaled_projected_bessel(int L, double x, int n) {
  check_projected_args(L, n);
  ScaledProjectedBessel out{max_exponent(x, n), 0.0, 0.0, 0.0, 0.0};
  for (auto k : momentum_set(n, Parity::plus)) {
    const double w = k.angle(n);
    const double e = std::exp(x * std::cos(w) - out.shift);
    const double s = std::sin(0.5 * L * w);
    const double c = std::cos(0.5 * L * w);
    out.l_plus += e * std::cos(L * w);
    out.zero_minus_l_plus += 2.0 * e * s * s;
    out.zero_plus_l_plus += 2.0 * e * c * c;
  }
  for (auto k : momentum_set(n, Parity::minus)) {
    const double w = k.angle(n);
    out.l_minus += std::exp(x * std::cos(w) - out.shift) * std::cos(L * w);
  }
  out.l_plus /= n;
  out.l_minus /= n;
  out.zero_minus_l_plus /= n;
  out.zero_plus_l_plus /= n;
  return out;
}

double plateau_margin(int n, int L, double x) {
  const auto s = scaled_projected_bessel(L, x, n);
  return std::abs(s.l_minus) - std::sqrt(s.zero_minus_l_plus * s.zero_plus_l_plus);
}

double high_field_concurrence(const ChainSpec& spec, double beta, int L, Warnings* warnings) {
  if (!(beta > 0.0 && std::isfinite(beta))) throw InvalidArgument("beta must be finite and positive");
  if (L < 1 || L >= spec.n()) throw InvalidArgument("separation must lie in [1, n-1]");
  const double ab = std::abs(spec.b());
  if (std::exp(-beta * (ab - spec.abs_v())) >= 0.1) raise_if(warnings, "asymptotic_outside_regime");
  const double x = beta * spec.v();
  const double margin = plateau_margin(spec.n(), L, x);
  if (margin <= 0.0) return 0.0;
  const double shift = max_exponent(x, spec.n());
  return 2.0 * std::exp(shift - beta * ab) * margin;
}

ThetaApproximation theta_projected_bessel(int n, double x) {
  if (n < 2) throw InvalidArgument("ring size n must be >= 2");
  if (!(x > 0.0)) throw InvalidArgument("theta approximation needs x = beta v > 0");
  const double u = std::exp(-2.0 * x * kPi * kPi / (static_cast<double>(n) * n));
  const double pre = std::exp(x) / n;
  return {pre * theta2(u), pre * theta4(u)};
}

double concurrence_envelope(int L, double t, double b, double v) {
  if (L < 1) throw InvalidArgument("separation L must be >= 1");
  if (!(t >= 0.0)) throw InvalidArgument("scaled temperature must be >= 0");
  const double av = std::abs(v);
  if (!(b > av)) throw InvalidArgument("envelope needs b > |v|");
  if (t == 0.0) return 0.0;
  const double f = std::sqrt(2.0 * t / kPi) * (std::exp(-0.5 * t) - std::sqrt(-std::expm1(-t)));
  if (f <= 0.0) return 0.0;
  return std::exp(-(b / av - 1.0) * L * L / t) * f / L;
}

double distant_pair_T(int n, double v, bool odd_af) {
  if (n < 4) throw InvalidArgument("distant_pair_T needs n >= 4");
  const double nn = static_cast<double>(n) * n;
  if (!odd_af) return 2.0 * kPi * std::abs(v) / nn;
  return std::abs(v) * kPi * kPi /
         (2.0 * nn * std::log(2.0 * std::numbers::sqrt2 * n / kPi));
}

}  // namespace xxent
