#include "xxent/bulk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>

#include "xxent/errors.hpp"
#include "xxent/special_functions.hpp"
#include "xxent/string_determinant.hpp"

namespace xxent {

namespace {

using Rule = boost::math::quadrature::gauss<double, 32>;
constexpr double kPi = std::numbers::pi;

// Fermi function times e^{shift}; shift > 0 only when z >= shift everywhere.
double fermi(double z, double shift) {
  if (z > 0.0) return std::exp(shift - z) / (1.0 + std::exp(-z));
  return std::exp(shift) / (1.0 + std::exp(z));
}

// Segment ends on [0, pi], graded geometrically toward the point where the
// occupation changes fastest.
std::vector<double> breakpoints(double beta, double b, double v) {
  std::vector<double> pts{0.0, kPi};
  const double temperature = 1.0 / beta;
  const double c = std::acos(std::clamp(b / v, -1.0, 1.0));
  const double s = std::sin(c);
  const double w_edge = std::sqrt(2.0 * temperature / std::abs(v));
  const double w_fermi = s > 0.0 ? temperature / (std::abs(v) * s) : w_edge;
  const double w = std::min(w_edge, w_fermi);
  if (w < kPi / 8.0) {
    if (c > 0.0 && c < kPi) pts.push_back(c);
    for (double d = w; d < kPi; d *= 2.0) {
      if (c - d > 0.0) pts.push_back(c - d);
      if (c + d < kPi) pts.push_back(c + d);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<double> integrate(const std::vector<double>& pts, int panels, int max_separation,
                              double beta, double b, double v, double shift) {
  std::vector<double> g(static_cast<std::size_t>(max_separation) + 1, 0.0);
  const auto& x = Rule::abscissa();
  const auto& wt = Rule::weights();

  auto accumulate = [&](double omega, double weight) {
    const double f = weight * fermi(beta * (b - v * std::cos(omega)), shift);
    if (f == 0.0) return;
    const double c1 = std::cos(omega);
    double prev = 1.0;
    double cur = c1;
    g[0] += f;
    for (std::size_t L = 1; L < g.size(); ++L) {
      g[L] += f * cur;
      const double next = 2.0 * c1 * cur - prev;
      prev = cur;
      cur = next;
    }
  };

  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    const double h = (pts[s + 1] - pts[s]) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = pts[s] + (p + 0.5) * h;
      const double half = 0.5 * h;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) {
          accumulate(mid, half * wt[i]);
        } else {
          accumulate(mid - half * x[i], half * wt[i]);
          accumulate(mid + half * x[i], half * wt[i]);
        }
      }
    }
  }
  for (auto& v_l : g) v_l /= kPi;
  return g;
}

void check_bulk_args(int max_separation, double b, double v) {
  if (max_separation < 0) throw InvalidArgument("separation must be >= 0");
  if (!(std::isfinite(v) && v != 0.0)) throw InvalidArgument("coupling v must be finite and nonzero");
  if (!std::isfinite(b)) throw InvalidArgument("field b must be finite");
}

}  // namespace

std::vector<double> bulk_contractions(int max_separation, double beta, double b, double v,
                                      const QuadratureConfig& config) {
  check_bulk_args(max_separation, b, v);
  if (!(beta > 0.0 && std::isfinite(beta)))
    throw InvalidArgument("bulk quadrature needs finite beta > 0; use the T = 0 branch");
  const auto pts = breakpoints(beta, b, v);
  // empty band at low T: integrate g e^{beta(b - |v|)} so the integrand stays normal
  const double shift = std::max(0.0, beta * (b - std::abs(v)));
  int panels = config.initial_panels;
  auto coarse = integrate(pts, panels, max_separation, beta, b, v, shift);
  while (panels < config.max_panels) {
    panels *= 2;
    auto fine = integrate(pts, panels, max_separation, beta, b, v, shift);
    const double scale = fine[0];
    double err = 0.0;
    for (std::size_t L = 0; L < fine.size(); ++L) err = std::max(err, std::abs(fine[L] - coarse[L]));
    if (err <= config.rel_tol * scale || scale == 0.0) {
      if (shift > 0.0)
        for (auto& x : fine) x *= std::exp(-shift);
      return fine;
    }
    coarse = std::move(fine);
  }
  throw NumericalError("bulk quadrature did not reach the requested tolerance");
}

double bulk_contraction(int L, double beta, double b, double v, const QuadratureConfig& config) {
  return bulk_contractions(L, beta, b, v, config).back();
}

std::vector<double> bulk_ground_contractions(int max_separation, double b, double v) {
  check_bulk_args(max_separation, b, v);
  const double av = std::abs(v);
  std::vector<double> g(static_cast<std::size_t>(max_separation) + 1, 0.0);
  if (b >= av) return g;
  if (b <= -av) {
    g[0] = 1.0;
    return g;
  }
  const double wf = std::acos(b / av);
  g[0] = wf / kPi;
  for (int L = 1; L <= max_separation; ++L) {
    const double sign = (v < 0.0 && L % 2 == 1) ? -1.0 : 1.0;
    g[static_cast<std::size_t>(L)] = sign * std::sin(L * wf) / (L * kPi);
  }
  return g;
}

double bulk_ground_contraction(int L, double b, double v) {
  return bulk_ground_contractions(L, b, v).back();
}

PairDensity bulk_pair_density(int L, double temperature, double b, double v,
                              const QuadratureConfig& config) {
  if (L < 1) throw InvalidArgument("separation L must be >= 1");
  if (!(temperature >= 0.0)) throw InvalidArgument("temperature must be >= 0");
  // negative fields via the spin flip b -> -b, p_plus <-> p_minus
  const double ab = std::abs(b);
  const auto g = temperature == 0.0 ? bulk_ground_contractions(L, ab, v)
                                    : bulk_contractions(L, 1.0 / temperature, ab, v, config);
  const ContractionTable<double> table(g);
  const double g0 = g.front();
  const double gl = g.back();
  PairDensity pd =
      assemble_pair_density(g0, g0 * g0 - gl * gl, 0.5 * string_determinant(table, L));
  if (b < 0.0) std::swap(pd.p_plus, pd.p_minus);
  return pd;
}

double bulk_concurrence(int L, double beta, double b, double v, const QuadratureConfig& config) {
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  const double temperature = std::isinf(beta) ? 0.0 : 1.0 / beta;
  return concurrence(bulk_pair_density(L, temperature, b, v, config));
}

double bulk_limit_temperature(int L, double v) {
  if (L < 1) throw InvalidArgument("separation L must be >= 1");
  if (!(std::isfinite(v) && v != 0.0)) throw InvalidArgument("coupling v must be finite and nonzero");
  auto f = [L](double x) { return std::numbers::sqrt2 * bessel_i_ratio(L, x) - 1.0; };
  double lo = L * L / 10.0;
  double hi = 10.0 * L * L;
  if (!(f(lo) < 0.0 && f(hi) > 0.0)) throw NumericalError("bulk limit temperature bracket failed");
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::abs(v) / (0.5 * (lo + hi));
}

}  // namespace xxent
