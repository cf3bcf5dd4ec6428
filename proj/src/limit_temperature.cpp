#include "xxent/limit_temperature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "xxent/asymptotics.hpp"
#include "xxent/bulk.hpp"
#include "xxent/ground_state.hpp"
#include "xxent/special_functions.hpp"
#include "xxent/thermal_core.hpp"

namespace xxent {

namespace {

double bisect_boundary(const MarginFunction& margin, double entangled_t, double separable_t,
                       double tolerance) {
  while (std::abs(entangled_t - separable_t) > tolerance) {
    const double mid = 0.5 * (entangled_t + separable_t);
    (margin(mid) > 0.0 ? entangled_t : separable_t) = mid;
  }
  return 0.5 * (entangled_t + separable_t);
}

void check_grid(std::span<const double> temperatures) {
  if (temperatures.size() < 100) throw InvalidArgument("temperature grid needs >= 100 points");
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    if (!(temperatures[i] > 0.0 && std::isfinite(temperatures[i])))
      throw InvalidArgument("temperatures must be finite and positive");
    if (i > 0 && !(temperatures[i] > temperatures[i - 1]))
      throw InvalidArgument("temperature grid must be strictly increasing");
  }
}

LimitTemperatureResult summarize(std::vector<EntanglementInterval> intervals, LimitMethod method,
                                 Warnings warnings) {
  LimitTemperatureResult r;
  r.method = method;
  r.warnings = std::move(warnings);
  if (intervals.empty()) return r;
  r.upper = intervals.back().t_off;
  if (intervals.size() > 1 || intervals.front().t_on > 0.0) r.thresholds = std::move(intervals);
  return r;
}

void check_separation(int n, int L) {
  if (L < 1 || L >= n) throw InvalidArgument("separation must lie in [1, n-1]");
}

}  // namespace

std::string_view to_string(LimitMethod m) noexcept {
  switch (m) {
    case LimitMethod::exact_finite_n:
      return "exact-finite-n";
    case LimitMethod::bulk:
      return "bulk";
    case LimitMethod::asymptotic_plateau:
      return "asymptotic-plateau";
  }
  return "unknown";
}

std::vector<double> log_temperature_grid(double abs_v, const SolverConfig& config) {
  if (config.grid_points < 2 || !(config.t_min > 0.0 && config.t_max > config.t_min))
    throw InvalidArgument("invalid temperature grid configuration");
  std::vector<double> grid(static_cast<std::size_t>(config.grid_points));
  const double lo = std::log(config.t_min);
  const double step = (std::log(config.t_max) - lo) / (config.grid_points - 1);
  for (int i = 0; i < config.grid_points; ++i)
    grid[static_cast<std::size_t>(i)] = abs_v * std::exp(lo + step * i);
  return grid;
}

std::vector<EntanglementInterval> scan_intervals(const MarginFunction& margin,
                                                 std::span<const double> temperatures,
                                                 bool entangled_at_zero, double tolerance,
                                                 Warnings* warnings) {
  check_grid(temperatures);
  const std::size_t count = temperatures.size();
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = margin(temperatures[i]);
  std::vector<char> inside(count);
  for (std::size_t i = 0; i < count; ++i) inside[i] = values[i] > 0.0 ? 1 : 0;
  // a margin of exactly 0 below the first entangled point is thermal
  // weight underflowing, not separability, when the T -> 0+ limit is entangled
  std::size_t underflow = 0;
  while (entangled_at_zero && underflow < count && values[underflow] == 0.0) ++underflow;

  std::vector<EntanglementInterval> out;
  std::size_t i = 0;
  while (i < count) {
    if (!inside[i]) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    while (i < count && inside[i]) ++i;
    const std::size_t last = i - 1;

    EntanglementInterval iv{};
    if (first == 0 || (first == underflow && entangled_at_zero)) {
      if (entangled_at_zero) {
        iv.t_on = 0.0;
      } else {
        iv.t_on = temperatures[0];
        raise_if(warnings, "interval_at_grid_floor");
      }
    } else {
      iv.t_on = bisect_boundary(margin, temperatures[first], temperatures[first - 1], tolerance);
    }
    if (last + 1 == count) {
      iv.t_off = temperatures[last];
      raise_if(warnings, "interval_at_grid_ceiling");
    } else {
      iv.t_off = bisect_boundary(margin, temperatures[last], temperatures[last + 1], tolerance);
    }
    if (first == last) raise_if(warnings, "interval_at_grid_resolution");
    out.push_back(iv);
  }
  return out;
}

namespace {

// With an empty (or full) band the small diagonal element is bounded by
// exp(-2 beta (|b| - |v|)). Once it drops below kTinyDiagonal its products
// have left the normal double range, while the first-order field expansion
// is exact to far below double precision, so the sign comes from there.
constexpr double kTinyDiagonal = 1e-250;

bool diagonal_lost(const PairDensity& pd, double b, double v) {
  return std::abs(b) > std::abs(v) && std::min(pd.p_plus, pd.p_minus) < kTinyDiagonal;
}

double exact_margin(const ChainSpec& spec, double t, int L, Warnings* warnings) {
  const auto pd = pair_density(spec, t, L, warnings);
  if (!diagonal_lost(pd, spec.b(), spec.v())) return pd.entanglement_margin();
  raise_if(warnings, "high_field_margin");
  return plateau_margin(spec.n(), L, spec.v() / t);
}

}  // namespace

LimitTemperatureResult limit_temperature(const ChainSpec& spec, int L, const SolverConfig& config) {
  check_separation(spec.n(), L);
  Warnings warnings;
  const bool at_zero = entangled_as_temperature_vanishes(spec, L);
  const MarginFunction margin = [&](double t) { return exact_margin(spec, t, L, &warnings); };
  const auto grid = log_temperature_grid(spec.abs_v(), config);
  auto intervals =
      scan_intervals(margin, grid, at_zero, config.tolerance * spec.abs_v(), &warnings);
  return summarize(std::move(intervals), LimitMethod::exact_finite_n, std::move(warnings));
}

LimitTemperatureResult bulk_limit_temperature_at(int L, double b, double v,
                                                 const SolverConfig& config) {
  if (L < 1) throw InvalidArgument("separation L must be >= 1");
  Warnings warnings;
  const double av = std::abs(v);
  const bool at_zero =
      bulk_pair_density(L, 0.0, b, v).entanglement_margin() > 1e-14 || std::abs(b) >= av;
  const MarginFunction margin = [&](double t) {
    const auto pd = bulk_pair_density(L, t, b, v);
    if (!diagonal_lost(pd, b, v)) return pd.entanglement_margin();
    warnings.raise("high_field_margin");
    return std::numbers::sqrt2 * bessel_i_ratio(L, av / t) - 1.0;
  };
  const auto grid = log_temperature_grid(av, config);
  auto intervals = scan_intervals(margin, grid, at_zero, config.tolerance * av, &warnings);
  return summarize(std::move(intervals), LimitMethod::bulk, std::move(warnings));
}

double plateau_limit_temperature(int n, double v, int L, bool odd_af) {
  if (n < 2) throw InvalidArgument("ring size n must be >= 2");
  if (L < 1 || L > n / 2) throw InvalidArgument("separation must lie in [1, n/2]");
  if (!(std::isfinite(v) && v != 0.0)) throw InvalidArgument("coupling v must be finite and nonzero");
  if (odd_af && n % 2 == 0) throw InvalidArgument("odd_af requires odd n");
  if (n % 2 == 1 && (v < 0.0) != odd_af)
    throw InvalidArgument("odd_af must match the sign of v for odd n");

  const MarginFunction margin = [&](double t) { return plateau_margin(n, L, v / t); };
  SolverConfig config;
  const auto grid = log_temperature_grid(std::abs(v), config);
  auto intervals = scan_intervals(margin, grid, true, 1e-10 * std::abs(v));
  return intervals.empty() ? 0.0 : intervals.back().t_off;
}

std::vector<EntanglementInterval> reentrance_scan(const ChainSpec& spec, int L,
                                                  std::span<const double> temperatures,
                                                  Warnings* warnings) {
  check_separation(spec.n(), L);
  Warnings local;
  const bool at_zero = entangled_as_temperature_vanishes(spec, L);
  const MarginFunction margin = [&](double t) { return exact_margin(spec, t, L, &local); };
  auto out = scan_intervals(margin, temperatures, at_zero,
                            std::min(1e-8 * spec.abs_v(), 1e-6 * temperatures.front()), &local);
  if (warnings != nullptr) warnings->merge(local);
  return out;
}

}  // namespace xxent
