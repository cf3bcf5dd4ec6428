#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "xxent/chain_model.hpp"
#include "xxent/errors.hpp"

namespace xxent {

enum class LimitMethod { exact_finite_n, bulk, asymptotic_plateau };

std::string_view to_string(LimitMethod m) noexcept;

/// Temperatures (T_on, T_off) between which the pair is entangled.
struct EntanglementInterval {
  double t_on;
  double t_off;
};

struct LimitTemperatureResult {
  double upper = 0.0;  // T_L(b); 0 if never entangled on the probed range
  std::vector<EntanglementInterval> thresholds;  // filled only when reentrant
  LimitMethod method = LimitMethod::exact_finite_n;
  Warnings warnings;
};

/// Probe range and resolution in units of |v|.
struct SolverConfig {
  double t_min = 1e-6;
  double t_max = 64.0;
  int grid_points = 128;
  double tolerance = 1e-8;
};

/// Logarithmic temperature grid from t_min|v| to t_max|v|.
std::vector<double> log_temperature_grid(double abs_v, const SolverConfig& config = {});

/// Margin |alpha| - sqrt(p+ p-) as a function of temperature.
using MarginFunction = std::function<double(double)>;

/// Entangled intervals of margin(T) > 0 over a strictly increasing grid
/// (>= 100 points); boundaries are bisected to `tolerance` in temperature.
/// An interval open at the lowest grid point starts at 0 when
/// `entangled_at_zero` is set, else at the grid floor with
/// `interval_at_grid_floor`. Raises `interval_at_grid_resolution` when an
/// interval spans a single grid point.
std::vector<EntanglementInterval> scan_intervals(const MarginFunction& margin,
                                                 std::span<const double> temperatures,
                                                 bool entangled_at_zero, double tolerance,
                                                 Warnings* warnings = nullptr);

/// Exact finite-n limit temperature of the chain at its field.
LimitTemperatureResult limit_temperature(const ChainSpec& spec, int L,
                                         const SolverConfig& config = {});

/// Thermodynamic-limit limit temperature at field b.
LimitTemperatureResult bulk_limit_temperature_at(int L, double b, double v,
                                                 const SolverConfig& config = {});

/// b -> infinity limit temperature of an n-site ring, from the projected
/// Bessel condition. odd_af selects v < 0 with odd n and must agree with the
/// sign of v for odd n.
double plateau_limit_temperature(int n, double v, int L, bool odd_af);

/// Reentrance scan of the exact path over a user grid.
std::vector<EntanglementInterval> reentrance_scan(const ChainSpec& spec, int L,
                                                  std::span<const double> temperatures,
                                                  Warnings* warnings = nullptr);

}  // namespace xxent
