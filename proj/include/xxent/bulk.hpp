#pragma once

#include <vector>

#include "xxent/pair_density.hpp"

// Thermodynamic limit n -> infinity at fixed separation L, where both
// parity sectors share one momentum integral.

namespace xxent {

/// Composite Gauss-Legendre rule with 32 nodes per panel. Panels are
/// placed on geometrically graded segments around the Fermi angle (or the
/// band edge) and doubled until successive estimates of every g_L agree to
/// rel_tol relative to g_0 = (1/pi) int |integrand|.
struct QuadratureConfig {
  int initial_panels = 4;
  int max_panels = 1 << 12;
  double rel_tol = 1e-11;
};

/// g_0..g_Lmax with g_L = (1/pi) int_0^pi cos(L w) / (1 + exp(beta (b - v cos w))) dw.
/// Throws NumericalError when rel_tol is not met at max_panels.
std::vector<double> bulk_contractions(int max_separation, double beta, double b, double v,
                                      const QuadratureConfig& config = {});

double bulk_contraction(int L, double beta, double b, double v,
                        const QuadratureConfig& config = {});

/// T = 0 closed form: with cos w_F = b/|v|, g_0 = w_F/pi and
/// g_L = (+-1)^L sin(L w_F)/(L pi) (sign - for v < 0); empty band for
/// b >= |v|, full band for b <= -|v|.
std::vector<double> bulk_ground_contractions(int max_separation, double b, double v);

double bulk_ground_contraction(int L, double b, double v);

/// Pair density at separation L >= 1; temperature 0 selects the closed form.
PairDensity bulk_pair_density(int L, double temperature, double b, double v,
                              const QuadratureConfig& config = {});

double bulk_concurrence(int L, double beta, double b, double v,
                        const QuadratureConfig& config = {});

/// b -> infinity limit temperature: |v|/x with sqrt(2) I_L(x) = I_0(x),
/// bracketed in [L^2/10, 10 L^2] and bisected to 1e-10 relative.
double bulk_limit_temperature(int L, double v);

}  // namespace xxent
