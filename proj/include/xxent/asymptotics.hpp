#pragma once

#include "xxent/chain_model.hpp"
#include "xxent/errors.hpp"

// Large-field expansions to first order in exp(-beta b).

namespace xxent {

/// I_L^sigma(x) = (1/n) sum_{k in K_sigma} exp(x cos w_k) cos(L w_k), 0 <= L <= n.
double projected_bessel(int L, double x, int n, Parity sigma);

struct ProjectedBesselPair {
  double plus;
  double minus;
};

ProjectedBesselPair projected_bessel_pair(int L, double x, int n);

/// I_L^sigma scaled by exp(-shift) with shift = max x cos w_k over both
/// parity sets, plus the differences I_0^+ - I_L^+ and I_0^+ + I_L^+
/// evaluated without cancellation.
struct ScaledProjectedBessel {
  double shift;
  double l_plus;
  double l_minus;
  double zero_minus_l_plus;
  double zero_plus_l_plus;
};

ScaledProjectedBessel scaled_projected_bessel(int L, double x, int n);

/// exp(-shift) [ |I_L^-| - sqrt(I_0^{+2} - I_L^{+2}) ] at x = beta v. Its
/// sign decides entanglement as b -> infinity.
double plateau_margin(int n, int L, double x);

/// 2 exp(-beta |b|) [ |I_L^-(beta v)| - sqrt(I_0^{+2} - I_L^{+2}) ]_+.
/// Raises `asymptotic_outside_regime` when exp(-beta(|b| - |v|)) >= 0.1.
double high_field_concurrence(const ChainSpec& spec, double beta, int L,
                              Warnings* warnings = nullptr);

/// Large-n approximations I_0^+ ~ e^x theta_2(u)/n and
/// I_{n/2}^- ~ e^x theta_4(u)/n, u = exp(-2 x pi^2 / n^2), x = beta v > 0.
struct ThetaApproximation {
  double zero_plus;
  double half_minus;
};

ThetaApproximation theta_projected_bessel(int n, double x);

/// e^{-(b/|v| - 1) L^2 / t} f(t) / L with t = L^2 T / |v| and
/// f(t) = sqrt(2t/pi) [e^{-t/2} - sqrt(1 - e^{-t})]; 0 where f <= 0.
double concurrence_envelope(int L, double t, double b, double v);

/// Closed-form limit temperature of the most distant pair: 2 pi v / n^2,
/// or |v| pi^2 / (2 n^2 ln(2 sqrt(2) n / pi)) for odd antiferromagnetic rings.
double distant_pair_T(int n, double v, bool odd_af);

}  // namespace xxent
