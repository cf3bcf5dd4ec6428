#pragma once

namespace xxent {

/// Independent elements of the two-qubit X-state of a pair at separation L,
/// in the basis (up-up, up-down, down-up, down-down):
///
///     | p_plus   0      0      0       |
///     | 0        p      alpha  0       |
///     | 0        alpha  p      0       |
///     | 0        0      0      p_minus |
///
/// with p_plus = <(s_i^z + 1/2)(s_j^z + 1/2)>, alpha = <s_i^+ s_j^->.
struct PairDensity {
  double p_plus = 0.25;
  double p = 0.25;
  double p_minus = 0.25;
  double alpha = 0.0;

  double trace() const noexcept { return p_plus + 2.0 * p + p_minus; }
  /// <s_i^z> = (p_plus - p_minus) / 2
  double magnetization() const noexcept { return 0.5 * (p_plus - p_minus); }
  /// |alpha| - sqrt(p_plus p_minus); positive iff the pair is entangled.
  double entanglement_margin() const noexcept;
};

/// Builds the density from the site occupation g_0 = <s^z> + 1/2, p_plus and
/// alpha, using p = g_0 - p_plus and p_minus = 1 - 2 g_0 + p_plus, then
/// clamps values within 1e-12 of the physical boundary. Larger violations
/// throw NumericalError.
PairDensity assemble_pair_density(double occupation, double p_plus, double alpha);

/// Throws NumericalError unless trace, diagonal and triplet/singlet
/// eigenvalues are physical to 1e-12.
void check_pair_density(const PairDensity& pd);

/// C = 2 max(0, |alpha| - sqrt(p_plus p_minus))
double concurrence(const PairDensity& pd);

/// Entanglement of formation (bits) as a function of concurrence.
double entanglement_of_formation(double c);

}  // namespace xxent
