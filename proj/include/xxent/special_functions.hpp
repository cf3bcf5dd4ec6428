#pragma once

#include <vector>

namespace xxent {

/// Modified Bessel function of the first kind I_L(x) for integer L >= 0.
/// Power series for |x| < 15, Miller backward recurrence normalized by
/// e^x = I_0 + 2 sum_k I_k above. Requires |x| <= 700 and L <= 200;
/// otherwise throws InvalidArgument.
double bessel_i(int L, double x);

/// e^{-|x|} I_L(x); no upper bound on |x|.
double bessel_i_scaled(int L, double x);

/// e^{-|x|} I_0(x), ..., e^{-|x|} I_Lmax(x) in one recurrence pass.
std::vector<double> bessel_i_scaled_sequence(int max_order, double x);

/// I_L(x) / I_0(x).
double bessel_i_ratio(int L, double x);

/// theta_2(u) = 2 sum_{k = 1/2, 3/2, ...} u^{k^2}, 0 <= u < 1.
double theta2(double u);

/// theta_4(u) = 1 + 2 sum_{k >= 1} (-1)^k u^{k^2}, 0 <= u < 1.
double theta4(double u);

}  // namespace xxent
