#include "xxent/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xxent/errors.hpp"

namespace xxent {

namespace {

constexpr double kSeriesCutoff = 15.0;
constexpr int kMaxOrder = 200;

void check_order(int L) {
  if (L < 0 || L > kMaxOrder)
    throw InvalidArgument("Bessel order must lie in [0, " + std::to_string(kMaxOrder) + "]");
}

// sum_k (x/2)^{2k+L} / (k! (k+L)!) for x >= 0
double series(int L, double x) {
  const double half = 0.5 * x;
  double term = std::exp(L * std::log(half) - std::lgamma(L + 1.0));
  if (L == 0) term = 1.0;
  if (term == 0.0) return 0.0;
  const double q = half * half;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * (k + L));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// e^{-x} I_0..I_Lmax for x > 0 by Miller's algorithm
std::vector<double> miller_scaled(int max_order, double x) {
  const int start =
      2 * (std::max(max_order, static_cast<int>(x)) / 2) + 40 + static_cast<int>(12.0 * std::sqrt(x));
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
  double next = 0.0;  // I_{k+1}
  double cur = 1e-300;  // I_k
  double norm = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = cur * (2.0 * k / x) + next;  // I_{k-1}
    next = cur;
    cur = prev;
    if (k - 1 <= max_order) out[static_cast<std::size_t>(k - 1)] = cur;
    norm += (k - 1 == 0 ? 1.0 : 2.0) * cur;
    if (cur > 1e250) {
      constexpr double s = 1e-250;
      cur *= s;
      next *= s;
      norm *= s;
      for (auto& o : out) o *= s;
    }
  }
  for (auto& o : out) o /= norm;
  return out;
}

}  // namespace

std::vector<double> bessel_i_scaled_sequence(int max_order, double x) {
  check_order(max_order);
  const double ax = std::abs(x);
  std::vector<double> out;
  if (ax < kSeriesCutoff) {
    const double scale = std::exp(-ax);
    for (int L = 0; L <= max_order; ++L) out.push_back(scale * series(L, ax));
  } else {
    out = miller_scaled(max_order, ax);
  }
  if (x < 0.0)
    for (int L = 1; L <= max_order; L += 2) out[static_cast<std::size_t>(L)] = -out[static_cast<std::size_t>(L)];
  return out;
}

double bessel_i_scaled(int L, double x) {
  check_order(L);
  return bessel_i_scaled_sequence(L, x).back();
}

double bessel_i(int L, double x) {
  check_order(L);
  const double ax = std::abs(x);
  if (ax > 700.0) throw InvalidArgument("bessel_i argument beyond |x| <= 700");
  if (ax < kSeriesCutoff) {
    const double v = series(L, ax);
    return (x < 0.0 && L % 2 == 1) ? -v : v;
  }
  return std::exp(ax) * bessel_i_scaled(L, x);
}

double bessel_i_ratio(int L, double x) {
  const auto seq = bessel_i_scaled_sequence(L, x);
  return seq.back() / seq.front();
}

double theta2(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw InvalidArgument("theta2 needs 0 <= u < 1");
  if (u == 0.0) return 0.0;
  const double lu = std::log(u);
  double sum = 0.0;
  for (int j = 0;; ++j) {
    const double k = j + 0.5;
    const double term = std::exp(k * k * lu);
    sum += term;
    if (term < 1e-16 * sum || term == 0.0) break;
  }
  return 2.0 * sum;
}

double theta4(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw InvalidArgument("theta4 needs 0 <= u < 1");
  if (u == 0.0) return 1.0;
  const double lu = std::log(u);
  double sum = 1.0;
  for (int k = 1;; ++k) {
    const double term = std::exp(static_cast<double>(k) * k * lu);
    sum += (k % 2 == 0 ? 2.0 : -2.0) * term;
    if (term < 1e-16 || term == 0.0) break;
  }
  return sum;
}

}  // namespace xxent
