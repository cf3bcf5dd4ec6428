#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "xxent/chain_model.hpp"

namespace oracle {

/// Laplace expansion along the first row; fine for L <= 8.
inline double cofactor_det(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * cofactor_det(minor);
  }
  return det;
}

/// (A_L)_{ij} = 2 g_{|i-j+1|} - delta_{i,j-1} for a real, even contraction sequence.
inline std::vector<std::vector<double>> string_matrix(const std::vector<double>& g, int L) {
  std::vector<std::vector<double>> a(static_cast<std::size_t>(L), std::vector<double>(static_cast<std::size_t>(L)));
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j)
      a[i][j] = 2.0 * g[static_cast<std::size_t>(std::abs(i - j + 1))] - (j == i + 1 ? 1.0 : 0.0);
  return a;
}

/// log Z by enumerating every fermion configuration of both parity sectors:
/// even N lives on half-integer momenta, odd N on integer momenta.
inline double brute_force_log_z(int n, double v, double b, double beta) {
  std::vector<double> terms;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<double> lambda;
    for (int j = -(n / 2); j <= (n - 1) / 2; ++j) {
      const double k = j + (parity == 0 ? 0.5 : 0.0);
      lambda.push_back(b - v * std::cos(2.0 * std::numbers::pi * k / n));
    }
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<int>(std::popcount(mask) % 2) != parity) continue;
      double e = -0.5 * b * n;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1U) e += lambda[static_cast<std::size_t>(i)];
      terms.push_back(-beta * e);
    }
  }
  double hi = terms.front();
  for (double t : terms) hi = std::max(hi, t);
  long double sum = 0.0L;
  for (double t : terms) sum += std::exp(static_cast<long double>(t - hi));
  return hi + static_cast<double>(std::log(sum));
}

/// Power series sum (x/2)^{2k+L}/(k!(k+L)!) in long double.
inline long double bessel_series(int L, long double x) {
  long double term = 1.0L;
  for (int i = 1; i <= L; ++i) term *= (x / 2.0L) / i;
  long double sum = term;
  const long double q = x * x / 4.0L;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<long double>(k) * (k + L));
    sum += term;
    if (term < 1e-22L * sum) break;
  }
  return sum;
}

/// Seeded generator of random chain parameters.
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform(0.0, 1.0) * (hi - lo + 1)); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  double sign() { return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
