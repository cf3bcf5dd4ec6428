#include "xxent/ground_state.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "xxent/errors.hpp"

namespace xxent {

namespace {

void check_fermion_number(int n, int N) {
  if (n < 2) throw InvalidArgument("chain size n must be >= 2");
  if (N < 0 || N > n) throw InvalidArgument("fermion number N must lie in 0..n");
}

void check_separation(int n, int L) {
  if (L < 1 || L > n - 1)
    throw InvalidArgument("separation L must lie in 1..n-1, got " + std::to_string(L));
}

}  // namespace

double gs_contraction(int n, int N, int L) {
  check_fermion_number(n, N);
  if (L < 0 || L > n - 1) throw InvalidArgument("separation L must lie in 0..n-1");
  if (L == 0) return static_cast<double>(N) / n;
  const double pi = std::numbers::pi;
  return (std::sin(N * L * pi / n) / std::sin(L * pi / n)) / n;
}

ContractionTable<double> gs_contraction_table(int n, int N, int max_separation) {
  std::vector<double> g(static_cast<std::size_t>(max_separation) + 1);
  for (int L = 0; L <= max_separation; ++L) g[static_cast<std::size_t>(L)] = gs_contraction(n, N, L);
  return ContractionTable<double>(std::move(g));
}

ContractionTable<std::complex<double>> gs_twisted_contraction_table(int n, int N,
                                                                    int max_separation) {
  std::vector<std::complex<double>> g(static_cast<std::size_t>(max_separation) + 1);
  for (int L = 0; L <= max_separation; ++L)
    g[static_cast<std::size_t>(L)] =
        gs_contraction(n, N, L) * std::polar(1.0, L * std::numbers::pi / n);
  return ContractionTable<std::complex<double>>(std::move(g));
}

PairDensity gs_pair_density(int n, int N, int L, bool odd_af) {
  check_fermion_number(n, N);
  check_separation(n, L);
  if (odd_af && n % 2 == 0) throw InvalidArgument("odd antiferromagnetic branch needs odd n");
  // more than half filled: spin flip to n - N so that p_minus is not a
  // difference of O(1) numbers
  if (2 * N > n) {
    PairDensity pd = gs_pair_density(n, n - N, L, odd_af);
    std::swap(pd.p_plus, pd.p_minus);
    return pd;
  }

  const double g0 = gs_contraction(n, N, 0);
  const double gl = gs_contraction(n, N, L);
  double det = 0.0;
  // the two degenerate states carry conjugate tables; their mixture keeps Re Det
  if (odd_af && N > 0 && N < n)
    det = string_determinant(gs_twisted_contraction_table(n, N, L), L).real();
  else
    det = string_determinant(gs_contraction_table(n, N, L), L);

  return assemble_pair_density(g0, g0 * g0 - gl * gl, 0.5 * det);
}

double gs_concurrence(int n, int N, int L, bool odd_af) {
  check_fermion_number(n, N);
  check_separation(n, L);
  if (odd_af && n % 2 == 0) throw InvalidArgument("odd antiferromagnetic branch needs odd n");
  if (N == 0 || N == n) return 0.0;
  return concurrence(gs_pair_density(n, N, L, odd_af));
}

int entanglement_range(int n, int N, bool odd_af) {
  if (N < 1 || N > n - 1) throw InvalidArgument("entanglement_range needs 1 <= N <= n-1");
  int range = 0;
  for (int L = 1; L <= n / 2; ++L)
    if (gs_concurrence(n, N, L, odd_af) > 1e-14) range = L;
  return range;
}

PairDensity ground_state_pair_density(const ChainSpec& spec, int L) {
  const GroundSector gs = ground_sector(spec);
  return gs_pair_density(spec.n(), gs.N, L, gs.degenerate);
}

PairDensity zero_temperature_limit_pair_density(const ChainSpec& spec, int L) {
  try {
    return ground_state_pair_density(spec, L);
  } catch (const LevelCrossing& crossing) {
    // both sectors weighted by their ground degeneracy
    const int n = spec.n();
    const bool odd_af = spec.odd_antiferro();
    const int hi = crossing.index();
    const int lo = hi - 1;
    auto degeneracy = [&](int N) { return odd_af && N >= 1 && N <= n - 1 ? 2.0 : 1.0; };
    auto sector = [&](int N) { return gs_pair_density(n, N, L, odd_af && N >= 1 && N <= n - 1); };
    const double w_lo = degeneracy(lo) / (degeneracy(lo) + degeneracy(hi));
    const double w_hi = 1.0 - w_lo;
    const PairDensity a = sector(lo);
    const PairDensity b = sector(hi);
    PairDensity pd;
    pd.p_plus = w_lo * a.p_plus + w_hi * b.p_plus;
    pd.p = w_lo * a.p + w_hi * b.p;
    pd.p_minus = w_lo * a.p_minus + w_hi * b.p_minus;
    pd.alpha = w_lo * a.alpha + w_hi * b.alpha;
    return pd;
  }
}

bool entangled_as_temperature_vanishes(const ChainSpec& spec, int L) {
  try {
    const GroundSector gs = ground_sector(spec);
    if (gs.N == 0 || gs.N == spec.n()) return true;
  } catch (const LevelCrossing&) {
  }
  return zero_temperature_limit_pair_density(spec, L).entanglement_margin() > 1e-14;
}

}  // namespace xxent
