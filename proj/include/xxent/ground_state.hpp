#pragma once

#include <complex>

#include "xxent/chain_model.hpp"
#include "xxent/pair_density.hpp"
#include "xxent/string_determinant.hpp"

namespace xxent {

/// g_L of the N-fermion ground state: N/n at L = 0, otherwise
/// sin(N L pi / n) / (n sin(L pi / n)).
double gs_contraction(int n, int N, int L);

ContractionTable<double> gs_contraction_table(int n, int N, int max_separation);

/// Phase-twisted table g_L e^{i L pi / n} used by the degenerate odd
/// antiferromagnetic ground manifold.
ContractionTable<std::complex<double>> gs_twisted_contraction_table(int n, int N,
                                                                    int max_separation);

/// T -> 0+ pair density of the N-fermion ground state (the equal mixture of
/// the two degenerate states when odd_af is set).
PairDensity gs_pair_density(int n, int N, int L, bool odd_af);

/// Ground-state concurrence C_L for 0 <= N <= n, 1 <= L <= n-1.
double gs_concurrence(int n, int N, int L, bool odd_af);

/// Largest L <= [n/2] with C_L > 1e-14; 0 when no pair is entangled.
int entanglement_range(int n, int N, bool odd_af);

/// Ground-state pair density of a concrete chain; throws LevelCrossing on a
/// transition field.
PairDensity ground_state_pair_density(const ChainSpec& spec, int L);

/// T -> 0+ limit of the thermal pair density. Equals the ground-state
/// density off transition fields; on b = b_N it is the degeneracy-weighted
/// mixture of the N-1 and N sectors.
PairDensity zero_temperature_limit_pair_density(const ChainSpec& spec, int L);

/// Whether C_L > 0 for all sufficiently small T > 0. Product ground states
/// (N = 0 or n) qualify: thermal one-fermion admixture entangles every pair.
bool entangled_as_temperature_vanishes(const ChainSpec& spec, int L);

}  // namespace xxent
