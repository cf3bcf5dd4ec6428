#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace xxent {

/// Cyclic XX chain of n spins with coupling v in a transverse field b.
/// Energies are in the same (arbitrary) unit as v.
class ChainSpec {
 public:
  ChainSpec(int n, double v, double b);

  int n() const noexcept { return n_; }
  double v() const noexcept { return v_; }
  double b() const noexcept { return b_; }
  double abs_v() const noexcept { return std::abs(v_); }

  /// n odd and v < 0: the ground state is two-fold degenerate for 0 < N < n.
  bool odd_antiferro() const noexcept { return v_ < 0.0 && n_ % 2 == 1; }

  ChainSpec with_field(double b) const { return {n_, v_, b}; }
  ChainSpec with_coupling(double v) const { return {n_, v, b_}; }

 private:
  int n_;
  double v_;
  double b_;
};

enum class Parity : int { plus = 1, minus = -1 };

constexpr int sign_of(Parity p) noexcept { return static_cast<int>(p); }

/// (parity sigma, projector power nu); four per chain.
struct SectorKey {
  Parity sigma;
  int nu;  // 0 or 1

  friend bool operator==(const SectorKey&, const SectorKey&) = default;
};

constexpr std::array<SectorKey, 4> all_sector_keys() {
  return {SectorKey{Parity::plus, 0}, SectorKey{Parity::plus, 1},
          SectorKey{Parity::minus, 0}, SectorKey{Parity::minus, 1}};
}

/// Momentum label k, stored doubled so that half-integers stay exact.
class MomentumIndex {
 public:
  constexpr explicit MomentumIndex(int twice_k) noexcept : twice_(twice_k) {}

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return 0.5 * twice_; }
  /// omega_k = 2 pi k / n
  double angle(int n) const noexcept {
    return std::numbers::pi * static_cast<double>(twice_) / static_cast<double>(n);
  }

  friend constexpr bool operator==(MomentumIndex, MomentumIndex) = default;
  friend constexpr auto operator<=>(MomentumIndex, MomentumIndex) = default;

 private:
  int twice_;
};

/// Allowed momenta for fermion-number parity sigma: half-integers for +1,
/// integers for -1, from -[n/2] (+1/2) to [(n-1)/2] (+1/2).
std::vector<MomentumIndex> momentum_set(int n, Parity sigma);

/// lambda_k = b - v cos(omega_k)
double single_fermion_energy(const ChainSpec& spec, MomentumIndex k);

/// Single-fermion energies of one parity sector, in momentum_set order.
std::vector<double> sector_energies(const ChainSpec& spec, Parity sigma);

/// The symmetry-reduced form of a chain. Only the odd-antiferro flag
/// changes observable formulas; the field sign and (even n) coupling sign
/// are invisible to every pair observable.
struct CanonicalChain {
  int n;
  double abs_v;
  double abs_b;
  bool field_flipped;
  bool odd_antiferro;
};

CanonicalChain canonicalize(const ChainSpec& spec);

enum class FieldBranch { ferro_or_even, odd_antiferro };

/// Ground-state transition fields b_1 > b_2 > ... > b_n.
struct CriticalFieldTable {
  std::vector<double> fields;
  FieldBranch branch;

  /// b_N for 1 <= N <= n.
  double at(int N) const { return fields.at(static_cast<std::size_t>(N - 1)); }
};

CriticalFieldTable critical_fields(const ChainSpec& spec);

struct GroundSector {
  int N;  // fermion number, 0..n
  bool degenerate;
};

/// Fermion number of the ground state. Throws LevelCrossing when b sits
/// within 1e-12 |v| of a transition field.
GroundSector ground_sector(const ChainSpec& spec);

}  // namespace xxent
