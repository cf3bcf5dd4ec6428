#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "xxent/chain_model.hpp"
#include "xxent/errors.hpp"
#include "xxent/pair_density.hpp"
#include "xxent/string_determinant.hpp"

namespace xxent {

/// A real number stored as sign and log-magnitude. sign == 0 means exactly 0.
struct SignedLog {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();

  double value() const noexcept { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Z_nu^sigma = Tr P^nu exp(-beta H_sigma)
///            = exp(beta b n / 2) prod_k (1 + (-1)^nu exp(-beta lambda_k)).
/// nu = 1 sectors with an exactly vanishing level return sign 0.
SignedLog sector_log_partition(const ChainSpec& spec, double beta, SectorKey key);

struct SectorContractions {
  SectorKey key;
  SignedLog log_weight;
  ContractionTable<double> g;  // g_0..g_Lmax
};

/// Contractions g_L = (1/n) sum_k f_k cos(L omega_k) of one (sigma, nu)
/// sector with f_k = [1 + (-1)^nu exp(beta lambda_k)]^{-1}.
/// Throws NumericalError for an exactly singular nu = 1 sector and raises
/// `near_singular_sector` when min |beta lambda| < 1e-6 with nu = 1.
SectorContractions sector_contractions(const ChainSpec& spec, double beta, SectorKey key,
                                       int max_separation, Warnings* warnings = nullptr);

/// Thermal state of the full chain, decomposed into parity-projected
/// free-fermion ensembles. Negative fields are evaluated at |b| and mapped
/// back by a global spin flip (p_plus <-> p_minus), so the small diagonal
/// element is always computed directly. Construction is O(n) per sector; each pair
/// density costs a few L x L determinants per ensemble.
class ThermalState {
 public:
  ThermalState(const ChainSpec& spec, double temperature);

  ChainSpec spec() const { return field_flipped_ ? spec_.with_field(-spec_.b()) : spec_; }
  double temperature() const noexcept { return temperature_; }
  double beta() const noexcept { return 1.0 / temperature_; }

  /// log Z with Z = Tr exp(-beta H).
  double log_partition() const noexcept { return log_z_; }

  /// Pair density at separation 1 <= L <= n-1.
  PairDensity pair_density(int L) const;

  const Warnings& warnings() const noexcept { return warnings_; }

  /// Number of projected ensembles in the decomposition (diagnostics).
  std::size_t ensemble_count() const noexcept { return leaves_.size(); }

 private:
  struct Ensemble {
    Parity sigma;
    int excitation_parity;  // +1 even, -1 odd number of excitations
    double weight;          // normalized, sums to 1 over ensembles
    double mix;             // even ensembles: B/A
    std::vector<double> occ_a;
    std::vector<double> occ_b;
    std::vector<double> occ_delta;  // odd ensembles: (occ_a - occ_b) / (A/B - 1)
  };

  struct Observables {
    double occupation;  // g_0 = <n_j>
    double p_plus;
    double alpha;
  };

  Observables evaluate(const Ensemble& e, int L) const;
  ContractionTable<std::complex<double>> table(Parity sigma, const std::vector<double>& occ,
                                               int max_separation) const;

  ChainSpec spec_;  // field made non-negative
  double temperature_;
  bool field_flipped_;
  double log_z_ = 0.0;
  std::vector<Ensemble> leaves_;
  std::vector<std::complex<double>> phase_;  // e^{i pi j / n}, j = 0..2n-1
  Warnings warnings_;
};

/// One-shot pair density; warnings from the evaluation are merged into
/// `warnings` when given.
PairDensity pair_density(const ChainSpec& spec, double temperature, int L,
                         Warnings* warnings = nullptr);

/// Partition function log Z = log Tr exp(-beta H) assembled from the four
/// parity sectors.
double log_partition_function(const ChainSpec& spec, double temperature);

}  // namespace xxent
