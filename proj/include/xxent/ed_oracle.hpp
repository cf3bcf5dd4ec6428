#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "xxent/chain_model.hpp"

// Brute-force exact diagonalization of the spin Hamiltonian, independent of
// the fermionic machinery; used to cross-check every analytic path.

namespace xxent::ed {

constexpr int kMaxSites = 12;

/// Fixed-magnetization block: configurations with N up spins (bit j set =
/// spin up at site j) and the dense Hamiltonian restricted to them.
struct SpinBasisBlock {
  int N;
  std::vector<std::uint32_t> basis;
  Eigen::MatrixXd hamiltonian;
};

/// H = b S^z - (v/2) sum_j (s_j^+ s_{j+1}^- + h.c.) on the ring, one block
/// per N = 0..n. Requires n <= 12.
std::vector<SpinBasisBlock> build_blocks(const ChainSpec& spec);

/// Block-diagonal spectral representation of a mixed state: each block keeps
/// its eigenvectors and their probabilities.
struct SpectralState {
  struct Block {
    int N;
    std::vector<std::uint32_t> basis;
    Eigen::VectorXd energies;
    Eigen::MatrixXd vectors;  // columns are eigenvectors
    Eigen::VectorXd weights;  // probabilities, sum over all blocks = 1
  };
  int n = 0;
  std::vector<Block> blocks;
  double log_partition = 0.0;  // thermal states only
  int ground_degeneracy = 0;   // ground states only
};

/// rho(T) = exp(-H/T) / Z.
SpectralState thermal_state(const std::vector<SpinBasisBlock>& blocks, int n, double temperature);

/// T -> 0+ limit: equal mixture over eigenstates within 1e-10 |v| of the
/// lowest energy.
SpectralState ground_state(const std::vector<SpinBasisBlock>& blocks, int n, double abs_v);

/// All 2^n eigenvalues, ascending.
std::vector<double> spectrum(const std::vector<SpinBasisBlock>& blocks);

/// 4x4 density in the basis (up-up, up-down, down-up, down-down).
using TwoQubitDensity = Eigen::Matrix4cd;

/// rho_ij = Tr_{rest} rho for sites i != j (0-based).
TwoQubitDensity reduced_pair_density(const SpectralState& state, int i, int j);

/// C = [2 lambda_max - tr R]_+ with R = sqrt(sqrt(rho) rho~ sqrt(rho)) and
/// rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y). Rejects inputs with
/// eigenvalues below -1e-10.
double wootters_concurrence(const TwoQubitDensity& rho);

}  // namespace xxent::ed
