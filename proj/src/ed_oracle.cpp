#include "xxent/ed_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "xxent/errors.hpp"

namespace xxent::ed {

namespace {

// local index of every configuration inside its own N-block
std::vector<int> local_indices(int n) {
  std::vector<int> index(std::size_t{1} << n, -1);
  std::vector<int> next(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t c = 0; c < (1U << n); ++c) index[c] = next[static_cast<std::size_t>(std::popcount(c))]++;
  return index;
}

int pair_basis_index(bool up_i, bool up_j) { return (up_i ? 0 : 2) + (up_j ? 0 : 1); }

}  // namespace

std::vector<SpinBasisBlock> build_blocks(const ChainSpec& spec) {
  const int n = spec.n();
  if (n > kMaxSites)
    throw InvalidArgument("exact diagonalization limited to n <= " + std::to_string(kMaxSites));

  std::vector<SpinBasisBlock> blocks(static_cast<std::size_t>(n) + 1);
  for (int N = 0; N <= n; ++N) blocks[static_cast<std::size_t>(N)].N = N;
  for (std::uint32_t c = 0; c < (1U << n); ++c)
    blocks[static_cast<std::size_t>(std::popcount(c))].basis.push_back(c);
  const auto index = local_indices(n);

  for (auto& blk : blocks) {
    const auto dim = static_cast<Eigen::Index>(blk.basis.size());
    blk.hamiltonian = Eigen::MatrixXd::Zero(dim, dim);
    const double diag = spec.b() * (blk.N - 0.5 * n);
    for (Eigen::Index a = 0; a < dim; ++a) {
      const std::uint32_t c = blk.basis[static_cast<std::size_t>(a)];
      blk.hamiltonian(a, a) = diag;
      for (int j = 0; j < n; ++j) {
        const int k = (j + 1) % n;
        const bool up_j = ((c >> j) & 1U) != 0;
        const bool up_k = ((c >> k) & 1U) != 0;
        if (up_j == up_k) continue;
        // s_j^+ s_k^- + s_k^+ s_j^- exchanges the two spins
        const std::uint32_t flipped = c ^ ((1U << j) | (1U << k));
        blk.hamiltonian(index[flipped], a) += -0.5 * spec.v();
      }
    }
  }
  return blocks;
}

namespace {

SpectralState diagonalize(const std::vector<SpinBasisBlock>& blocks, int n) {
  SpectralState st;
  st.n = n;
  for (const auto& blk : blocks) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(blk.hamiltonian);
    if (solver.info() != Eigen::Success) throw NumericalError("block eigensolver failed");
    st.blocks.push_back({blk.N, blk.basis, solver.eigenvalues(), solver.eigenvectors(),
                         Eigen::VectorXd::Zero(solver.eigenvalues().size())});
  }
  return st;
}

double lowest_energy(const SpectralState& st) {
  double e0 = std::numeric_limits<double>::infinity();
  for (const auto& blk : st.blocks)
    if (blk.energies.size() > 0) e0 = std::min(e0, blk.energies.minCoeff());
  return e0;
}

}  // namespace

SpectralState thermal_state(const std::vector<SpinBasisBlock>& blocks, int n, double temperature) {
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be positive");
  SpectralState st = diagonalize(blocks, n);
  const double e0 = lowest_energy(st);
  const double beta = 1.0 / temperature;
  double z = 0.0;
  for (auto& blk : st.blocks) {
    blk.weights = (-beta * (blk.energies.array() - e0)).exp().matrix();
    z += blk.weights.sum();
  }
  for (auto& blk : st.blocks) blk.weights /= z;
  st.log_partition = -beta * e0 + std::log(z);
  return st;
}

SpectralState ground_state(const std::vector<SpinBasisBlock>& blocks, int n, double abs_v) {
  SpectralState st = diagonalize(blocks, n);
  const double e0 = lowest_energy(st);
  const double gap_tol = 1e-10 * abs_v;
  int count = 0;
  for (auto& blk : st.blocks) {
    for (Eigen::Index m = 0; m < blk.energies.size(); ++m) {
      if (blk.energies(m) - e0 < gap_tol) {
        blk.weights(m) = 1.0;
        ++count;
      }
    }
  }
  for (auto& blk : st.blocks) blk.weights /= count;
  st.ground_degeneracy = count;
  return st;
}

std::vector<double> spectrum(const std::vector<SpinBasisBlock>& blocks) {
  std::vector<double> all;
  for (const auto& blk : blocks) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(blk.hamiltonian, Eigen::EigenvaluesOnly);
    for (Eigen::Index m = 0; m < solver.eigenvalues().size(); ++m) all.push_back(solver.eigenvalues()(m));
  }
  std::sort(all.begin(), all.end());
  return all;
}

TwoQubitDensity reduced_pair_density(const SpectralState& state, int i, int j) {
  const int n = state.n;
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw InvalidArgument("reduced_pair_density needs two distinct sites");
  const auto index = local_indices(n);
  const std::uint32_t mask = (1U << i) | (1U << j);

  TwoQubitDensity rho = TwoQubitDensity::Zero();
  for (const auto& blk : state.blocks) {
    for (Eigen::Index m = 0; m < blk.weights.size(); ++m) {
      const double w = blk.weights(m);
      if (w == 0.0) continue;
      for (std::size_t a = 0; a < blk.basis.size(); ++a) {
        const std::uint32_t c = blk.basis[a];
        const double amp = blk.vectors(static_cast<Eigen::Index>(a), m);
        if (amp == 0.0) continue;
        const int row = pair_basis_index(((c >> i) & 1U) != 0, ((c >> j) & 1U) != 0);
        for (std::uint32_t bits = 0; bits < 4; ++bits) {
          const bool up_i = (bits & 1U) != 0;
          const bool up_j = (bits & 2U) != 0;
          const std::uint32_t c2 =
              (c & ~mask) | (up_i ? (1U << i) : 0U) | (up_j ? (1U << j) : 0U);
          // amplitudes outside this block vanish for block eigenvectors
          if (std::popcount(c2) != blk.N) continue;
          const double amp2 = blk.vectors(index[c2], m);
          rho(row, pair_basis_index(up_i, up_j)) += w * amp * amp2;
        }
      }
    }
  }
  return rho;
}

double wootters_concurrence(const TwoQubitDensity& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
  const Eigen::Vector4d evals = es.eigenvalues();
  if (evals.minCoeff() < -1e-10) throw InvalidArgument("density matrix has negative eigenvalues");
  const Eigen::Vector4d clipped = evals.cwiseMax(0.0);
  const Eigen::Matrix4cd sqrt_rho =
      es.eigenvectors() * clipped.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();

  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  // sqrt(rho) rho~ sqrt(rho) = A A^dagger with A = sqrt(rho) sqrt(rho~), so the
  // eigenvalues of R are the singular values of A
  const Eigen::Matrix4cd sqrt_tilde = flip * sqrt_rho.conjugate() * flip;
  const Eigen::Matrix4cd a = sqrt_rho * sqrt_tilde;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(a);
  const Eigen::Vector4d r = svd.singularValues();
  const double largest = r.maxCoeff();
  return std::max(0.0, 2.0 * largest - r.sum());
}

}  // namespace xxent::ed
