#include "xxent/chain_model.hpp"

#include <string>

#include "xxent/errors.hpp"

namespace xxent {

ChainSpec::ChainSpec(int n, double v, double b) : n_(n), v_(v), b_(b) {
  if (n < 2) throw InvalidArgument("chain size n must be >= 2, got " + std::to_string(n));
  if (!(v != 0.0) || !std::isfinite(v))
    throw InvalidArgument("coupling v must be finite and non-zero");
  if (!std::isfinite(b)) throw InvalidArgument("field b must be finite");
}

std::vector<MomentumIndex> momentum_set(int n, Parity sigma) {
  if (n < 2) throw InvalidArgument("momentum_set: n must be >= 2");
  const int shift = sigma == Parity::plus ? 1 : 0;
  const int first = -2 * (n / 2) + shift;
  std::vector<MomentumIndex> ks;
  ks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ks.emplace_back(first + 2 * i);
  return ks;
}

double single_fermion_energy(const ChainSpec& spec, MomentumIndex k) {
  // cos of |omega| keeps lambda_k == lambda_{-k} bit-exact
  const MomentumIndex mag(std::abs(k.twice()));
  return spec.b() - spec.v() * std::cos(mag.angle(spec.n()));
}

std::vector<double> sector_energies(const ChainSpec& spec, Parity sigma) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec.n()));
  for (MomentumIndex k : momentum_set(spec.n(), sigma))
    out.push_back(single_fermion_energy(spec, k));
  return out;
}

CanonicalChain canonicalize(const ChainSpec& spec) {
  return {spec.n(), spec.abs_v(), std::abs(spec.b()), spec.b() < 0.0, spec.odd_antiferro()};
}

CriticalFieldTable critical_fields(const ChainSpec& spec) {
  const int n = spec.n();
  const double pi = std::numbers::pi;
  const double scale = spec.odd_antiferro() ? std::cos(pi / n) : 1.0;
  // same expression as the N = 1 numerator, so b_1 = |v| exactly
  const double denom = std::sin((0.5 * n - 0.5) * pi / n);

  CriticalFieldTable table{{}, spec.odd_antiferro() ? FieldBranch::odd_antiferro
                                                    : FieldBranch::ferro_or_even};
  table.fields.resize(static_cast<std::size_t>(n));
  for (int N = 1; N <= n; ++N) {
    // sin form keeps b_{n-N+1} = -b_N to rounding
    const double c = std::sin((0.5 * n - N + 0.5) * pi / n);
    table.fields[static_cast<std::size_t>(N - 1)] = spec.abs_v() * scale * c / denom;
  }
  return table;
}

GroundSector ground_sector(const ChainSpec& spec) {
  const auto table = critical_fields(spec);
  const double tol = 1e-12 * spec.abs_v();
  int N = 0;
  for (int i = 1; i <= spec.n(); ++i) {
    const double bn = table.at(i);
    if (std::abs(spec.b() - bn) < tol)
      throw LevelCrossing("field sits on the ground-state crossing b_" + std::to_string(i), i);
    if (bn > spec.b()) N = i;
  }
  const bool degenerate = spec.odd_antiferro() && N >= 1 && N <= spec.n() - 1;
  return {N, degenerate};
}

}  // namespace xxent
