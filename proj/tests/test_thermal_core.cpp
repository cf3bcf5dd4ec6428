#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "xxent/ed_oracle.hpp"
#include "xxent/ground_state.hpp"
#include "xxent/thermal_core.hpp"

using namespace xxent;

namespace {

double plateau_mid(const ChainSpec& probe, int N) {
  const auto t = critical_fields(probe);
  const int n = probe.n();
  const double hi = N == 0 ? t.at(1) + 1.0 : t.at(N);
  const double lo = N == n ? t.at(n) - 1.0 : t.at(N + 1);
  return 0.5 * (hi + lo);
}

void check_physical(const PairDensity& pd) {
  CHECK(std::abs(pd.trace() - 1.0) < 1e-12);
  CHECK(pd.p_plus >= 0.0);
  CHECK(pd.p_minus >= 0.0);
  CHECK(pd.p >= std::abs(pd.alpha) - 1e-15);
}

}  // namespace

TEST_CASE("sector partition functions") {
  // n = 4, b = 2v, beta v = 1: product over half-integer momenta
  const ChainSpec spec(4, 1.0, 2.0);
  const auto z = sector_log_partition(spec, 1.0, {Parity::plus, 0});
  double log_prod = 0.5 * 1.0 * 2.0 * 4;
  for (double c : {std::cos(0.75 * std::numbers::pi), std::cos(0.25 * std::numbers::pi)})
    log_prod += 2.0 * std::log1p(std::exp(-(2.0 - c)));
  CHECK(z.sign == 1);
  CHECK(z.log_abs == doctest::Approx(log_prod).epsilon(1e-13));

  // nu = 1 with an exactly vanishing level: b = v cos 0 on the integer set
  const auto zero = sector_log_partition(ChainSpec(4, 1.0, 1.0), 1.0, {Parity::minus, 1});
  CHECK(zero.sign == 0);
  CHECK_THROWS_AS(sector_contractions(ChainSpec(4, 1.0, 1.0), 1.0, {Parity::minus, 1}, 2), NumericalError);
}

TEST_CASE("sector contractions limits") {
  const ChainSpec strong(10, 1.0, 3.0);
  const auto cold = sector_contractions(strong, 200.0, {Parity::plus, 0}, 9);
  for (double g : cold.g.values()) CHECK(std::abs(g) < 1e-100);

  const ChainSpec spec(12, 1.0, 0.4);
  const auto hot = sector_contractions(spec, 1e-12, {Parity::minus, 0}, 11);
  CHECK(hot.g(0) == doctest::Approx(0.5));
  for (int L = 1; L <= 11; ++L) CHECK(std::abs(hot.g(L)) < 1e-12);

  // ground-state occupation of the plateau sector
  const int N = 4;
  const ChainSpec plateau(12, 1.0, plateau_mid(ChainSpec(12, 1.0, 0.0), N));
  const auto g = sector_contractions(plateau, 1e4, {Parity::plus, 0}, 11);
  for (int L = 0; L <= 11; ++L) CHECK(std::abs(g.g(L) - gs_contraction(12, N, L)) < 1e-12);

  Warnings w;
  sector_contractions(ChainSpec(4, 1.0, 1.0 + 1e-9), 1.0, {Parity::minus, 1}, 2, &w);
  CHECK(w.contains("near_singular_sector"));
}

TEST_CASE("partition function against enumeration") {
  oracle::CaseGenerator gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(2, 10);
    const double v = gen.sign() * gen.uniform(0.2, 2.0);
    const double b = gen.uniform(-4.0, 4.0);
    const double t = gen.log_uniform(0.01, 20.0);
    const double ref = oracle::brute_force_log_z(n, v, b, 1.0 / t);
    CHECK(log_partition_function(ChainSpec(n, v, b), t) == doctest::Approx(ref).epsilon(1e-11));
  }
  // large beta b n stays finite
  const double lz = log_partition_function(ChainSpec(400, 1.0, 50.0), 1e-3);
  CHECK(std::isfinite(lz));
  CHECK(lz == doctest::Approx(0.5 * 50.0 * 400 / 1e-3).epsilon(1e-12));
}

TEST_CASE("pair density limits") {
  const auto hot = pair_density(ChainSpec(8, 1.0, 0.7), 1e9, 3);
  CHECK(hot.p_plus == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(hot.p_minus == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(hot.p == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(std::abs(hot.alpha) < 1e-8);

  const auto aligned = pair_density(ChainSpec(8, 1.0, 10.0), 0.1, 3);
  CHECK(aligned.p_minus == doctest::Approx(1.0));
  CHECK(aligned.p_plus < 1e-80);
  CHECK(aligned.p < 1e-35);
  CHECK(concurrence(aligned) > 0.0);
  check_physical(aligned);

  const auto flipped = pair_density(ChainSpec(8, 1.0, -10.0), 0.1, 3);
  CHECK(flipped.p_plus == doctest::Approx(1.0));
  CHECK(flipped.p_minus == aligned.p_plus);
}

TEST_CASE("thermal pair density against exact diagonalization") {
  for (int n = 2; n <= 7; ++n) {
    for (double v : {1.0, -1.0}) {
      for (double b : {0.0, 0.3, 0.9, 1.0, 1.5, 3.0, -0.9}) {
        for (double t : {0.05, 0.2, 1.0, 5.0}) {
          const ChainSpec spec(n, v, b);
          const auto state = ed::thermal_state(ed::build_blocks(spec), n, t);
          const ThermalState core(spec, t);
          CHECK(core.log_partition() == doctest::Approx(state.log_partition).epsilon(1e-10));
          for (int L = 1; L < n; ++L) {
            const auto rho = ed::reduced_pair_density(state, 0, L);
            const auto pd = core.pair_density(L);
            CHECK(std::abs(pd.p_plus - rho(0, 0).real()) < 1e-8);
            CHECK(std::abs(pd.p - rho(1, 1).real()) < 1e-8);
            CHECK(std::abs(pd.p_minus - rho(3, 3).real()) < 1e-8);
            CHECK(std::abs(pd.alpha - rho(1, 2).real()) < 1e-8);
            CHECK(std::abs(concurrence(pd) - ed::wootters_concurrence(rho)) < 1e-8);
          }
        }
      }
    }
  }
}

TEST_CASE("thermal symmetries") {
  oracle::CaseGenerator gen(32);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = gen.integer(2, 30);
    const double v = gen.sign() * gen.uniform(0.2, 2.0);
    const double b = gen.uniform(-4.0, 4.0);
    const double t = gen.log_uniform(0.01, 10.0);
    const int L = gen.integer(1, n - 1);
    const auto pd = pair_density(ChainSpec(n, v, b), t, L);
    check_physical(pd);
    const double c = concurrence(pd);
    CHECK(std::abs(c - concurrence(pair_density(ChainSpec(n, v, -b), t, L))) < 1e-10);
    CHECK(std::abs(c - concurrence(pair_density(ChainSpec(n, v, b), t, n - L))) < 1e-9);
    if (n % 2 == 0) CHECK(std::abs(c - concurrence(pair_density(ChainSpec(n, -v, b), t, L))) < 1e-10);
  }
}

TEST_CASE("low-temperature limit matches the ground state") {
  for (int n : {6, 7, 8, 9}) {
    for (double v : {1.0, -1.0}) {
      const ChainSpec probe(n, v, 0.0);
      for (int N = 0; N <= n; ++N) {
        const ChainSpec spec = probe.with_field(plateau_mid(probe, N));
        const auto gs = ground_sector(spec);
        const ThermalState state(spec, 1e-3);
        for (int L = 1; L < n; ++L)
          CHECK(std::abs(concurrence(state.pair_density(L)) - gs_concurrence(n, N, L, gs.degenerate)) <= 5e-3);
      }
    }
  }
}

TEST_CASE("W plateau at low temperature") {
  // the N = 1 plateau of n = 40 has a gap of ~3e-3 v, so T must sit well below it
  const ChainSpec probe(40, 1.0, 0.0);
  const auto t = critical_fields(probe);
  const ThermalState state(probe.with_field(0.5 * (t.at(1) + t.at(2))), 5e-5);
  for (int L = 1; L <= 20; ++L) CHECK(std::abs(concurrence(state.pair_density(L)) - 0.05) <= 1e-3);
}
