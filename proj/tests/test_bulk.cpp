#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "oracles.hpp"
#include "xxent/bulk.hpp"
#include "xxent/special_functions.hpp"
#include "xxent/thermal_core.hpp"

using namespace xxent;

namespace {

constexpr double kPi = std::numbers::pi;

// Adaptive Gauss-Kronrod over [0, pi], split at the Fermi angle when it exists.
double kronrod_contraction(int L, double beta, double b, double v) {
  auto f = [&](double w) {
    const double z = beta * (b - v * std::cos(w));
    const double occ = z > 0 ? std::exp(-z) / (1.0 + std::exp(-z)) : 1.0 / (1.0 + std::exp(z));
    return std::cos(L * w) * occ;
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double sum = 0.0;
  if (std::abs(b) < std::abs(v)) {
    const double wf = std::acos(b / v);
    sum = GK::integrate(f, 0.0, wf, 18, 1e-13) + GK::integrate(f, wf, kPi, 18, 1e-13);
  } else {
    sum = GK::integrate(f, 0.0, kPi, 18, 1e-13);
  }
  return sum / kPi;
}

}  // namespace

TEST_CASE("bessel_i values") {
  CHECK(bessel_i(0, 0.0) == 1.0);
  CHECK(bessel_i(1, 0.0) == 0.0);
  CHECK(bessel_i(0, 1.0) == doctest::Approx(1.2660658777520082).epsilon(1e-14));
  const double x = 50.0;
  const int L = 3;
  const double asym = std::exp(x) * (1.0 + (1.0 - 4.0 * L * L) / (8.0 * x)) / std::sqrt(2.0 * kPi * x);
  CHECK(bessel_i(L, x) == doctest::Approx(asym).epsilon(5e-3));
  CHECK_THROWS_AS(bessel_i(0, 701.0), InvalidArgument);
  CHECK_THROWS_AS(bessel_i(201, 1.0), InvalidArgument);
}

TEST_CASE("bessel_i against series and boost") {
  for (int L = 0; L <= 40; L += 3) {
    for (double x : {0.1, 0.7, 2.0, 9.0, 14.9, 15.1, 30.0, 80.0, 300.0, 690.0}) {
      const double ref = boost::math::cyl_bessel_i(static_cast<double>(L), x);
      const double got = bessel_i(L, x);
      CHECK(got == doctest::Approx(ref).epsilon(1e-12));
      CHECK(bessel_i(L, -x) == doctest::Approx((L % 2 == 0 ? 1.0 : -1.0) * got).epsilon(1e-15));
      if (x < 40.0)
        CHECK(got == doctest::Approx(static_cast<double>(oracle::bessel_series(L, x))).epsilon(1e-12));
    }
  }
  for (int L = 0; L <= 5; ++L)
    CHECK(bessel_i_scaled(L, 5000.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * kPi * 5000.0) * (1.0 - (4.0 * L * L - 1.0) / 40000.0)).epsilon(1e-7));
}

TEST_CASE("bessel recurrence and ratio bound") {
  for (int L = 1; L <= 30; ++L) {
    for (double x = 0.5; x <= 100.0; x *= 1.37) {
      const double lhs = bessel_i(L - 1, x) - bessel_i(L + 1, x);
      CHECK(lhs == doctest::Approx(2.0 * L / x * bessel_i(L, x)).epsilon(1e-10));
    }
  }
  for (int L = 1; L <= 12; ++L)
    for (double x = L * L; x <= 400.0 * L; x *= 1.5)
      CHECK(bessel_i_ratio(L, x) <= std::exp(-L * L / (2.0 * x)) * (1.0 + 10.0 / x));
  const auto seq = bessel_i_scaled_sequence(10, 37.0);
  for (int L = 0; L <= 10; ++L) CHECK(seq[static_cast<std::size_t>(L)] == doctest::Approx(bessel_i_scaled(L, 37.0)).epsilon(1e-14));
}

TEST_CASE("theta functions") {
  CHECK(theta4(0.0) == 1.0);
  CHECK(theta2(0.0) == 0.0);
  const double u = std::exp(-kPi);
  CHECK(std::abs(theta2(u) - theta4(u)) < 1e-12);
  // Jacobi identity theta3^4 = theta2^4 + theta4^4 with theta3(u) = theta4(-u)
  for (double q : {0.1, 0.4, 0.8}) {
    double t3 = 1.0;
    for (int k = 1; k < 200; ++k) t3 += 2.0 * std::pow(q, k * k);
    CHECK(std::pow(t3, 4) == doctest::Approx(std::pow(theta2(q), 4) + std::pow(theta4(q), 4)).epsilon(1e-12));
  }
}

TEST_CASE("bulk contractions against adaptive quadrature") {
  oracle::CaseGenerator gen(41);
  for (int trial = 0; trial < 60; ++trial) {
    const double v = gen.sign() * gen.uniform(0.5, 2.0);
    const double b = gen.uniform(-3.0, 3.0);
    const double t = gen.log_uniform(0.005, 5.0);
    const auto g = bulk_contractions(6, 1.0 / t, b, v);
    for (int L = 0; L <= 6; ++L)
      CHECK(std::abs(g[static_cast<std::size_t>(L)] - kronrod_contraction(L, 1.0 / t, b, v)) <= 1e-11 * std::max(g[0], 1e-300) + 1e-15);
  }
}

TEST_CASE("bulk quadrature self-consistency") {
  for (double b : {-0.7, 0.0, 0.5, 0.99, 1.5}) {
    for (double t : {0.01, 0.1, 1.0}) {
      const auto coarse = bulk_contractions(8, 1.0 / t, b, 1.0);
      QuadratureConfig fine;
      fine.initial_panels = 64;
      const auto ref = bulk_contractions(8, 1.0 / t, b, 1.0, fine);
      for (std::size_t L = 0; L < coarse.size(); ++L) CHECK(std::abs(coarse[L] - ref[L]) <= 1e-11 * ref[0]);
    }
  }
}

TEST_CASE("bulk zero temperature") {
  CHECK(bulk_ground_contraction(0, 0.0, 1.0) == doctest::Approx(0.5));
  CHECK(bulk_ground_contraction(1, 0.0, 1.0) == doctest::Approx(1.0 / kPi));
  for (int L = 0; L <= 5; ++L) CHECK(bulk_ground_contraction(L, 1.3, 1.0) == 0.0);
  CHECK(bulk_ground_contraction(0, -1.3, 1.0) == 1.0);
  CHECK(bulk_ground_contraction(2, -1.3, 1.0) == 0.0);
  // closed form is the T -> 0 limit of the integral
  for (double b : {-0.6, 0.2, 0.8})
    for (double v : {1.0, -1.0})
      for (int L = 0; L <= 4; ++L)
        CHECK(std::abs(bulk_contraction(L, 1e5, b, v) - bulk_ground_contraction(L, b, v)) < 1e-5);
  // the range grows like 1/w_F: with w_F ~ 1.4e-3 every L up to 50 is entangled
  for (int L = 1; L <= 50; ++L) CHECK(concurrence(bulk_pair_density(L, 0.0, 1.0 - 1e-6, 1.0)) > 0.0);
  CHECK(concurrence(bulk_pair_density(50, 0.0, 0.99, 1.0)) == 0.0);
}

TEST_CASE("bulk high-field limit") {
  for (double beta : {2.0, 5.0}) {
    const double b = 1.0 + 8.0 / beta;
    for (int L = 0; L <= 4; ++L)
      CHECK(bulk_contraction(L, beta, b, 1.0) == doctest::Approx(std::exp(-beta * b) * bessel_i(L, beta)).epsilon(1e-2));
  }
}

TEST_CASE("bulk range thresholds") {
  CHECK(concurrence(bulk_pair_density(2, 0.01, 0.4, 1.0)) == 0.0);
  CHECK(concurrence(bulk_pair_density(2, 0.01, 0.7, 1.0)) > 0.0);
  CHECK(concurrence(bulk_pair_density(3, 0.01, 0.7, 1.0)) == 0.0);
}

TEST_CASE("bulk limit temperatures") {
  CHECK(std::abs(bulk_limit_temperature(1, 1.0) - 0.486) <= 0.002);
  CHECK(std::abs(bulk_limit_temperature(2, -1.0) - 0.16) <= 0.005);
  CHECK(bulk_limit_temperature(20, 1.0) == doctest::Approx(std::log(2.0) / 400.0).epsilon(0.05));
  const double t1 = bulk_limit_temperature(1, 1.0);
  CHECK(std::sqrt(2.0) * bessel_i(1, 1.0 / t1) == doctest::Approx(bessel_i(0, 1.0 / t1)).epsilon(1e-9));
}

TEST_CASE("finite ring approaches the bulk") {
  for (double b : {0.0, 0.5, 1.2})
    for (double t : {0.1, 0.5, 2.0})
      for (int L = 1; L <= 5; ++L) {
        const double finite = concurrence(pair_density(ChainSpec(400, 1.0, b), t, L));
        CHECK(std::abs(finite - concurrence(bulk_pair_density(L, t, b, 1.0))) < 1e-4);
      }
  CHECK(bulk_concurrence(1, 1.0 / 0.1, -0.5, 1.0) == doctest::Approx(bulk_concurrence(1, 1.0 / 0.1, 0.5, 1.0)).epsilon(1e-12));
}
