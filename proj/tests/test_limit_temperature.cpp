#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xxent/asymptotics.hpp"
#include "xxent/bulk.hpp"
#include "xxent/ground_state.hpp"
#include "xxent/limit_temperature.hpp"
#include "xxent/thermal_core.hpp"

using namespace xxent;

namespace {
const double kTwoSite = 1.0 / std::log(1.0 + std::sqrt(2.0));
}

TEST_CASE("two-site limit temperature") {
  for (double b : {0.0, 1.0, 5.0, 50.0}) {
    const auto r = limit_temperature(ChainSpec(2, 1.0, b), 1);
    CHECK(std::abs(r.upper - kTwoSite) <= 1e-4);
    CHECK(r.method == LimitMethod::exact_finite_n);
    CHECK(r.thresholds.empty());
  }
  CHECK(plateau_limit_temperature(2, 1.0, 1, false) == doctest::Approx(kTwoSite).epsilon(1e-9));
}

TEST_CASE("bulk limit temperature at finite field") {
  const auto r = bulk_limit_temperature_at(1, 10.0, 1.0);
  CHECK(std::abs(r.upper - 0.486) <= 0.005);
  CHECK(r.method == LimitMethod::bulk);
  const double ref = bulk_limit_temperature(1, 1.0);
  for (double b : {1.5, 3.0, 10.0}) CHECK(bulk_limit_temperature_at(1, b, 1.0).upper == doctest::Approx(ref).epsilon(0.02));
  for (double b : {1.5, 4.0}) CHECK(bulk_limit_temperature_at(2, b, 1.0).upper == doctest::Approx(bulk_limit_temperature(2, 1.0)).epsilon(0.02));
}

TEST_CASE("plateau limit temperatures") {
  CHECK(plateau_limit_temperature(14, 1.0, 1, false) == doctest::Approx(0.486).epsilon(0.03));
  CHECK(plateau_limit_temperature(41, -1.0, 20, true) == doctest::Approx(distant_pair_T(41, -1.0, true)).epsilon(0.25));
  CHECK(plateau_limit_temperature(40, 1.0, 20, false) == doctest::Approx(distant_pair_T(40, 1.0, false)).epsilon(0.1));
  CHECK_THROWS_AS(plateau_limit_temperature(41, 1.0, 20, true), InvalidArgument);
  CHECK_THROWS_AS(plateau_limit_temperature(10, 1.0, 6, false), InvalidArgument);
}

TEST_CASE("distant pair at high field") {
  const auto r = limit_temperature(ChainSpec(40, 1.0, 10.0), 20);
  CHECK(r.upper == doctest::Approx(distant_pair_T(40, 1.0, false)).epsilon(0.1));
}

TEST_CASE("exact path reaches the plateau value at large field") {
  for (int L : {1, 2, 3}) {
    const double plateau = plateau_limit_temperature(10, 1.0, L, false);
    CHECK(std::abs(limit_temperature(ChainSpec(10, 1.0, 60.0), L).upper - plateau) <= 1e-6);
  }
  const double odd = plateau_limit_temperature(9, -1.0, 4, true);
  CHECK(std::abs(limit_temperature(ChainSpec(9, -1.0, 60.0), 4).upper - odd) <= 1e-6);
}

TEST_CASE("limit temperature decreases with separation") {
  // at b = 0.3 only L = 1 is ever entangled; strict ordering needs T_L > 0
  for (double b : {1.0, 3.0, 10.0}) {
    double prev = 1e9;
    for (int L = 1; L <= 7; ++L) {
      const double t = limit_temperature(ChainSpec(14, 1.0, b), L).upper;
      CHECK(t > 0.0);
      CHECK(t < prev);
      prev = t;
    }
  }
  double prev = 1e9;
  for (int L = 1; L <= 7; ++L) {
    const double t = limit_temperature(ChainSpec(14, 1.0, 0.3), L).upper;
    CHECK(t <= prev);
    prev = t;
  }
}

TEST_CASE("limit temperature bounds the entangled region") {
  const ChainSpec spec(12, 1.0, 0.8);
  const auto r = limit_temperature(spec, 2);
  REQUIRE(r.upper > 0.0);
  CHECK(concurrence(pair_density(spec, r.upper * (1.0 - 1e-4), 2)) > 0.0);
  CHECK(concurrence(pair_density(spec, r.upper * (1.0 + 1e-4), 2)) == 0.0);
}

TEST_CASE("threshold branch below the onset field") {
  // For n = 14 the L = 2 onset field b_5 lies above the bulk value 0.5|v|.
  // Just below it the pair is entangled only above T_on(b), and that lower
  // edge of the entangled region falls as b rises toward b_5.
  const double onset = critical_fields(ChainSpec(14, 1.0, 0.0)).at(5);
  CHECK(onset > 0.5);
  CHECK(entangled_as_temperature_vanishes(ChainSpec(14, 1.0, onset + 1e-6), 2));
  double prev_on = 1e9;
  double prev_upper = 0.0;
  for (double b : {0.50, 0.51, 0.52, 0.53}) {
    const auto r = limit_temperature(ChainSpec(14, 1.0, b), 2);
    REQUIRE(r.thresholds.size() == 1);
    CHECK(r.thresholds[0].t_on > 0.0);
    CHECK(r.thresholds[0].t_on < prev_on);
    CHECK(r.upper > prev_upper);
    prev_on = r.thresholds[0].t_on;
    prev_upper = r.upper;
  }
  CHECK(limit_temperature(ChainSpec(14, 1.0, 0.49), 2).upper == 0.0);
}

TEST_CASE("scan intervals") {
  const auto grid = log_temperature_grid(1.0);
  CHECK(grid.size() == 128);
  CHECK(grid.front() == doctest::Approx(1e-6));
  CHECK(grid.back() == doctest::Approx(64.0));

  Warnings w;
  auto two = scan_intervals([](double t) { return (t - 0.01) * (0.5 - t) * (t < 0.1 || t > 0.2 ? 1.0 : -1.0); },
                            grid, false, 1e-12, &w);
  REQUIRE(two.size() == 2);
  CHECK(two[0].t_on == doctest::Approx(0.01).epsilon(1e-9));
  CHECK(two[0].t_off == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(two[1].t_on == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(two[1].t_off == doctest::Approx(0.5).epsilon(1e-9));

  Warnings floor;
  auto open = scan_intervals([](double t) { return 1.0 - t; }, grid, false, 1e-12, &floor);
  REQUIRE(open.size() == 1);
  CHECK(open[0].t_on == grid.front());
  CHECK(floor.contains("interval_at_grid_floor"));
  auto zero = scan_intervals([](double t) { return 1.0 - t; }, grid, true, 1e-12);
  CHECK(zero[0].t_on == 0.0);

  const std::vector<double> short_grid{0.1, 0.2, 0.3};
  CHECK_THROWS_AS(scan_intervals([](double) { return 1.0; }, short_grid, false, 1e-9), InvalidArgument);
}

TEST_CASE("reentrance scans") {
  const auto fields = critical_fields(ChainSpec(20, 1.0, 0.0));
  const auto grid = log_temperature_grid(1.0);

  // ground state entangled: one interval from zero
  const auto plain = reentrance_scan(ChainSpec(40, 1.0, 0.5), 1, grid);
  REQUIRE(plain.size() == 1);
  CHECK(plain[0].t_on == 0.0);

  // just below b_7 the ground state of L = 2 is separable, the thermal state is not
  const auto below = reentrance_scan(ChainSpec(20, 1.0, fields.at(7) * (1.0 - 1e-3)), 2, grid);
  REQUIRE(below.size() == 1);
  CHECK(below[0].t_on > 0.0);
  const auto r = limit_temperature(ChainSpec(20, 1.0, fields.at(7) * (1.0 - 1e-3)), 2);
  CHECK(r.thresholds.size() == 1);
  CHECK(r.upper == doctest::Approx(below[0].t_off));

  // high field, grid below the plateau value
  const double plateau = plateau_limit_temperature(14, 1.0, 1, false);
  std::vector<double> low;
  for (int i = 0; i < 120; ++i) low.push_back(1e-3 * std::pow(plateau * 1.5 / 1e-3, i / 119.0));
  const auto high = reentrance_scan(ChainSpec(14, 1.0, 40.0), 1, low);
  REQUIRE(high.size() == 1);
  CHECK(high[0].t_off == doctest::Approx(plateau).epsilon(1e-6));
}
