#include <cmath>
#include <functional>
#include <vector>

#include <doctest.h>

#include "maxsemi/errors.hpp"
#include "maxsemi/stats.hpp"

namespace {

using namespace maxsemi;

TEST_CASE("ecdf counts the fraction at or below x") {
  const std::vector<double> samples = {1.0, 2.0, 3.0, 4.0};
  CHECK(ecdf(samples, 0.0) == 0.0);
  CHECK(ecdf(samples, 1.0) == 0.25);
  CHECK(ecdf(samples, 2.5) == 0.5);
  CHECK(ecdf(samples, 4.0) == 1.0);
  CHECK(ecdf(samples, 100.0) == 1.0);
  CHECK_THROWS_AS(ecdf(std::vector<double>{}, 0.0), EmptyInputError);
}

TEST_CASE("one-sample KS statistic matches a hand computation") {
  // x_i = 0.1 i against U(0,1): the largest gap is 1 - F(0.5) = 0.5 at the
  // top step.
  const std::vector<double> samples = {0.3, 0.1, 0.5, 0.2, 0.4};  // unsorted
  const KSReport report =
      ks_one_sample(samples, [](double x) { return x; });
  CHECK(report.statistic == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(report.n == 5);
  CHECK(report.threshold == doctest::Approx(1.36 / std::sqrt(5.0)));
  CHECK(report.pass);  // 0.5 < 0.608
}

TEST_CASE("one-sample KS rejects a clearly shifted sample") {
  // All mass near 1: the gap below the first order statistic is 0.8.
  const std::vector<double> samples = {0.8, 0.85, 0.9, 0.95, 0.99};
  const KSReport report =
      ks_one_sample(samples, [](double x) { return x; });
  CHECK(report.statistic == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_FALSE(report.pass);
}

TEST_CASE("one-sample KS is evaluated from both sides of each jump") {
  // A single point at 0.5 under U(0,1): D = max(|1 - 0.5|, |0 - 0.5|) = 0.5.
  const KSReport report = ks_one_sample(std::vector<double>{0.5},
                                        [](double x) { return x; });
  CHECK(report.statistic == doctest::Approx(0.5));
  CHECK_THROWS_AS(ks_one_sample({}, [](double) { return 0.0; }),
                  EmptyInputError);
}

TEST_CASE("two-sample KS statistic matches a hand computation") {
  // Interleaved samples step out of phase by exactly one step of 1/3.
  const KSReport report = ks_two_sample({1.0, 2.0, 3.0}, {1.5, 2.5, 3.5});
  CHECK(report.statistic == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(report.n == 3);
  CHECK(report.threshold == doctest::Approx(1.36 * std::sqrt(6.0 / 9.0)));
  CHECK(report.pass);
}

TEST_CASE("two-sample KS handles ties and identical samples") {
  const KSReport same = ks_two_sample({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0});
  CHECK(same.statistic == 0.0);
  CHECK(same.pass);

  // Disjoint supports: D = 1. Needs enough points for the threshold to sit
  // below 1 (with 2-vs-3 samples the 5% threshold is 1.24 and nothing can
  // fail).
  std::vector<double> low, high;
  for (int i = 0; i < 20; ++i) {
    low.push_back(i);
    high.push_back(100.0 + i);
  }
  const KSReport apart = ks_two_sample(low, high);
  CHECK(apart.statistic == doctest::Approx(1.0));
  CHECK_FALSE(apart.pass);

  CHECK_THROWS_AS(ks_two_sample({}, {1.0}), EmptyInputError);
  CHECK_THROWS_AS(ks_two_sample({1.0}, {}), EmptyInputError);
}

TEST_CASE("two-sample KS of a distribution against itself passes at scale") {
  // Deterministic stand-in streams: two low-discrepancy walks through (0,1).
  std::vector<double> a, b;
  for (int i = 1; i <= 2000; ++i) {
    a.push_back(std::fmod(0.6180339887498949 * i, 1.0));
    b.push_back(std::fmod(0.7548776662466927 * i, 1.0));
  }
  const KSReport report = ks_two_sample(a, b);
  CHECK(report.pass);
}

TEST_CASE("monotone check accepts an increasing d.f. spanning the grid") {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 10.0);
  const MonotoneDFReport report =
      monotone_df_check([](double x) { return x / 10.0; }, grid);
  CHECK(report.violations == 0);
  CHECK(report.max_decrease == 0.0);
  CHECK(report.lower_value == 0.0);
  CHECK(report.upper_value == 1.0);
  CHECK(report.limits_ok);
  CHECK(report.pass);
}

TEST_CASE("monotone check counts decreases and reports the worst one") {
  const std::vector<double> grid = {0.0, 1.0, 2.0, 3.0, 4.0};
  // Steps 0, 0.25, 0.5 then dips to 0.45 before jumping to 1: one decrease
  // of exactly 0.05 between the grid points at 2 and 3.
  const auto df = [](double x) {
    if (x <= 2.0) return x / 4.0;
    if (x <= 3.0) return x / 4.0 - 0.3;
    return 1.0;
  };
  const MonotoneDFReport report = monotone_df_check(df, grid);
  CHECK(report.violations == 1);
  CHECK(report.max_decrease == doctest::Approx(0.05).epsilon(1e-12));
  CHECK_FALSE(report.pass);
}

TEST_CASE("monotone check fails a grid that misses the tails") {
  const std::vector<double> grid = {0.0, 0.5, 1.0};
  // Monotone but starting at 0.5: lower limit violated.
  const MonotoneDFReport report = monotone_df_check(
      [](double x) { return 0.5 + x / 2.01; }, grid);
  CHECK(report.violations == 0);
  CHECK_FALSE(report.limits_ok);
  CHECK_FALSE(report.pass);

  CHECK_THROWS_AS(monotone_df_check([](double) { return 0.0; },
                                    std::vector<double>{1.0}),
                  DomainError);
}

TEST_CASE("cm proxy passes a completely monotone function at all orders") {
  const std::vector<double> grid = geometric_grid(1e-3, 1e3, 64);
  const CmProxyReport report =
      cm_proxy([](double s) { return std::exp(-s); }, grid, 8);
  REQUIRE(report.orders.size() == 9);
  CHECK(report.all_pass);
  for (const CmOrderResult& order : report.orders) {
    INFO("order ", order.order);
    CHECK(order.pass);
    CHECK(order.worst >= -1e-10);
  }
  // Order 0 is just positivity; exp(-s) at the top of the grid.
  CHECK(report.orders[0].worst == doctest::Approx(std::exp(-1e3 * 1.0)));
}

TEST_CASE("cm proxy isolates the failing order of s^2") {
  // f(s) = s^2 is increasing (order 1 fails: f(s) - f(s+h) < 0) yet convex
  // (order 2 passes: the second difference is exactly 2 h^2 > 0).
  const std::vector<double> grid = geometric_grid(1.0, 10.0, 64);
  const CmProxyReport report =
      cm_proxy([](double s) { return s * s; }, grid, 2);
  REQUIRE(report.orders.size() == 3);
  CHECK(report.orders[0].pass);
  CHECK_FALSE(report.orders[1].pass);
  // At s = 1 the first difference is -(2 s h + h^2) with h = 0.1.
  CHECK(report.orders[1].worst <= -(2.0 * 10.0 * 1.0 + 1.0));
  CHECK(report.orders[2].pass);
  CHECK(report.orders[2].worst > 0.0);
  CHECK_FALSE(report.all_pass);
}

TEST_CASE("cm proxy rejects an oscillating function") {
  const std::vector<double> grid = geometric_grid(1e-3, 1e3, 64);
  const CmProxyReport report =
      cm_proxy([](double s) { return 2.0 + std::sin(s); }, grid, 4);
  CHECK_FALSE(report.all_pass);
  CHECK_FALSE(report.orders[1].pass);
}

TEST_CASE("cm proxy validates its grid and order range") {
  const std::vector<double> small = geometric_grid(1e-3, 1e3, 32);
  CHECK_THROWS_AS(cm_proxy([](double) { return 1.0; }, small, 2), DomainError);
  const std::vector<double> grid = geometric_grid(1e-3, 1e3, 64);
  CHECK_THROWS_AS(cm_proxy([](double) { return 1.0; }, grid, 9), DomainError);
  CHECK_THROWS_AS(cm_proxy([](double) { return 1.0; }, grid, -1), DomainError);
}

TEST_CASE("geometric grid is log-spaced and validated") {
  const std::vector<double> grid = geometric_grid(1.0, 100.0, 3);
  REQUIRE(grid.size() == 3);
  CHECK(grid[0] == doctest::Approx(1.0));
  CHECK(grid[1] == doctest::Approx(10.0));
  CHECK(grid[2] == doctest::Approx(100.0));

  CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 4), DomainError);
  CHECK_THROWS_AS(geometric_grid(2.0, 1.0, 4), DomainError);
  CHECK_THROWS_AS(geometric_grid(1.0, 2.0, 1), DomainError);
}

}  // namespace
