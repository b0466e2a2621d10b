#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polyinv/grid.hpp"
#include "polyinv/psi.hpp"

using namespace polyinv;

namespace {

std::vector<double> log_grid(double a, double b, long n) {
  return GridSpec{a, b, n, GridScale::Log}.values();
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("digamma at classic points") {
  // psi(n+1) = -euler_gamma + H_n with n = 1, and psi(1) = -euler_gamma
  CHECK(digamma(2.0) == doctest::Approx(0.4227843350984671).epsilon(1e-14));
  CHECK(digamma(1.0) == doctest::Approx(-0.5772156649015329).epsilon(1e-14));
  CHECK(digamma(0.5) == doctest::Approx(-1.9635100260214235).epsilon(1e-14));
}

TEST_CASE("digamma value cross-checked against the series oracle") {
  // oracle estimates psi(x+1); shift the fast path with psi(x+1) = psi(x) + 1/x
  for (double x : {0.5, 1.0, 5.0}) {
    const SeriesEstimate est = digamma_series_oracle(x, 1000000);
    const double fast = digamma(x) + 1.0 / x;
    CHECK(std::abs(est.value - fast) <= 2e-6);
    CHECK(std::abs(est.value - fast) <= est.error_bound + 1e-12);
  }
  // direct evaluation of psi(0.5) from the oracle at x = -0.5
  const SeriesEstimate half = digamma_series_oracle(-0.5, 1000000);
  CHECK(std::abs(half.value - (-1.9635100260214235)) <= half.error_bound + 1e-12);
}

TEST_CASE("digamma domain errors") {
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(digamma(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(digamma(std::numeric_limits<double>::infinity()), std::domain_error);
  // denormal argument: -1/x is not representable
  CHECK_THROWS_AS(digamma(std::numeric_limits<double>::denorm_min()), std::domain_error);
  CHECK(std::isfinite(digamma(1e-300)));
}

TEST_CASE("digamma recurrence psi(x+1) - psi(x) = 1/x") {
  for (double x : log_grid(0.01, 50.0, 200)) {
    const double lhs = digamma(x + 1.0) - digamma(x);
    CHECK(std::abs(lhs - 1.0 / x) <=
          1e-13 * std::max({1.0, std::abs(digamma(x)), std::abs(digamma(x + 1.0))}));
  }
}

TEST_CASE("digamma strictly increasing on a grid") {
  double prev = digamma(0.01);
  for (double x : log_grid(0.011, 1e4, 300)) {
    const double cur = digamma(x);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("polygamma at x = 1 gives n! zeta(n+1) with alternating sign") {
  CHECK(polygamma(1, 1.0) == doctest::Approx(1.6449340668482264).epsilon(1e-13));
  CHECK(polygamma(2, 1.0) == doctest::Approx(-2.4041138063191886).epsilon(1e-13));
  // recurrence example: psi'(2) = psi'(1) - 1
  CHECK(polygamma(1, 2.0) ==
        doctest::Approx(polygamma(1, 1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("polygamma sign and argument validation") {
  for (int n = 1; n <= 30; ++n) {
    const double v = polygamma(n, 2.5);
    CHECK(((n % 2 == 1) ? v > 0.0 : v < 0.0));
    CHECK(polygamma_positive(n, 2.5) == std::abs(v));
  }
  CHECK_THROWS_AS(polygamma(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(polygamma(31, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(polygamma(1, 0.0), std::domain_error);
  CHECK_THROWS_AS(polygamma(1, -2.0), std::domain_error);
  CHECK_THROWS_AS(polygamma(1, std::nan("")), std::domain_error);
  // value far beyond double range
  CHECK_THROWS_AS(polygamma(30, 1e-12), std::domain_error);
}

TEST_CASE("polygamma recurrence against (-1)^n n!/x^(n+1)") {
  for (int n : {1, 2, 3, 5, 10, 20, 30}) {
    const double nf = detail::factorial(n);
    for (double x : log_grid(0.01, 50.0, 120)) {
      const double lhs = polygamma(n, x + 1.0) - polygamma(n, x);
      const double rhs = ((n % 2 == 0) ? 1.0 : -1.0) * nf * std::pow(x, -(n + 1.0));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
  }
}

TEST_CASE("positive polygamma map strictly decreasing") {
  for (int n : {1, 3, 10, 30}) {
    double prev = polygamma_positive(n, 0.05);
    for (double x : log_grid(0.06, 1e3, 150)) {
      const double cur = polygamma_positive(n, x);
      CHECK(cur < prev);
      CHECK(cur > 0.0);
      prev = cur;
    }
  }
}

TEST_CASE("fast polygamma agrees with the series oracle within stated bounds") {
  for (int n = 1; n <= 10; ++n) {
    for (double x : log_grid(1e-2, 1e3, 200)) {
      const SeriesEstimate est = polygamma_series_oracle(n, x, 4000);
      const double fast = polygamma(n, x);
      const double budget = est.error_bound + 1e-12 * std::abs(fast);
      CHECK(std::abs(est.value - fast) <= budget);
    }
  }
}

TEST_CASE("asymptotic regime: x psi'(x) -> 1") {
  CHECK(std::abs(1e4 * polygamma(1, 1e4) - 1.0) <= 1e-3);
}

TEST_CASE("digamma_series_oracle pinned values") {
  // x = 0: every bracket is zero, no tail correction
  CHECK(digamma_series_oracle(0.0, 1).value == -euler_gamma);
  CHECK(digamma_series_oracle(0.0, 1).error_bound == 0.0);
  // x = 1, 10^6 terms: psi(2) = 1 - euler_gamma
  const SeriesEstimate est = digamma_series_oracle(1.0, 1000000);
  CHECK(std::abs(est.value - 0.4227843350984671) <= 1e-6);
  CHECK(std::abs(est.value - 0.4227843350984671) <= est.error_bound + 1e-12);
  CHECK_THROWS_AS(digamma_series_oracle(-1.0, 10), std::domain_error);
  CHECK_THROWS_AS(digamma_series_oracle(1.0, 0), std::invalid_argument);
}

TEST_CASE("polygamma_series_oracle pinned values") {
  const SeriesEstimate e1 = polygamma_series_oracle(1, 1.0, 10000);
  CHECK(std::abs(e1.value - 1.6449340668482264) <= 1e-8);
  const SeriesEstimate e3 = polygamma_series_oracle(3, 1.0, 100);
  CHECK(std::abs(e3.value - 6.493939402266829) <= 1e-8);
  CHECK(std::abs(e3.value - 6.493939402266829) <= e3.error_bound);

  for (int n : {1, 2, 5, 17, 30}) {
    for (double x : {0.25, 1.0, 9.0}) {
      const double v = polygamma_series_oracle(n, x, 50).value;
      CHECK(((n % 2 == 1) ? v > 0.0 : v < 0.0));
    }
  }
  CHECK_THROWS_AS(polygamma_series_oracle(1, -1.0, 10), std::domain_error);
  CHECK_THROWS_AS(polygamma_series_oracle(0, 1.0, 10), std::invalid_argument);
}

TEST_CASE("zeta_int matches closed forms and the reference table") {
  CHECK(zeta_int(2) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
  CHECK(zeta_int(2) == doctest::Approx(1.6449340668482264).epsilon(1e-13));
  CHECK(zeta_int(4) == doctest::Approx(kPi * kPi * kPi * kPi / 90.0).epsilon(1e-13));
  CHECK(zeta_int(4) == doctest::Approx(1.0823232337111382).epsilon(1e-13));
  CHECK(zeta_int(31) > 1.0);
  CHECK(zeta_int(31) < 1.0 + 1e-9);
  for (const auto& [m, ref] : zeta_table())
    CHECK(std::abs(zeta_int(m) - ref) <= 1e-14 * ref);
  CHECK_THROWS_AS(zeta_int(1), std::invalid_argument);
  CHECK_THROWS_AS(zeta_int(32), std::invalid_argument);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0.0);
  CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(harmonic(-1), std::invalid_argument);
  CHECK_THROWS_AS(harmonic(1000001), std::invalid_argument);
  // psi(n+1) = -euler_gamma + H_n
  for (long n = 0; n <= 50; ++n)
    CHECK(std::abs(digamma(double(n) + 1.0) + euler_gamma - harmonic(n)) <= 1e-12);
}
