#include "polyinv/psi.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace polyinv {

namespace {

// Even Bernoulli numbers B2..B14.
constexpr double kBernoulli[7] = {
    1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,
};

// B_{2k}/(2k) for the digamma expansion, k = 1..7.
constexpr double kDigammaCoef[7] = {
    1.0 / 12.0,  -1.0 / 120.0,     1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
};

// |B16|, the first omitted Bernoulli number; controls truncation bounds.
constexpr double kB16Abs = 3617.0 / 510.0;

void require_positive_finite(double x, const char* fn) {
  if (std::isnan(x)) throw std::domain_error(std::string(fn) + ": NaN argument");
  if (std::isinf(x)) throw std::domain_error(std::string(fn) + ": infinite argument");
  if (x <= 0.0) throw std::domain_error(std::string(fn) + ": requires x > 0");
}

void require_order(int n, int lo, int hi, const char* fn) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(fn) + ": order " + std::to_string(n) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Smallest shift target X such that the first omitted term of the order-n
// asymptotic series, |B16| binom(n+15,16) X^-16 relative to the leading
// term, is below 1e-17. For n = 0 (digamma) the classic X >= 10 suffices.
double shift_threshold(int n) {
  static const std::array<double, 32> table = [] {
    std::array<double, 32> t{};
    t[0] = 10.0;
    for (int m = 1; m <= 31; ++m) {
      double log_binom = detail::log_factorial(m + 15) - detail::log_factorial(16) -
                         detail::log_factorial(m - 1);
      double x = std::exp((std::log(kB16Abs) + log_binom + 17.0 * std::log(10.0)) / 16.0);
      t[m] = std::max(10.0, x);
    }
    return t;
  }();
  return table[n];
}

}  // namespace

namespace detail {

double factorial(int n) {
  static const std::array<double, 32> table = [] {
    std::array<double, 32> t{};
    t[0] = 1.0;
    for (int i = 1; i <= 31; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table[n];
}

double log_factorial(int n) {
  static const std::array<double, 49> table = [] {
    std::array<double, 49> t{};
    t[0] = 0.0;
    for (int i = 1; i <= 31; ++i) t[i] = std::log(factorial(i));
    for (int i = 32; i <= 48; ++i) t[i] = t[i - 1] + std::log(double(i));
    return t;
  }();
  return table[n];
}

double polygamma_core(int n, double x) {
  require_positive_finite(x, "polygamma");
  // The value is ~ n!/x^(n+1) near zero; refuse arguments whose result
  // cannot be represented rather than overflow silently.
  if (log_factorial(n) - (n + 1.0) * std::log(x) > 708.0)
    throw std::domain_error("polygamma: value exceeds double range");

  const double nf = factorial(n);
  double acc = 0.0;
  const double xmin = shift_threshold(n);
  while (x < xmin) {
    acc += nf * std::pow(x, -(n + 1.0));
    x += 1.0;
  }

  // (-1)^(n-1) psi^(n)(X) = (n-1)!/X^n [1 + n/(2X)
  //                          + sum_{k=1..7} B_{2k} binom(n+2k-1,2k) X^-2k]
  const double z = 1.0 / (x * x);
  double corr = 1.0 + n / (2.0 * x);
  double binom = 0.5 * n * (n + 1.0);  // binom(n+1, 2)
  double zk = z;
  for (int k = 1; k <= 7; ++k) {
    corr += kBernoulli[k - 1] * binom * zk;
    binom *= (n + 2.0 * k) * (n + 2.0 * k + 1.0) / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    zk *= z;
  }
  return acc + factorial(n - 1) * std::pow(x, -double(n)) * corr;
}

}  // namespace detail

double digamma(double x) {
  require_positive_finite(x, "digamma");
  if (!std::isfinite(1.0 / x))
    throw std::domain_error("digamma: value exceeds double range");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(X) = ln X - 1/(2X) - sum_{k=1..7} B_{2k}/(2k X^2k), X >= 10.
  const double z = 1.0 / (x * x);
  double series = kDigammaCoef[6];
  for (int k = 5; k >= 0; --k) series = kDigammaCoef[k] + z * series;
  return acc + std::log(x) - 0.5 / x - z * series;
}

double polygamma(int n, double x) {
  require_order(n, 1, 30, "polygamma");
  const double pos = detail::polygamma_core(n, x);
  return (n % 2 == 1) ? pos : -pos;
}

double polygamma_positive(int n, double x) {
  require_order(n, 1, 30, "polygamma");
  return detail::polygamma_core(n, x);
}

double harmonic(long n) {
  if (n < 0 || n > 1000000)
    throw std::invalid_argument("harmonic: n outside [0, 10^6]");
  double acc = 0.0;
  for (long k = n; k >= 1; --k) acc += 1.0 / double(k);
  return acc;
}

double zeta_int(int m) {
  require_order(m, 2, 31, "zeta_int");
  static const std::array<double, 32> cache = [] {
    std::array<double, 32> z{};
    for (int m2 = 2; m2 <= 31; ++m2) {
      const int n = m2 - 1;
      // Terms needed so the midpoint-rule tail error stays below ~1e-15
      // relative: (n+1)/(24 K^(n+2)) <= 5e-15.
      long terms = std::lround(std::ceil(std::pow((n + 1.0) * 1e14, 1.0 / (n + 2.0))));
      if (terms < 64) terms = 64;
      // zeta(m) = (-1)^m psi^(m-1)(1) / (m-1)!.
      const double signed_value = polygamma_series_oracle(n, 1.0, terms).value;
      z[m2] = ((m2 % 2 == 0) ? signed_value : -signed_value) / detail::factorial(m2 - 1);
    }
    return z;
  }();
  return cache[m];
}

const std::map<int, double>& zeta_table() {
  static const std::map<int, double> table = {
      {2, 1.6449340668482264365},  {3, 1.2020569031595942854},
      {4, 1.0823232337111381915},  {5, 1.0369277551433699263},
      {6, 1.0173430619844491397},  {7, 1.0083492773819228268},
      {8, 1.0040773561979443394},  {9, 1.0020083928260822144},
      {10, 1.0009945751278180853}, {15, 1.0000305882363070205},
      {20, 1.0000009539620338728}, {25, 1.0000000298035035147},
      {31, 1.0000000004656629065},
  };
  return table;
}

SeriesEstimate digamma_series_oracle(double x, long terms) {
  if (std::isnan(x) || std::isinf(x))
    throw std::domain_error("digamma_series_oracle: non-finite argument");
  if (x <= -1.0) throw std::domain_error("digamma_series_oracle: requires x > -1");
  if (terms < 1) throw std::invalid_argument("digamma_series_oracle: terms >= 1 required");

  // sum_{k=1..K} [1/k - 1/(k+x)] = sum_{k=1..K} x/(k(k+x)), smallest terms first.
  double s = 0.0;
  for (long k = terms; k >= 1; --k) s += x / (double(k) * (double(k) + x));
  const double tail = std::log1p(x / (double(terms) + 0.5));
  const double bound = std::abs(x) / (double(terms) * double(terms));
  return {-euler_gamma + s + tail, bound};
}

SeriesEstimate polygamma_series_oracle(int n, double x, long terms) {
  require_order(n, 1, 30, "polygamma_series_oracle");
  require_positive_finite(x, "polygamma_series_oracle");
  if (terms < 1) throw std::invalid_argument("polygamma_series_oracle: terms >= 1 required");
  if (detail::log_factorial(n) - (n + 1.0) * std::log(x) > 708.0)
    throw std::domain_error("polygamma_series_oracle: value exceeds double range");

  double s = 0.0;
  for (long k = terms - 1; k >= 0; --k) s += std::pow(x + double(k), -(n + 1.0));
  const double tail = std::pow(x + double(terms) - 0.5, -double(n)) / double(n);
  const double nf = detail::factorial(n);
  const double positive = nf * (s + tail);
  const double bound = nf * std::pow(x + double(terms), -(n + 1.0));
  return {(n % 2 == 1) ? positive : -positive, bound};
}

}  // namespace polyinv
