#include "polyinv/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "polyinv/psi.hpp"
#include "polyinv/solver.hpp"

namespace polyinv {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Relative outward rounding of the polygamma brackets; a few dozen ulps,
// enough to absorb the rounding of the closed-form evaluations.
constexpr double kPadPolygamma = 1e-14;

void require_positive_finite(double x, const char* fn) {
  if (std::isnan(x)) throw std::domain_error(std::string(fn) + ": NaN argument");
  if (std::isinf(x)) throw std::domain_error(std::string(fn) + ": infinite argument");
  if (x <= 0.0) throw std::domain_error(std::string(fn) + ": requires a positive argument");
}

void require_order(int n, const char* fn) {
  if (n < 1 || n > 30)
    throw std::invalid_argument(std::string(fn) + ": order outside [1, 30]");
}

// log(1 - e^{-v}) for v > 0.
double log1mexp(double v) {
  return (v > kLn2) ? std::log1p(-std::exp(-v)) : std::log(-std::expm1(-v));
}

// One side of the Eq1 enclosure: [ n! / D ]^{1/(n+1)} with
// D = x - (x^{-1/n} + c)^{-n} = x (1 - (1 + c x^{1/n})^{-n}).
double eq1_bound(int n, double x, double c) {
  const double u = double(n) * std::log1p(c * std::exp(std::log(x) / double(n)));
  const double log_d = std::log(x) + log1mexp(u);
  return std::exp((detail::log_factorial(n) - log_d) / (n + 1.0));
}

}  // namespace

namespace detail {

double log_power_gap(int n, double a) {
  // a^{-n} - (a+1)^{-n} = a^{-n} (1 - ((a+1)/a)^{-n})
  const double v = double(n) * std::log1p(1.0 / a);
  return -double(n) * std::log(a) + log1mexp(v);
}

}  // namespace detail

BoundConstants bound_constants(int n) {
  require_order(n, "bound_constants");
  const double alpha = std::exp(-detail::log_factorial(n - 1) / double(n));
  const double beta =
      std::exp(-(detail::log_factorial(n) + std::log(zeta_int(n + 1))) / double(n));
  return {alpha, beta};
}

Bracket inv_digamma_bounds(double y) {
  if (std::isnan(y) || std::isinf(y))
    throw std::domain_error("inv_digamma_bounds: requires finite y");

  // Stable log(1 + e^{-y}) on both tails.
  const double w = (y >= 0.0) ? std::log1p(std::exp(-y)) : (-y + std::log1p(std::exp(y)));
  double lo = 1.0 / w;
  double hi = (y > 709.0) ? std::numeric_limits<double>::infinity() : std::exp(y) + 0.5;

  // Beyond exp overflow the inverse itself is not a double; keep the
  // enclosure honest with a clamped finite lower endpoint.
  if (std::isinf(lo)) lo = std::numeric_limits<double>::max();

  // Outward rounding scaled to the digamma evaluation-error contract
  // (1e-13 * max(1,|y|)); the analytic width e^{-y}/12 drops below one ulp
  // of e^y once y exceeds ~17, so without this the endpoints collide. The
  // cap keeps the pad meaningless-but-harmless for |y| beyond any
  // representable inverse (the natural slack dominates there anyway).
  const double pad = std::min(1e-12 * std::max(1.0, std::abs(y)), 1e-6);
  lo *= (1.0 - pad);
  if (std::isfinite(hi)) hi *= (1.0 + pad);
  return {lo, hi, BracketSource::Eq17};
}

Bracket inv_polygamma_bounds(int n, double x) {
  require_order(n, "inv_polygamma_bounds");
  require_positive_finite(x, "inv_polygamma_bounds");

  // T = ((n-1)!/x)^{1/n}; lower bound is the k = 0 mean-value point at t = T.
  const double log_t = (detail::log_factorial(n - 1) - std::log(x)) / double(n);
  const double t = std::exp(log_t);
  const double lo =
      std::exp(-(detail::log_power_gap(n, t) - std::log(double(n))) / (n + 1.0));
  const double hi = t + 0.5;
  return {lo * (1.0 - kPadPolygamma), hi * (1.0 + kPadPolygamma), BracketSource::Eq6};
}

Bracket inv_polygamma_bounds_zeta(int n, double x) {
  require_order(n, "inv_polygamma_bounds_zeta");
  require_positive_finite(x, "inv_polygamma_bounds_zeta");

  const BoundConstants c = bound_constants(n);
  const double lo = eq1_bound(n, x, c.alpha);
  const double hi = eq1_bound(n, x, c.beta);
  return {lo * (1.0 - kPadPolygamma), hi * (1.0 + kPadPolygamma), BracketSource::Eq1};
}

Bracket combined_bracket(int n, double x) {
  const Bracket a = inv_polygamma_bounds(n, x);
  const Bracket b = inv_polygamma_bounds_zeta(n, x);
  const Bracket r{std::max(a.lo, b.lo), std::min(a.hi, b.hi), BracketSource::Intersection};
  if (!(r.lo < r.hi))
    throw std::logic_error("combined_bracket: empty intersection (implementation bug)");
  return r;
}

double epsilon_k(int n, double t, long k) {
  require_order(n, "epsilon_k");
  require_positive_finite(t, "epsilon_k");
  if (k < 0) throw std::invalid_argument("epsilon_k: k >= 0 required");
  const double a = t + double(k);
  return std::exp(-(detail::log_power_gap(n, a) - std::log(double(n))) / (n + 1.0)) -
         double(k);
}

double phi_k(double x, long k) {
  require_positive_finite(x, "phi_k");
  if (k < 1) throw std::invalid_argument("phi_k: k >= 1 required");
  return 1.0 / std::log1p(1.0 / (x + double(k) - 1.0)) - double(k);
}

double xi_of(double x) {
  require_positive_finite(x, "xi_of");
  const InverseResult r = inv_digamma(std::log(x), SolverConfig{});
  if (!r.converged)
    throw std::runtime_error("xi_of: inverse digamma did not converge");
  return r.value - x;
}

double g_fn(double x) {
  require_positive_finite(x, "g_fn");
  const double p1 = polygamma(1, x);
  return polygamma(2, x) + p1 * p1;
}

double alpha_fn(double t) {
  if (std::isnan(t) || t < 0.0) throw std::domain_error("alpha_fn: requires t >= 0");
  return 2.0 * t + (t - 2.0) * std::expm1(t);
}

double generalized_mean(double p, double a, double b) {
  require_positive_finite(a, "generalized_mean");
  require_positive_finite(b, "generalized_mean");
  if (a == b) throw std::domain_error("generalized_mean: requires a != b");
  if (p == 0.0 || p == 1.0)
    throw std::domain_error("generalized_mean: p in {0, 1} not supported");
  if (std::isnan(p) || std::isinf(p))
    throw std::domain_error("generalized_mean: non-finite p");

  // (a^p - b^p) / (p (a-b)) = b^p expm1(p log(a/b)) / (p (a-b))
  const double log_ratio = std::log1p((a - b) / b);
  const double inner =
      std::pow(b, p) * std::expm1(p * log_ratio) / (p * (a - b));
  if (!std::isfinite(inner) || inner <= 0.0)
    throw std::domain_error("generalized_mean: value not representable");
  return std::pow(inner, 1.0 / (p - 1.0));
}

}  // namespace polyinv
