#ifndef POLYINV_BOUNDS_HPP
#define POLYINV_BOUNDS_HPP

// Closed-form two-sided brackets for the inverses of the digamma and
// polygamma functions, plus the auxiliary functions (epsilon, phi, xi, g,
// alpha, S_p) whose monotonicity and limits certify the brackets.
//
// Two bracket families exist for the inverse polygamma map:
//   - Eq6: lower [ (1/n)(x/(n-1)! - (((n-1)!/x)^{1/n} + 1)^{-n}) ]^{-1/(n+1)},
//          upper ((n-1)!/x)^{1/n} + 1/2;
//   - Eq1: [ n! / (x - (x^{-1/n} + c)^{-n}) ]^{1/(n+1)} with
//          c = alpha = ((n-1)!)^{-1/n} for the lower and
//          c = beta  = (n! zeta(n+1))^{-1/n} for the upper.
// The two lower bounds coincide algebraically; the uppers trade tightness
// (Eq6 wins for small x, Eq1 for large x), so the solver intersects them.
//
// For the inverse digamma:
//   Eq17: 1/log(1+e^{-y}) < inv_psi(y) < e^y + 1/2.
//
// All bound values are evaluated through log1p/expm1 rewrites so they stay
// finite and accurate across the full double range, and are then rounded
// outward by a small relative amount so that lo < hi and the containment
// of the true inverse survive floating-point rounding (the raw endpoints
// can collide in binary64 once the analytic width drops below one ulp).

#include <cmath>

namespace polyinv {

enum class BracketSource { Eq17, Eq6, Eq1, Intersection };

// A certified enclosure lo < inverse-value < hi. lo > 0 always; hi may be
// +infinity only for inv_digamma_bounds at y > 709 (exp overflow).
struct Bracket {
  double lo;
  double hi;
  BracketSource source;

  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

// alpha = ((n-1)!)^{-1/n}, beta = (n! zeta(n+1))^{-1/n}; beta < alpha.
struct BoundConstants {
  double alpha;
  double beta;
};
BoundConstants bound_constants(int n);

// Enclosure of inv_psi(y) for finite y. For y > 709 the upper endpoint
// saturates to +infinity; for y beyond ~709.7 the lower endpoint clamps to
// the largest finite double (the inverse itself exceeds double range).
Bracket inv_digamma_bounds(double y);

// Enclosure of the inverse of t -> (-1)^(n-1) psi^(n)(t) at x > 0,
// 1 <= n <= 30, from the half-shift form (source Eq6).
Bracket inv_polygamma_bounds(int n, double x);

// Same inverse, from the zeta-weighted form (source Eq1).
Bracket inv_polygamma_bounds_zeta(int n, double x);

// Intersection of the two polygamma brackets; throws std::logic_error if
// the intersection is empty (that would be an implementation bug, both
// brackets provably contain the same point).
Bracket combined_bracket(int n, double x);

// Mean-value intermediate point of the difference (k+t)^{-n} - (k+t+1)^{-n}:
//   epsilon(k) = [ (1/n)((k+t)^{-n} - (k+t+1)^{-n}) ]^{-1/(n+1)} - k,
// strictly inside (t, t+1), strictly increasing in k, -> t + 1/2.
double epsilon_k(int n, double t, long k);

// Mean-value intermediate point of log(x+k) - log(x+k-1):
//   phi(k) = 1/log(1 + 1/(x+k-1)) - k,  k >= 1,
// strictly inside (x-1, x), strictly increasing in k, -> x - 1/2.
double phi_k(double x, long k);

// The gap xi(x) in log x = psi(x + xi(x)); computed as inv_psi(log x) - x.
// Lies in (0, 1), strictly increasing, -> 1/2.
double xi_of(double x);

// g(x) = psi''(x) + psi'(x)^2; positive and decreasing to 0.
double g_fn(double x);

// alpha(t) = t + 2 + (t-2) e^t, evaluated as 2t + (t-2) expm1(t) so the
// cancellation near 0 is benign; alpha(0) = alpha'(0) = 0, alpha > 0 for t > 0.
// Saturates to +infinity once e^t overflows (t > ~709).
double alpha_fn(double t);

// Generalized mean S_p(a,b) = [ (a^p - b^p) / (p(a-b)) ]^{1/(p-1)} for
// a, b > 0, a != b, p outside {0, 1}; strictly increasing in p.
// S_2 = (a+b)/2 and S_{-1} = sqrt(ab).
double generalized_mean(double p, double a, double b);

namespace detail {
// log(a^{-n} - (a+1)^{-n}) for a > 0, evaluated without cancellation or
// underflow: -n log a + log(-expm1(-n log1p(1/a))).
double log_power_gap(int n, double a);
}  // namespace detail

}  // namespace polyinv

#endif  // POLYINV_BOUNDS_HPP
