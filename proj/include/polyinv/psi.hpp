#ifndef POLYINV_PSI_HPP
#define POLYINV_PSI_HPP

#include <map>

// Evaluation kernels for the digamma function psi(x) = Gamma'(x)/Gamma(x),
// its derivatives psi^(n) (the polygamma functions), integer-argument zeta,
// and harmonic numbers.
//
// Fast paths shift the argument upward with the recurrence
//   psi^(n)(x+1) - psi^(n)(x) = (-1)^n n! / x^(n+1)
// and then use the Bernoulli asymptotic expansion (terms through B14).
// The slow series forms are kept as independent oracles with explicit,
// returned error bounds, so every fast path can be validated against a
// quantified ground truth.
//
// Error policy: domain violations (x <= 0, NaN, infinities) and order
// violations throw; no operation ever returns NaN.

namespace polyinv {

// Euler-Mascheroni constant, psi(1) = -euler_gamma.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243104;

// psi(x) for finite x > 0.
// Accuracy: |err| <= 1e-13 * max(1, |psi(x)|).
double digamma(double x);

// psi^(n)(x) for finite x > 0 and 1 <= n <= 30, with its natural sign:
// the result equals (-1)^(n-1) times a positive quantity.
// Accuracy: |err| <= 1e-12 * |psi^(n)(x)|.
// Throws std::domain_error when the value exceeds double range.
double polygamma(int n, double x);

// The positive strictly decreasing map t -> (-1)^(n-1) psi^(n)(t).
// Same contract as polygamma; this is the form the inverse brackets use.
double polygamma_positive(int n, double x);

// Harmonic number H_n = 1 + 1/2 + ... + 1/n, H_0 = 0, for 0 <= n <= 10^6.
// Summed smallest-term-first.
double harmonic(long n);

// zeta(m) for integer 2 <= m <= 31, computed from the polygamma series
// oracle at x = 1 via zeta(m) = (-1)^m psi^(m-1)(1) / (m-1)!.
// Accuracy: |err| <= 1e-13 relative. Values are cached after first use.
double zeta_int(int m);

// Hard-coded reference values of zeta(m) for selected m >= 2, used as an
// independent cross-check of zeta_int (agreement to 1e-14 relative).
const std::map<int, double>& zeta_table();

// A slow-series estimate together with a conservative bound on its error.
struct SeriesEstimate {
  double value;
  double error_bound;
};

// Series oracle for psi(x+1) on x > -1:
//   psi(x+1) = -euler_gamma + sum_{k>=1} [1/k - 1/(k+x)].
// Returns the partial sum over k = 1..terms plus the midpoint integral tail
// estimate log1p(x/(terms+1/2)). The reported bound |x|/terms^2 dominates
// the true truncation error. At x = 0 every bracket vanishes and the value
// is exactly -euler_gamma.
SeriesEstimate digamma_series_oracle(double x, long terms);

// Series oracle for psi^(n)(x), signed like polygamma:
//   (-1)^(n-1) psi^(n)(x) = n! sum_{k>=0} (x+k)^-(n+1).
// Partial sum over k = 0..terms-1 plus the midpoint integral tail
//   n! / (n (x+terms-1/2)^n).
// The reported bound n!/(x+terms)^(n+1) dominates the true error.
SeriesEstimate polygamma_series_oracle(int n, double x, long terms);

namespace detail {
// Positive map for internal orders 1 <= n <= 31; order 31 exists only so the
// inverse solver can differentiate an order-30 forward map.
double polygamma_core(int n, double x);
// n! as a double for 0 <= n <= 31.
double factorial(int n);
// log(n!) for 0 <= n <= 48. Table-driven: std::lgamma writes the signgam
// global and is not thread-safe.
double log_factorial(int n);
}  // namespace detail

}  // namespace polyinv

#endif  // POLYINV_PSI_HPP
