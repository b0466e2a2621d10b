#ifndef POLYINV_HARNESS_HPP
#define POLYINV_HARNESS_HPP

// Sweep runners behind the CLI: each one evaluates a named family of
// inequality / monotonicity / limit checks over a grid and returns a
// deterministic Report. Grid evaluation parallelizes over points
// (POLYINV_THREADS caps the workers, default all cores); workers share no
// mutable state and results are emitted in input order, so the output is
// identical to a single-threaded run.

#include <optional>
#include <string>
#include <vector>

#include "polyinv/grid.hpp"
#include "polyinv/report.hpp"

namespace polyinv {

inline constexpr const char* kToolVersion = "polyinv 1.0.0";

// Check ids accepted by run_verify:
//   eq17           psi(lo) < y < psi(hi) for the inverse-digamma bracket
//   eq6, eq1       F(hi) < x < F(lo) for the inverse-polygamma brackets,
//                  F(t) = (-1)^(n-1) psi^(n)(t)
//   lower-identity the two polygamma lower bounds agree to 1e-12 relative
//   eps-mono       epsilon(k) strictly increasing inside (t, t+1)
//   phi-mono       phi(k) strictly increasing inside (x-1, x)
//                  (consecutive gaps decay like 1/(12 k^2); past k ~ 3e4
//                  they sink below one ulp of the closed forms and the
//                  strict comparison reports honest resolution exhaustion)
//   g-pos          g(x) = psi'' + psi'^2 > 0
//   eq23-pos       psi'(x) - 1/x - 1/(2x^2) > 0
//   alpha-pos      alpha(t) > 0
//   eq22           residual of g(x) - g(x+1) = (2/x^2)(psi'(x) - 1/x - 1/(2x^2)),
//                  scaled by psi'(x)^2 (the identity's largest intermediate),
//                  <= 1e-12
//   sp-mono        S_{-(n+1)}(u, u+1) < S_{-n}(u, u+1)
const std::vector<std::string>& verify_check_ids();

struct VerifyOptions {
  std::optional<GridSpec> grid;  // per-check default when unset
  std::optional<int> n_lo;       // order range for order-swept checks
  std::optional<int> n_hi;
  double t = 1.0;  // fixed t for eps-mono
  double x = 1.0;  // fixed x for phi-mono
};

Report run_verify(const std::string& check_id, const VerifyOptions& opts = {});

// Remark-2.2 measurement: per (n, x) the two upper bounds against the
// solver's inverse (spot-checked against the bisection oracle), plus one
// "remark22-crossover" record per sign change of eq6_hi - eq1_hi in x.
struct CompareBoundsOptions {
  std::optional<GridSpec> grid;  // default log 1e-3..1e3, 200 points
  int n_lo = 1;
  int n_hi = 5;
};
Report run_compare_bounds(const CompareBoundsOptions& opts = {});

// Round-trip errors |forward(inverse(v)) - v|. Order 0 means the digamma
// map over a y grid (default linear -30..30, 1000 points, tolerance
// 1e-12 * max(1,|y|)); orders >= 1 sweep x (default log 1e-3..1e3, 200
// points, tolerance 1e-11 * x). A user grid applies to every order.
struct RoundtripOptions {
  std::optional<GridSpec> grid;
  int n_lo = 0;
  int n_hi = 5;
};
Report run_roundtrip(const RoundtripOptions& opts = {});

// Profile of xi(x) = inv_psi(log x) - x: range (0,1), strict increase, and
// central-difference xi' inside (1/(x psi'(x)) - 1, 1/(x psi'(x+1)) - 1)
// at interior points. Default grid log 1e-2..1e4, 200 points; past x ~ 1e5
// the per-step growth of xi sinks below the inverse-solve noise floor and
// the strict comparison reports honest resolution exhaustion.
struct XiProfileOptions {
  std::optional<GridSpec> grid;
};
Report run_xi_profile(const XiProfileOptions& opts = {});

// POLYINV_THREADS env var when set (>= 1), otherwise hardware concurrency.
int thread_budget();

}  // namespace polyinv

#endif  // POLYINV_HARNESS_HPP
