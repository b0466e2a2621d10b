#ifndef POLYINV_SOLVER_HPP
#define POLYINV_SOLVER_HPP

// Inversion of psi and of t -> (-1)^(n-1) psi^(n)(t) by safeguarded Newton
// iteration started from, and confined to, the closed-form brackets of the
// bounds module. A Newton step that leaves the current bracket or fails to
// shrink the residual is replaced by a bisection step, so convergence is
// guaranteed for these strictly monotone maps.

#include <functional>

#include "polyinv/bounds.hpp"

namespace polyinv {

struct SolverConfig {
  double rel_tol = 1e-13;
  int max_iter = 60;
  bool bisection_fallback = true;
};

struct InverseResult {
  double value = 0.0;      // the root
  int iterations = 0;      // forward-map evaluations spent
  double residual = 0.0;   // forward(value) - target
  Bracket bracket{0.0, 0.0, BracketSource::Intersection};  // final enclosure
  bool converged = false;  // |residual| met the tolerance contract
};

// Solve psi(x) = y for finite y <= 709.5 (beyond that the root exceeds
// double range and a std::domain_error is thrown). On success
// |residual| <= rel_tol * max(1, |y|) and value lies in the Eq17 bracket.
InverseResult inv_digamma(double y, const SolverConfig& cfg = {});

// Solve (-1)^(n-1) psi^(n)(t) = x for x > 0, 1 <= n <= 30. On success
// |residual| <= rel_tol * x and value lies in the intersection bracket.
// Newton uses the exact derivative psi^(n+1).
InverseResult inv_polygamma(int n, double x, const SolverConfig& cfg = {});

// Pure bisection of a strictly monotone forward map to |hi - lo| <= tol;
// shares no logic with the Newton solver and serves as its independent
// oracle. Throws std::invalid_argument if the bracket does not straddle y.
double bisection_oracle(const std::function<double(double)>& forward, double y,
                        const Bracket& bracket, double tol);

}  // namespace polyinv

#endif  // POLYINV_SOLVER_HPP
