#include "polyinv/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polyinv/psi.hpp"

namespace polyinv {

namespace {

double ulp_scale(double v) {
  return std::numeric_limits<double>::epsilon() *
         std::max(std::abs(v), std::numeric_limits<double>::min());
}

void validate(const SolverConfig& cfg) {
  if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("SolverConfig: rel_tol > 0 required");
  if (cfg.max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter >= 1 required");
}

struct MonotoneProblem {
  std::function<double(double)> g;   // strictly increasing, g(root) = 0
  std::function<double(double)> dg;  // derivative, positive
  double tol;                        // absolute residual tolerance
  bool log_midpoint;                 // bisect in log space (positive spans)
};

double midpoint(double a, double b, bool log_space) {
  if (log_space) return std::exp(0.5 * (std::log(a) + std::log(b)));
  return a + 0.5 * (b - a);
}

// Safeguarded Newton confined to [br.lo, br.hi]. Every evaluation updates
// the bracket from the residual sign, so the enclosure only shrinks; a
// Newton step that exits it or fails to reduce |g| is followed by a
// bisection step. Once the residual meets the tolerance, a short pinch
// phase probes value +/- 2 ulp to drive the bracket width down to the
// 4-ulp convergence target (or stops when evaluation noise says it cannot).
InverseResult solve(const MonotoneProblem& p, const Bracket& br, const SolverConfig& cfg) {
  double a = br.lo;
  double b = br.hi;

  // Shrink only with points inside the current enclosure.
  auto note = [&](double xx, double gxx) {
    if (xx < a || xx > b) return;
    if (gxx < 0.0)
      a = xx;
    else if (gxx > 0.0)
      b = xx;
  };

  double x = midpoint(a, b, p.log_midpoint);
  if (!(a < x && x < b)) x = a;
  double gx = p.g(x);
  int evals = 1;
  note(x, gx);

  bool force_bisect = false;
  while (evals < cfg.max_iter && std::abs(gx) > p.tol) {
    double xn = std::numeric_limits<double>::quiet_NaN();
    bool was_newton = false;
    if (!force_bisect) {
      const double d = p.dg(x);
      if (std::isfinite(d) && d > 0.0) {
        const double cand = x - gx / d;
        if (std::isfinite(cand) && a < cand && cand < b && cand != x) {
          xn = cand;
          was_newton = true;
        }
      }
    }
    if (!std::isfinite(xn)) {
      if (!cfg.bisection_fallback) break;
      xn = midpoint(a, b, p.log_midpoint);
      if (!(a < xn && xn < b)) break;  // enclosure exhausted at double resolution
    }
    const double g_old = std::abs(gx);
    x = xn;
    gx = p.g(x);
    ++evals;
    note(x, gx);
    force_bisect = was_newton && std::abs(gx) >= g_old;
  }

  if (std::abs(gx) <= p.tol) {
    for (int round = 0; round < 2 && (b - a) > 4.0 * ulp_scale(x); ++round) {
      const double uls = ulp_scale(x);
      for (const double probe : {x - 2.0 * uls, x + 2.0 * uls}) {
        if (!(a < probe && probe < b) || probe == x) continue;
        const double gp = p.g(probe);
        ++evals;
        note(probe, gp);
        if (std::abs(gp) < std::abs(gx)) {
          x = probe;
          gx = gp;
        }
        if (x < a || x > b) {  // probe cut the old iterate off; follow it
          x = probe;
          gx = gp;
        }
      }
    }
  }

  InverseResult res;
  res.value = x;
  res.iterations = evals;
  res.residual = gx;
  res.bracket = {a, b, br.source};
  res.converged = std::abs(gx) <= p.tol;
  return res;
}

}  // namespace

InverseResult inv_digamma(double y, const SolverConfig& cfg) {
  validate(cfg);
  if (std::isnan(y) || std::isinf(y))
    throw std::domain_error("inv_digamma: requires finite y");
  if (y > 709.5)
    throw std::domain_error("inv_digamma: inverse exceeds double range");

  Bracket br = inv_digamma_bounds(y);
  if (!std::isfinite(br.hi)) {
    // Saturated upper endpoint (y > 709). The root sits within a first
    // Newton expansion of the lower bound, e^y + 1/2 - e^{-y}/24; a few
    // pads above the (already outward-rounded) lower endpoint covers it.
    br.hi = br.lo * (1.0 + 4e-12 * std::max(1.0, y));
  }

  MonotoneProblem p{
      [y](double x) { return digamma(x) - y; },
      [](double x) { return polygamma(1, x); },
      cfg.rel_tol * std::max(1.0, std::abs(y)),
      /*log_midpoint=*/false,
  };
  return solve(p, br, cfg);
}

InverseResult inv_polygamma(int n, double x, const SolverConfig& cfg) {
  validate(cfg);
  const Bracket br = combined_bracket(n, x);  // validates n and x

  MonotoneProblem p{
      [n, x](double t) { return x - polygamma_positive(n, t); },
      [n](double t) { return detail::polygamma_core(n + 1, t); },
      cfg.rel_tol * x,
      /*log_midpoint=*/true,
  };
  InverseResult res = solve(p, br, cfg);
  res.residual = -res.residual;  // report forward(value) - x
  return res;
}

double bisection_oracle(const std::function<double(double)>& forward, double y,
                        const Bracket& bracket, double tol) {
  double a = bracket.lo;
  double b = bracket.hi;
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("bisection_oracle: invalid bracket");
  double fa = forward(a) - y;
  double fb = forward(b) - y;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0))
    throw std::invalid_argument("bisection_oracle: bracket does not straddle target");

  while (b - a > tol) {
    const double m = a + 0.5 * (b - a);
    if (!(a < m && m < b)) break;
    const double fm = forward(m) - y;
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  return a + 0.5 * (b - a);
}

}  // namespace polyinv
