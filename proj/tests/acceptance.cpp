// Acceptance suite: runs every top-level criterion at its pinned tolerance
// and prints one pass/fail line each. Exit status is the number of failed
// criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "polyinv/bounds.hpp"
#include "polyinv/grid.hpp"
#include "polyinv/harness.hpp"
#include "polyinv/psi.hpp"
#include "polyinv/solver.hpp"

using namespace polyinv;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  (%s)\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

bool margins_positive(const Report& rep, double& min_margin) {
  bool ok = rep.all_hold();
  for (const auto& r : rep.records) {
    min_margin = std::min(min_margin, r.margin);
    if (!(r.margin > 0.0)) ok = false;
  }
  return ok;
}

// 1: the inverse-digamma bracket straddles psi strictly on both grids.
void criterion1() {
  Timer timer;
  double min_margin = 1e300;
  VerifyOptions narrow;
  narrow.grid = GridSpec{-30.0, 30.0, 1000, GridScale::Linear};
  const bool ok_narrow = margins_positive(run_verify("eq17", narrow), min_margin);
  VerifyOptions wide;
  wide.grid = GridSpec{-700.0, 700.0, 200, GridScale::Linear};
  const bool ok_wide = margins_positive(run_verify("eq17", wide), min_margin);
  const double secs = timer.seconds();
  report(1, ok_narrow && ok_wide && secs < 5.0,
         "eq17 strict on 1000+200 points, min margin " + fmt(min_margin) + ", " +
             fmt(secs) + " s");
}

// 2: both polygamma brackets hold strictly and their lower bounds coincide.
void criterion2() {
  Timer timer;
  double min_margin = 1e300;
  VerifyOptions opts;
  opts.grid = GridSpec{1e-3, 1e3, 200, GridScale::Log};
  opts.n_lo = 1;
  opts.n_hi = 10;
  const bool ok6 = margins_positive(run_verify("eq6", opts), min_margin);
  const bool ok1 = margins_positive(run_verify("eq1", opts), min_margin);

  bool identity = true;
  double worst_rel = 0.0;
  for (const auto& r : run_verify("lower-identity", opts).records) {
    worst_rel = std::max(worst_rel, *r.lhs);
    if (!r.holds) identity = false;
  }
  const double secs = timer.seconds();
  report(2, ok6 && ok1 && identity && secs < 30.0,
         "eq6/eq1 strict for n=1..10 x 200 pts, lower-bound mismatch <= " + fmt(worst_rel) +
             ", " + fmt(secs) + " s");
}

// 3: round-trip accuracy on the criterion-1 and criterion-2 grids.
void criterion3() {
  double worst_dig = 0.0, worst_poly = 0.0;
  bool ok = true;
  for (double y : GridSpec{-30.0, 30.0, 1000, GridScale::Linear}.values()) {
    const double err = std::abs(digamma(inv_digamma(y).value) - y);
    worst_dig = std::max(worst_dig, err / std::max(1.0, std::abs(y)));
    if (err > 1e-12 * std::max(1.0, std::abs(y))) ok = false;
  }
  for (int n = 1; n <= 10; ++n) {
    for (double x : GridSpec{1e-3, 1e3, 200, GridScale::Log}.values()) {
      const double err = std::abs(polygamma_positive(n, inv_polygamma(n, x).value) - x);
      worst_poly = std::max(worst_poly, err / x);
      if (err > 1e-11 * x) ok = false;
    }
  }
  report(3, ok, "max rel err: digamma " + fmt(worst_dig) + ", polygamma " + fmt(worst_poly));
}

// 4: known-point recovery to 1e-11 absolute.
void criterion4() {
  bool ok = true;
  double worst = 0.0;
  auto probe = [&](double got, double want) {
    worst = std::max(worst, std::abs(got - want));
    if (std::abs(got - want) > 1e-11) ok = false;
  };
  probe(inv_digamma(-euler_gamma).value, 1.0);
  probe(inv_digamma(1.0 - euler_gamma).value, 2.0);
  probe(inv_polygamma(1, 1.6449340668482264).value, 1.0);
  probe(inv_polygamma(2, 2.4041138063191886).value, 1.0);
  const double oracle_root = bisection_oracle([](double x) { return digamma(x); }, 0.0,
                                              Bracket{1.0, 2.0, BracketSource::Eq17}, 1e-14);
  probe(inv_digamma(0.0).value, oracle_root);
  report(4, ok, "worst absolute deviation " + fmt(worst));
}

// 5: monotonicity and limits of epsilon, phi and xi.
void criterion5() {
  bool ok = true;
  std::string detail;

  double prev = epsilon_k(1, 1.0, 0);
  for (long k = 1; k <= 1000; ++k) {
    const double cur = epsilon_k(1, 1.0, k);
    if (!(cur > prev)) ok = false;
    prev = cur;
  }
  const double eps_gap = std::abs(epsilon_k(1, 1.0, 1000) - 1.5);
  if (eps_gap > 2e-3) ok = false;
  detail += "eps(10^3) off by " + fmt(eps_gap);

  prev = phi_k(1.0, 1);
  for (long k = 2; k <= 1000; ++k) {
    const double cur = phi_k(1.0, k);
    if (!(cur > prev)) ok = false;
    prev = cur;
  }
  const double phi_gap = std::abs(phi_k(1.0, 1000) - 0.5);
  if (phi_gap > 2e-3) ok = false;
  detail += ", phi(10^3) off by " + fmt(phi_gap);

  double xi_prev = -1.0, xi_last = 0.0;
  for (double x : GridSpec{1e-2, 1e4, 200, GridScale::Log}.values()) {
    const double v = xi_of(x);
    if (!(v > 0.0 && v < 1.0 && v > xi_prev)) ok = false;
    xi_prev = v;
    xi_last = v;
  }
  if (!(xi_last > 0.4999 && xi_last < 0.5)) ok = false;
  detail += ", xi(10^4) = " + fmt(xi_last);
  report(5, ok, detail);
}

// 6: positivity suite and the g recurrence identity.
void criterion6() {
  bool ok = true;
  for (double x : GridSpec{1e-2, 50.0, 200, GridScale::Log}.values()) {
    if (!(g_fn(x) > 0.0)) ok = false;
    if (!(polygamma(1, x) - 1.0 / x - 1.0 / (2.0 * x * x) > 0.0)) ok = false;
  }
  for (double t : GridSpec{1e-6, 40.0, 200, GridScale::Log}.values())
    if (!(alpha_fn(t) > 0.0)) ok = false;

  double worst_resid = 0.0;
  VerifyOptions opts;
  for (const auto& r : run_verify("eq22", opts).records) {
    worst_resid = std::max(worst_resid, *r.lhs);
    if (!r.holds) ok = false;
  }
  for (int n = 1; n <= 10; ++n)
    for (double u : GridSpec{1e-2, 1e2, 50, GridScale::Log}.values())
      if (!(generalized_mean(-double(n + 1), u, u + 1.0) <
            generalized_mean(-double(n), u, u + 1.0)))
        ok = false;
  report(6, ok, "g, trigamma excess, alpha positive; scaled eq22 residual <= " + fmt(worst_resid));
}

// 7: tightness measurement with the hard domination assertion.
void criterion7() {
  CompareBoundsOptions opts;
  opts.n_lo = 1;
  opts.n_hi = 5;
  const Report rep = run_compare_bounds(opts);
  bool ok = rep.all_hold();
  std::string detail = "crossover x:";
  for (int n = 1; n <= 5; ++n) {
    const auto it = rep.metadata.find("crossover_n" + std::to_string(n));
    if (it == rep.metadata.end()) {
      ok = false;
      detail += " n" + std::to_string(n) + "=missing";
    } else {
      detail += " n" + std::to_string(n) + "=" + fmt(std::stod(it->second));
    }
  }
  report(7, ok, detail);
}

// 8: core accuracy against harmonic numbers, zeta and the series oracles.
void criterion8() {
  bool ok = true;
  for (long n = 0; n <= 50; ++n)
    if (std::abs(digamma(double(n) + 1.0) + euler_gamma - harmonic(n)) > 1e-12) ok = false;

  const double pi = 3.14159265358979323846;
  if (std::abs(zeta_int(2) - pi * pi / 6.0) > 1e-12) ok = false;
  if (std::abs(zeta_int(4) - pi * pi * pi * pi / 90.0) > 1e-12) ok = false;

  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    for (double x : GridSpec{1e-3, 1e3, 200, GridScale::Log}.values()) {
      const SeriesEstimate est = polygamma_series_oracle(n, x, 4000);
      const double fast = polygamma(n, x);
      const double budget = est.error_bound + 1e-12 * std::abs(fast);
      worst = std::max(worst, std::abs(est.value - fast) / budget);
      if (std::abs(est.value - fast) > budget) ok = false;
    }
  }
  report(8, ok, "oracle gap at most " + fmt(worst) + " of combined bound");
}

}  // namespace

int main() {
  Timer total;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%d of 8 criteria passed in %.1f s\n", 8 - g_failures, total.seconds());
  return g_failures;
}
