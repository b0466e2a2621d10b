// polyinv: evaluate digamma/polygamma functions, invert them inside
// certified closed-form brackets, and verify the underlying inequalities
// numerically over grids. Reports are CSV or JSON; the exit status is 0
// exactly when every checked predicate holds.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polyinv/bounds.hpp"
#include "polyinv/grid.hpp"
#include "polyinv/harness.hpp"
#include "polyinv/psi.hpp"
#include "polyinv/report.hpp"
#include "polyinv/solver.hpp"

namespace {

struct OrderRange {
  int lo = 1;
  int hi = 1;
};

// "--n 3" or "--n 1..10"
OrderRange parse_order_range(const std::string& text) {
  OrderRange r;
  const auto dots = text.find("..");
  try {
    std::size_t pos = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &pos);
      if (pos != text.size()) throw std::invalid_argument("");
    } else {
      r.lo = std::stoi(text.substr(0, dots), &pos);
      if (pos != dots) throw std::invalid_argument("");
      const std::string tail = text.substr(dots + 2);
      r.hi = std::stoi(tail, &pos);
      if (pos != tail.size()) throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected an order k or a range a..b, got '" + text + "'");
  }
  return r;
}

int emit(const polyinv::Report& rep, const std::string& out, const std::string& format) {
  polyinv::write_report(rep, out, format);
  if (!rep.all_hold()) {
    std::cerr << rep.failures.size() << " of " << rep.records.size()
              << " records failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse digamma/polygamma bounds, solver and verification harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(polyinv::kToolVersion));

  std::string check, grid_text, n_text, out = "-", format = "csv", fn_name;
  double t_fixed = 1.0, x_fixed = 1.0, x_value = 0.0;
  int eval_order = 1;

  auto* verify = app.add_subcommand("verify", "verify one inequality/monotonicity check over a grid");
  verify->add_option("--check", check, "check id (see --help-checks)")->required();
  verify->add_option("--grid", grid_text, "start:stop:points:linear|log (per-check default)");
  verify->add_option("--n", n_text, "order or order range a..b");
  verify->add_option("--t", t_fixed, "fixed t for eps-mono")->capture_default_str();
  verify->add_option("--x", x_fixed, "fixed x for phi-mono")->capture_default_str();
  verify->add_option("--out", out, "output path, '-' for stdout")->capture_default_str();
  verify->add_option("--format", format, "csv|json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  auto* compare = app.add_subcommand("compare-bounds", "measure which upper bound is tighter and where they cross");
  compare->add_option("--n", n_text, "order range a..b");
  compare->add_option("--grid", grid_text, "x grid");
  compare->add_option("--out", out, "output path, '-' for stdout")->capture_default_str();
  compare->add_option("--format", format, "csv|json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  auto* roundtrip = app.add_subcommand("roundtrip", "forward(inverse(v)) round-trip errors; order 0 = digamma");
  roundtrip->add_option("--n", n_text, "order range a..b (0 = digamma)");
  roundtrip->add_option("--grid", grid_text, "sweep grid applied to every order");
  roundtrip->add_option("--out", out, "output path, '-' for stdout")->capture_default_str();
  roundtrip->add_option("--format", format, "csv|json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  auto* xi = app.add_subcommand("xi-profile", "profile of xi(x) = inv_digamma(log x) - x");
  xi->add_option("--grid", grid_text, "x grid (start > 0)");
  xi->add_option("--out", out, "output path, '-' for stdout")->capture_default_str();
  xi->add_option("--format", format, "csv|json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  auto* eval = app.add_subcommand("eval", "single-point evaluation, 17 significant digits");
  eval->add_option("--fn", fn_name, "digamma|polygamma|inv-digamma|inv-polygamma")
      ->required()
      ->check(CLI::IsMember({"digamma", "polygamma", "inv-digamma", "inv-polygamma"}));
  eval->add_option("--n", eval_order, "polygamma order");
  eval->add_option("--x", x_value, "argument")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<polyinv::GridSpec> grid;
    if (!grid_text.empty()) grid = polyinv::GridSpec::parse(grid_text);

    if (verify->parsed()) {
      polyinv::VerifyOptions opts;
      opts.grid = grid;
      if (!n_text.empty()) {
        const OrderRange r = parse_order_range(n_text);
        opts.n_lo = r.lo;
        opts.n_hi = r.hi;
      }
      opts.t = t_fixed;
      opts.x = x_fixed;
      return emit(polyinv::run_verify(check, opts), out, format);
    }
    if (compare->parsed()) {
      polyinv::CompareBoundsOptions opts;
      opts.grid = grid;
      if (!n_text.empty()) {
        const OrderRange r = parse_order_range(n_text);
        opts.n_lo = r.lo;
        opts.n_hi = r.hi;
      }
      return emit(polyinv::run_compare_bounds(opts), out, format);
    }
    if (roundtrip->parsed()) {
      polyinv::RoundtripOptions opts;
      opts.grid = grid;
      if (!n_text.empty()) {
        const OrderRange r = parse_order_range(n_text);
        opts.n_lo = r.lo;
        opts.n_hi = r.hi;
      }
      return emit(polyinv::run_roundtrip(opts), out, format);
    }
    if (xi->parsed()) {
      polyinv::XiProfileOptions opts;
      opts.grid = grid;
      return emit(polyinv::run_xi_profile(opts), out, format);
    }
    if (eval->parsed()) {
      double value = 0.0;
      if (fn_name == "digamma") {
        value = polyinv::digamma(x_value);
      } else if (fn_name == "polygamma") {
        value = polyinv::polygamma(eval_order, x_value);
      } else if (fn_name == "inv-digamma") {
        const auto r = polyinv::inv_digamma(x_value);
        if (!r.converged) throw std::runtime_error("inv-digamma did not converge");
        value = r.value;
      } else {
        const auto r = polyinv::inv_polygamma(eval_order, x_value);
        if (!r.converged) throw std::runtime_error("inv-polygamma did not converge");
        value = r.value;
      }
      std::printf("%.17g\n", value);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
