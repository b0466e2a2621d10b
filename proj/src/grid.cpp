#include "polyinv/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polyinv {

namespace {

void check(const GridSpec& g) {
  if (!(g.points >= 2)) throw std::invalid_argument("grid: points >= 2 required");
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) || !(g.start < g.stop))
    throw std::invalid_argument("grid: requires finite start < stop");
  if (g.scale == GridScale::Log && !(g.start > 0.0))
    throw std::invalid_argument("grid: log scale requires start > 0");
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string a, b, c, d;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') ||
      !std::getline(in, c, ':') || !std::getline(in, d))
    throw std::invalid_argument("grid: expected start:stop:points:linear|log, got '" + text + "'");

  GridSpec g{};
  try {
    std::size_t pos = 0;
    g.start = std::stod(a, &pos);
    if (pos != a.size()) throw std::invalid_argument("");
    g.stop = std::stod(b, &pos);
    if (pos != b.size()) throw std::invalid_argument("");
    g.points = std::stol(c, &pos);
    if (pos != c.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid: malformed number in '" + text + "'");
  }
  if (d == "linear")
    g.scale = GridScale::Linear;
  else if (d == "log")
    g.scale = GridScale::Log;
  else
    throw std::invalid_argument("grid: scale must be 'linear' or 'log', got '" + d + "'");
  check(g);
  return g;
}

std::vector<double> GridSpec::values() const {
  check(*this);
  std::vector<double> v(points);
  if (scale == GridScale::Linear) {
    const double step = (stop - start) / double(points - 1);
    for (long i = 0; i < points; ++i) v[i] = start + double(i) * step;
  } else {
    const double la = std::log(start);
    const double lb = std::log(stop);
    const double step = (lb - la) / double(points - 1);
    for (long i = 0; i < points; ++i) v[i] = std::exp(la + double(i) * step);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

std::string GridSpec::to_string() const {
  std::ostringstream out;
  out << start << ':' << stop << ':' << points << ':'
      << (scale == GridScale::Linear ? "linear" : "log");
  return out.str();
}

}  // namespace polyinv
