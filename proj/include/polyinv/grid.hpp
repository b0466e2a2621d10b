#ifndef POLYINV_GRID_HPP
#define POLYINV_GRID_HPP

#include <string>
#include <vector>

namespace polyinv {

enum class GridScale { Linear, Log };

// A 1-D sweep domain: points >= 2, start < stop, log scale requires start > 0.
struct GridSpec {
  double start;
  double stop;
  long points;
  GridScale scale;

  // Parses "start:stop:points:linear|log"; throws std::invalid_argument on
  // malformed input or violated invariants.
  static GridSpec parse(const std::string& text);

  // The sweep values; endpoints are exact.
  std::vector<double> values() const;

  std::string to_string() const;
};

}  // namespace polyinv

#endif  // POLYINV_GRID_HPP
