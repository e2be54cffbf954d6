#include "unimig/grid.hpp"

#include <algorithm>
#include <cmath>

namespace unimig {

UnitGrid::UnitGrid(int subdivisions) : n_(subdivisions) {
  if (n_ < 1) throw ValidationError("grid needs at least one subdivision");
}

Fraction UnitGrid::value(GridPoint p) const {
  if (!contains(p)) throw OutOfRangeError("grid point index out of range");
  return Fraction(p.index, n_);
}

UnitGrid make_grid(int subdivisions) { return UnitGrid(subdivisions); }

GridPoint snap(const Fraction& value, const UnitGrid& grid, const ToleranceConfig& cfg) {
  if (!value.in_unit_interval())
    throw OutOfRangeError("value " + value.str() + " outside [0,1]");
  if (cfg.is_exact()) {
    const auto idx = value.times_integral(grid.n());
    if (!idx)
      throw NotOnGridError("value " + value.str() + " is not on the 1/" +
                           std::to_string(grid.n()) + " grid");
    return {static_cast<int>(*idx)};
  }
  return snap(value.to_double(), grid, cfg);
}

GridPoint snap(double value, const UnitGrid& grid, const ToleranceConfig& cfg) {
  if (cfg.is_exact())
    throw PreconditionError("exact mode snaps rationals, not doubles");
  if (value < -cfg.eps || value > 1.0 + cfg.eps)
    throw OutOfRangeError("value " + std::to_string(value) + " outside [0,1]");
  const int idx = std::clamp(static_cast<int>(std::lround(value * grid.n())), 0, grid.n());
  if (std::abs(value - static_cast<double>(idx) / grid.n()) > cfg.eps)
    throw NotOnGridError("value " + std::to_string(value) + " is farther than eps from the 1/" +
                         std::to_string(grid.n()) + " grid");
  return {idx};
}

}  // namespace unimig
