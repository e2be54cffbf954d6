#pragma once

#include <compare>

#include "unimig/fraction.hpp"

namespace unimig {

/// A carrier point of a discretized unit interval, identified by index.
/// Equality and order are index comparisons only; the owning grid is passed
/// alongside wherever the rational value is needed.
struct GridPoint {
  int index = 0;
  friend constexpr auto operator<=>(GridPoint, GridPoint) = default;
};

/// Uniform chain {0, 1/n, ..., 1} with n subdivisions.
class UnitGrid {
 public:
  explicit UnitGrid(int subdivisions);

  int n() const { return n_; }
  int size() const { return n_ + 1; }
  bool contains(GridPoint p) const { return p.index >= 0 && p.index <= n_; }
  Fraction value(GridPoint p) const;
  double value_real(GridPoint p) const { return static_cast<double>(p.index) / n_; }
  GridPoint zero() const { return {0}; }
  GridPoint one() const { return {n_}; }

  friend bool operator==(const UnitGrid&, const UnitGrid&) = default;

 private:
  int n_;
};

enum class CompareMode { Exact, Float };

/// Scalar comparison policy. Exact mode never consults eps; all equality is
/// integer index equality. Float mode tolerates |a-b| <= eps and exists only
/// so closed-form operators can be evaluated at off-grid points.
struct ToleranceConfig {
  CompareMode mode = CompareMode::Exact;
  double eps = 1e-9;

  static ToleranceConfig exact() { return {CompareMode::Exact, 0.0}; }
  static ToleranceConfig floating(double eps = 1e-9) { return {CompareMode::Float, eps}; }
  bool is_exact() const { return mode == CompareMode::Exact; }
};

/// Grid with n+1 carrier points. Rejects n == 0.
UnitGrid make_grid(int subdivisions);

/// Exact mode: succeeds iff value * n is an integer. Float mode: nearest
/// carrier point within cfg.eps. Throws NotOnGridError / OutOfRangeError.
GridPoint snap(const Fraction& value, const UnitGrid& grid, const ToleranceConfig& cfg);

/// Float-mode convenience. Exact mode cannot snap a double faithfully
/// (binary doubles are not the rationals the caller wrote down), so this
/// overload throws PreconditionError unless cfg is float mode.
GridPoint snap(double value, const UnitGrid& grid, const ToleranceConfig& cfg);

}  // namespace unimig
