#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "unimig/errors.hpp"

namespace unimig {

/// Exact non-negative rational, kept normalized (den > 0, gcd(num, den) = 1).
/// All carrier values and config literals are small, so int64 never overflows
/// in the cross-multiplications below.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Fraction() = default;
  Fraction(std::int64_t numerator, std::int64_t denominator);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool in_unit_interval() const { return num >= 0 && num <= den; }

  /// num/den * k when that product is an integer, otherwise nullopt.
  std::optional<std::int64_t> times_integral(std::int64_t k) const;

  /// "p/q" for proper fractions, plain integer text otherwise.
  std::string str() const;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return a == b || a < b; }
};

/// Accepts "p/q", decimal literals ("0.35", ".5"), and plain integers.
/// Throws ParseError on anything else; negative values are rejected.
Fraction parse_fraction(std::string_view text);

}  // namespace unimig
