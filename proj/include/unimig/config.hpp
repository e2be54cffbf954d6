#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "unimig/operators.hpp"

namespace unimig {

/// One `[operator NAME]` stanza, before reference resolution. Scalar keys
/// stay textual so exact values survive until a grid is known.
struct RawOperator {
  std::string name;
  int line = 0;
  std::string family;
  std::map<std::string, std::string> params;  // e, a, f, t, s, low, high, inner
  std::vector<std::string> rows;              // table family only
  std::optional<std::array<Fraction, 3>> triple;
};

/// Parsed config file: top-level key=value lines followed by operator
/// stanzas. Flags may override grid and mode later.
struct RunConfig {
  int grid_n = 0;  // 0 = not set
  CompareMode mode = CompareMode::Exact;
  double eps = 1e-9;
  std::vector<RawOperator> operators;
  std::optional<std::string> u1, u2, subject;
  std::optional<Fraction> alpha;
  std::optional<std::array<Fraction, 3>> triple;
  bool triple_all = false;
  std::uint64_t cap = 1'000'000;
  bool emit_tables = false;
};

/// Line-oriented parse with line-numbered diagnostics. Duplicate names,
/// unknown keys or families, and malformed literals are rejected here;
/// references and grid alignment are checked by resolve_operators once the
/// grid is fixed.
RunConfig parse_config(std::string_view text);

struct ResolvedOperator {
  SpecPtr spec;
  std::optional<std::array<Fraction, 3>> triple;
};

/// Builds specs in declaration order; references must point to earlier
/// stanzas. Table rows are snapped onto the grid here.
std::map<std::string, ResolvedOperator> resolve_operators(const RunConfig& cfg,
                                                          const UnitGrid& grid,
                                                          const ToleranceConfig& tol);

}  // namespace unimig
