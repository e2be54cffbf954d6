#pragma once

#include <cstdint>
#include <vector>

#include "unimig/grid.hpp"

namespace unimig {

/// Complete Cayley table of a binary operation on a grid carrier.
/// Entry (i, j) holds the carrier index of op(i/n, j/n), row-major with row
/// stride n+1. The backing buffer carries a few bytes of tail padding so the
/// vector kernels may issue 4-byte gathers at any valid entry.
class OperatorTable {
 public:
  static constexpr int kMaxSubdivisions = 254;
  static constexpr int kPadding = 4;

  explicit OperatorTable(UnitGrid grid);
  OperatorTable(UnitGrid grid, std::vector<std::uint8_t> cells);

  const UnitGrid& grid() const { return grid_; }
  int n() const { return grid_.n(); }
  int n1() const { return grid_.size(); }

  std::uint8_t at_index(int i, int j) const { return cells_[i * n1_ + j]; }
  GridPoint at(GridPoint x, GridPoint y) const {
    return {static_cast<int>(at_index(x.index, y.index))};
  }
  void set(int i, int j, std::uint8_t v) { cells_[i * n1_ + j] = v; }

  const std::uint8_t* data() const { return cells_.data(); }
  const std::uint8_t* row(int i) const { return cells_.data() + i * n1_; }
  std::size_t cell_count() const { return static_cast<std::size_t>(n1_) * n1_; }

  friend bool operator==(const OperatorTable& a, const OperatorTable& b);

 private:
  UnitGrid grid_;
  int n1_;
  std::vector<std::uint8_t> cells_;  // n1*n1 + kPadding bytes
};

}  // namespace unimig
