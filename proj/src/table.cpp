#include "unimig/table.hpp"

#include <algorithm>

#include "unimig/errors.hpp"

namespace unimig {

namespace {

void check_grid_size(const UnitGrid& grid) {
  if (grid.n() > OperatorTable::kMaxSubdivisions)
    throw ValidationError("grid too fine for byte-indexed tables (n <= " +
                          std::to_string(OperatorTable::kMaxSubdivisions) + ")");
}

}  // namespace

OperatorTable::OperatorTable(UnitGrid grid) : grid_(grid), n1_(grid.size()) {
  check_grid_size(grid_);
  cells_.assign(static_cast<std::size_t>(n1_) * n1_ + kPadding, 0);
}

OperatorTable::OperatorTable(UnitGrid grid, std::vector<std::uint8_t> cells)
    : grid_(grid), n1_(grid.size()) {
  check_grid_size(grid_);
  const std::size_t logical = static_cast<std::size_t>(n1_) * n1_;
  if (cells.size() != logical)
    throw ValidationError("table cell count does not match the grid");
  for (std::uint8_t v : cells)
    if (v > grid_.n()) throw ValidationError("table entry exceeds the grid");
  cells_ = std::move(cells);
  cells_.resize(logical + kPadding, 0);
}

bool operator==(const OperatorTable& a, const OperatorTable& b) {
  return a.grid_ == b.grid_ &&
         std::equal(a.cells_.begin(), a.cells_.begin() + a.cell_count(), b.cells_.begin());
}

}  // namespace unimig
