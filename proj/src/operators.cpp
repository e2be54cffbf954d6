#include "unimig/operators.hpp"

#include <algorithm>
#include <cmath>

#include "unimig/axioms.hpp"

namespace unimig {

NeutralTriple make_triple(GridPoint e, GridPoint a, GridPoint f) {
  if (!(e <= a && a <= f))
    throw PreconditionError("2-neutral triple must satisfy e <= a <= f");
  return {e, a, f};
}

std::string_view to_string(SubclassTag tag) {
  switch (tag) {
    case SubclassTag::TNorm: return "t-norm";
    case SubclassTag::TConorm: return "t-conorm";
    case SubclassTag::Uninorm: return "uninorm";
    case SubclassTag::Nullnorm: return "nullnorm";
    case SubclassTag::UniNullnorm: return "uni-nullnorm";
    case SubclassTag::NullUninorm: return "null-uninorm";
    case SubclassTag::General2Uninorm: return "2-uninorm";
  }
  return "?";
}

namespace {

int snap_param(const Fraction& f, const UnitGrid& grid) {
  return snap(f, grid, ToleranceConfig::exact()).index;
}

int eval_idx(const OperatorSpec& spec, const UnitGrid& g, int i, int j);

struct ExactEval {
  const UnitGrid& g;
  int i, j;
  int n() const { return g.n(); }

  int operator()(const MinOp&) const { return std::min(i, j); }
  int operator()(const MaxOp&) const { return std::max(i, j); }
  int operator()(const ProductOp&) const {
    const int p = i * j;
    if (p % n() != 0)
      throw NotOnGridError("product " + Fraction(p, n() * n()).str() + " is off-grid");
    return p / n();
  }
  int operator()(const LukasiewiczOp&) const { return std::max(0, i + j - n()); }
  int operator()(const DrasticOp&) const {
    if (i == n()) return j;
    if (j == n()) return i;
    return 0;
  }
  int operator()(const DualConorm& d) const {
    return n() - eval_idx(*d.inner, g, n() - i, n() - j);
  }
  int operator()(const UninormMinClass& u) const {
    const int e = snap_param(u.e, g);
    if (e > 0 && i <= e && j <= e) return eval_idx(*u.tnorm, UnitGrid(e), i, j);
    if (e < n() && i >= e && j >= e)
      return e + eval_idx(*u.tconorm, UnitGrid(n() - e), i - e, j - e);
    return std::min(i, j);
  }
  int operator()(const UninormMaxClass& u) const {
    const int e = snap_param(u.e, g);
    if (e > 0 && i <= e && j <= e) return eval_idx(*u.tnorm, UnitGrid(e), i, j);
    if (e < n() && i >= e && j >= e)
      return e + eval_idx(*u.tconorm, UnitGrid(n() - e), i - e, j - e);
    return std::max(i, j);
  }
  int operator()(const NullnormSpec& s) const {
    const int a = snap_param(s.a, g);
    if (a > 0 && i <= a && j <= a) return eval_idx(*s.tconorm, UnitGrid(a), i, j);
    if (a < n() && i >= a && j >= a)
      return a + eval_idx(*s.tnorm, UnitGrid(n() - a), i - a, j - a);
    return a;
  }
  int operator()(const Example2Uninorm& x) const {
    const int e = snap_param(x.e, g), a = snap_param(x.a, g), f = snap_param(x.f, g);
    if (!(e <= a && a <= f))
      throw ValidationError("example operator parameters must satisfy e <= a <= f");
    if ((i <= e && j <= e) || (a <= i && i <= f && a <= j && j <= f)) return std::min(i, j);
    if ((i <= a && a <= j && j <= f) || (a <= i && i <= f && j <= a)) return a;
    return std::max(i, j);
  }
  int operator()(const GluedTwoUninorm& u) const {
    const int a = snap_param(u.a, g);
    if (a > 0 && i <= a && j <= a) return eval_idx(*u.low, UnitGrid(a), i, j);
    if (a < n() && i >= a && j >= a)
      return a + eval_idx(*u.high, UnitGrid(n() - a), i - a, j - a);
    return a;
  }
  int operator()(const TableSpec& t) const {
    if (!(t.table.grid() == g))
      throw ValidationError("table operator is bound to a different grid");
    return t.table.at_index(i, j);
  }
};

int eval_idx(const OperatorSpec& spec, const UnitGrid& g, int i, int j) {
  return std::visit(ExactEval{g, i, j}, spec.variant());
}

struct RealEval {
  double x, y;

  double operator()(const MinOp&) const { return std::min(x, y); }
  double operator()(const MaxOp&) const { return std::max(x, y); }
  double operator()(const ProductOp&) const { return x * y; }
  double operator()(const LukasiewiczOp&) const { return std::max(0.0, x + y - 1.0); }
  double operator()(const DrasticOp&) const {
    if (x == 1.0) return y;
    if (y == 1.0) return x;
    return 0.0;
  }
  double operator()(const DualConorm& d) const {
    return 1.0 - evaluate_real(*d.inner, 1.0 - x, 1.0 - y);
  }
  double operator()(const UninormMinClass& u) const {
    const double e = u.e.to_double();
    if (e == 0.0) return evaluate_real(*u.tconorm, x, y);
    if (e == 1.0) return evaluate_real(*u.tnorm, x, y);
    if (x <= e && y <= e) return e * evaluate_real(*u.tnorm, x / e, y / e);
    if (x >= e && y >= e)
      return e + (1.0 - e) * evaluate_real(*u.tconorm, (x - e) / (1.0 - e), (y - e) / (1.0 - e));
    return std::min(x, y);
  }
  double operator()(const UninormMaxClass& u) const {
    const double e = u.e.to_double();
    if (e == 0.0) return evaluate_real(*u.tconorm, x, y);
    if (e == 1.0) return evaluate_real(*u.tnorm, x, y);
    if (x <= e && y <= e) return e * evaluate_real(*u.tnorm, x / e, y / e);
    if (x >= e && y >= e)
      return e + (1.0 - e) * evaluate_real(*u.tconorm, (x - e) / (1.0 - e), (y - e) / (1.0 - e));
    return std::max(x, y);
  }
  double operator()(const NullnormSpec& s) const {
    const double a = s.a.to_double();
    if (a == 0.0) return evaluate_real(*s.tnorm, x, y);
    if (a == 1.0) return evaluate_real(*s.tconorm, x, y);
    if (x <= a && y <= a) return a * evaluate_real(*s.tconorm, x / a, y / a);
    if (x >= a && y >= a)
      return a + (1.0 - a) * evaluate_real(*s.tnorm, (x - a) / (1.0 - a), (y - a) / (1.0 - a));
    return a;
  }
  double operator()(const Example2Uninorm& s) const {
    const double e = s.e.to_double(), a = s.a.to_double(), f = s.f.to_double();
    if ((x <= e && y <= e) || (a <= x && x <= f && a <= y && y <= f)) return std::min(x, y);
    if ((x <= a && a <= y && y <= f) || (a <= x && x <= f && y <= a)) return a;
    return std::max(x, y);
  }
  double operator()(const GluedTwoUninorm& u) const {
    const double a = u.a.to_double();
    if (a == 0.0) return evaluate_real(*u.high, x, y);
    if (a == 1.0) return evaluate_real(*u.low, x, y);
    if (x <= a && y <= a) return a * evaluate_real(*u.low, x / a, y / a);
    if (x >= a && y >= a)
      return a + (1.0 - a) * evaluate_real(*u.high, (x - a) / (1.0 - a), (y - a) / (1.0 - a));
    return a;
  }
  double operator()(const TableSpec&) const {
    throw ValidationError("raw tables have no closed form for float evaluation");
  }
};

GridPoint reflect(GridPoint p, const UnitGrid& g) { return {g.n() - p.index}; }

}  // namespace

GridPoint evaluate(const OperatorSpec& spec, const UnitGrid& grid, GridPoint x, GridPoint y) {
  if (!grid.contains(x) || !grid.contains(y))
    throw OutOfRangeError("evaluation point off the grid carrier");
  return {eval_idx(spec, grid, x.index, y.index)};
}

double evaluate_real(const OperatorSpec& spec, double x, double y) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
    throw OutOfRangeError("evaluation point outside the unit square");
  return std::visit(RealEval{x, y}, spec.variant());
}

OperatorTable discretize(const OperatorSpec& spec, const UnitGrid& grid,
                         const ToleranceConfig& cfg) {
  OperatorTable t(grid);
  if (cfg.is_exact() || std::holds_alternative<TableSpec>(spec.variant())) {
    for (int i = 0; i < grid.size(); ++i)
      for (int j = 0; j < grid.size(); ++j)
        t.set(i, j, static_cast<std::uint8_t>(eval_idx(spec, grid, i, j)));
  } else {
    for (int i = 0; i < grid.size(); ++i)
      for (int j = 0; j < grid.size(); ++j) {
        const double v = evaluate_real(spec, grid.value_real({i}), grid.value_real({j}));
        t.set(i, j, static_cast<std::uint8_t>(snap(v, grid, cfg).index));
      }
  }
  if (std::holds_alternative<GluedTwoUninorm>(spec.variant())) {
    const auto triple = canonical_triple(spec, grid);
    if (!is_2uninorm(t, triple))
      throw ConstructionError(
          "glued construction is not a 2-uninorm for these components");
  }
  return t;
}

PartialTable rescale_into(const OperatorSpec& spec, const UnitGrid& grid, GridPoint lo,
                          GridPoint hi) {
  if (!grid.contains(lo) || !grid.contains(hi) || !(lo < hi))
    throw PreconditionError("rescale target needs lo < hi on the grid");
  return {lo, hi, discretize(spec, UnitGrid(hi.index - lo.index))};
}

SubclassTag classify(const NeutralTriple& t, const UnitGrid& grid) {
  const int n = grid.n(), e = t.e.index, a = t.a.index, f = t.f.index;
  if (e == 0 && a == 0 && f == 0) return SubclassTag::TConorm;
  if (e == n && a == n && f == n) return SubclassTag::TNorm;
  if ((e == a && a == f) || (a == n && f == n) || (e == 0 && a == 0))
    return SubclassTag::Uninorm;
  if (e == 0 && f == n) return SubclassTag::Nullnorm;
  if (f == n && a < n) return SubclassTag::UniNullnorm;
  if (e == 0 && a > 0) return SubclassTag::NullUninorm;
  return SubclassTag::General2Uninorm;
}

namespace {

struct CanonicalTriple {
  const UnitGrid& g;
  int n() const { return g.n(); }

  using R = std::optional<NeutralTriple>;

  R operator()(const MinOp&) const { return NeutralTriple{{n()}, {n()}, {n()}}; }
  R operator()(const MaxOp&) const { return NeutralTriple{{0}, {0}, {0}}; }
  R operator()(const ProductOp&) const { return NeutralTriple{{n()}, {n()}, {n()}}; }
  R operator()(const LukasiewiczOp&) const { return NeutralTriple{{n()}, {n()}, {n()}}; }
  R operator()(const DrasticOp&) const { return NeutralTriple{{n()}, {n()}, {n()}}; }
  R operator()(const DualConorm& d) const {
    const auto inner = canonical_triple(*d.inner, g);
    if (!inner) return std::nullopt;
    return NeutralTriple{reflect(inner->f, g), reflect(inner->a, g), reflect(inner->e, g)};
  }
  R operator()(const UninormMinClass& u) const {
    const int e = snap_param(u.e, g);
    return NeutralTriple{{e}, {e}, {e}};
  }
  R operator()(const UninormMaxClass& u) const {
    const int e = snap_param(u.e, g);
    return NeutralTriple{{e}, {e}, {e}};
  }
  R operator()(const NullnormSpec& s) const {
    const int a = snap_param(s.a, g);
    return NeutralTriple{{0}, {a}, {n()}};
  }
  R operator()(const Example2Uninorm& x) const {
    return NeutralTriple{{snap_param(x.e, g)}, {snap_param(x.a, g)}, {snap_param(x.f, g)}};
  }
  R operator()(const GluedTwoUninorm& u) const {
    const int a = snap_param(u.a, g);
    if (a == 0) return canonical_triple(*u.high, g);
    if (a == n()) return canonical_triple(*u.low, g);
    const auto lo = canonical_triple(*u.low, UnitGrid(a));
    const auto hi = canonical_triple(*u.high, UnitGrid(n() - a));
    if (!lo || !hi) return std::nullopt;
    return NeutralTriple{{lo->e.index}, {a}, {a + hi->e.index}};
  }
  R operator()(const TableSpec&) const { return std::nullopt; }
};

}  // namespace

std::optional<NeutralTriple> canonical_triple(const OperatorSpec& spec, const UnitGrid& grid) {
  return std::visit(CanonicalTriple{grid}, spec.variant());
}

}  // namespace unimig
