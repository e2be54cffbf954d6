#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "unimig/table.hpp"

namespace unimig {

/// The (e, a, f) data of a 2-neutral element {e,f}_a: op(e,x) = x on [0,a]
/// and op(f,x) = x on [a,1], with e <= a <= f.
struct NeutralTriple {
  GridPoint e, a, f;
  friend constexpr auto operator<=>(const NeutralTriple&, const NeutralTriple&) = default;
};

/// Validates the ordering invariant.
NeutralTriple make_triple(GridPoint e, GridPoint a, GridPoint f);

enum class SubclassTag {
  TNorm,
  TConorm,
  Uninorm,
  Nullnorm,
  UniNullnorm,
  NullUninorm,
  General2Uninorm,
};

std::string_view to_string(SubclassTag tag);

class OperatorSpec;
using SpecPtr = std::shared_ptr<const OperatorSpec>;

// Parametric families. Parameters are exact fractions so one spec can be
// discretized on any compatible grid; snapping happens at evaluation time
// and off-grid parameters raise NotOnGridError in exact mode.
struct MinOp {};
struct MaxOp {};
struct ProductOp {};      // exact only where i*j is divisible by n
struct LukasiewiczOp {};  // max(0, x + y - 1)
struct DrasticOp {};      // x if y = 1, y if x = 1, else 0
struct DualConorm {
  SpecPtr inner;  // S(x,y) = 1 - inner(1-x, 1-y)
};
struct UninormMinClass {
  Fraction e;
  SpecPtr tnorm;    // rescaled to [0,e]^2
  SpecPtr tconorm;  // rescaled to [e,1]^2; min on the mixed blocks
};
struct UninormMaxClass {
  Fraction e;
  SpecPtr tnorm;
  SpecPtr tconorm;  // max on the mixed blocks
};
struct NullnormSpec {
  Fraction a;
  SpecPtr tconorm;  // rescaled to [0,a]^2
  SpecPtr tnorm;    // rescaled to [a,1]^2; a absorbs the mixed blocks
};
/// min on [0,e]^2 and [a,f]^2, the constant a on [0,a]x[a,f] and its mirror,
/// max elsewhere. First-match in that order; overlaps agree on the shared
/// boundary lines (asserted by tests).
struct Example2Uninorm {
  Fraction e, a, f;
};
/// Two uninorms rescaled to [0,a]^2 and [a,1]^2 with both mixed blocks equal
/// to the constant a. Not every component pair yields an associative result;
/// discretize() runs the full axiom gate and rejects failures.
struct GluedTwoUninorm {
  Fraction a;
  SpecPtr low;
  SpecPtr high;
};
struct TableSpec {
  OperatorTable table;
};

class OperatorSpec {
 public:
  using Variant = std::variant<MinOp, MaxOp, ProductOp, LukasiewiczOp, DrasticOp, DualConorm,
                               UninormMinClass, UninormMaxClass, NullnormSpec, Example2Uninorm,
                               GluedTwoUninorm, TableSpec>;

  explicit OperatorSpec(Variant v) : v_(std::move(v)) {}
  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

template <class T>
SpecPtr make_spec(T v) {
  return std::make_shared<const OperatorSpec>(OperatorSpec::Variant(std::move(v)));
}

/// Exact evaluation at grid points. Throws NotOnGridError when a parameter
/// (or an intermediate value, e.g. a product) does not land on the grid.
GridPoint evaluate(const OperatorSpec& spec, const UnitGrid& grid, GridPoint x, GridPoint y);

/// Closed-form evaluation at arbitrary reals in [0,1]. TableSpec has no
/// closed form and is rejected.
double evaluate_real(const OperatorSpec& spec, double x, double y);

/// Tabulate the spec on the grid. Exact mode throws NotOnGridError for any
/// misaligned parameter or value; float mode snaps each evaluated cell to
/// the nearest carrier point within cfg.eps. GluedTwoUninorm instances are
/// additionally passed through the axiom gate and rejected with
/// ConstructionError when the glued table is not a 2-uninorm.
OperatorTable discretize(const OperatorSpec& spec, const UnitGrid& grid,
                         const ToleranceConfig& cfg = ToleranceConfig::exact());

/// Affine image of a spec on the sub-chain [lo, hi]: the inner operation is
/// evaluated on a grid with hi-lo subdivisions and shifted by lo, so
/// value(x,y) = lo + (hi-lo) * spec((x-lo)/(hi-lo), (y-lo)/(hi-lo)).
struct PartialTable {
  GridPoint lo, hi;
  OperatorTable block;  // on the (hi-lo)-subdivision grid

  GridPoint value(GridPoint x, GridPoint y) const {
    return {lo.index + block.at_index(x.index - lo.index, y.index - lo.index)};
  }
};

PartialTable rescale_into(const OperatorSpec& spec, const UnitGrid& grid, GridPoint lo,
                          GridPoint hi);

/// Subclass of the 2-uninorm *as presented by this triple*. Degenerate
/// uninorm representations ((g,g,g), (g,1,1), (0,0,g)) all map to Uninorm;
/// the remaining tests run in the documented first-match order.
SubclassTag classify(const NeutralTriple& triple, const UnitGrid& grid);

/// The triple a parametric family carries by construction; nullopt for
/// TableSpec (the caller must fix one from find_2neutral).
std::optional<NeutralTriple> canonical_triple(const OperatorSpec& spec, const UnitGrid& grid);

}  // namespace unimig
