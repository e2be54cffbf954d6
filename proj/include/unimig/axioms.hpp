#pragma once

#include <array>
#include <optional>
#include <vector>

#include "unimig/operators.hpp"

namespace unimig {

template <class W>
struct Verdict {
  bool ok = true;
  std::optional<W> witness;
  explicit operator bool() const { return ok; }
};

struct CellWitness {
  GridPoint x, y;
};
struct TripleWitness {
  GridPoint x, y, z;
};
enum class MonotoneAxis { Row, Column };
/// An adjacent inversion: along the given axis, the entry at `at` exceeds
/// the entry at `next` (= at + 1) with the other coordinate fixed.
struct MonotoneWitness {
  MonotoneAxis axis;
  GridPoint fixed;
  GridPoint at, next;
};

/// entries[i][j] == entries[j][i]; witness is the first violating pair in
/// row-major order over the upper triangle.
Verdict<CellWitness> check_commutative(const OperatorTable& t);

/// Full O(n^3) scan of t(t(x,y),z) == t(x,t(y,z)); witness is the first
/// violating triple in row-major (x,y,z) order.
Verdict<TripleWitness> check_associative(const OperatorTable& t);

/// Every row and column non-decreasing. Rows are scanned first (by (i,j)),
/// then columns (by (i,j)); witness is the first adjacent inversion found.
Verdict<MonotoneWitness> check_monotone(const OperatorTable& t);

/// All triples (e,a,f) with e <= a <= f satisfying both identity families of
/// a 2-neutral element, in lexicographic (a,e,f) order. Possibly empty.
std::vector<NeutralTriple> find_2neutral(const OperatorTable& t);

/// Commutative + associative + monotone + (given triple is 2-neutral, or
/// some 2-neutral triple exists when none is given).
bool is_2uninorm(const OperatorTable& t, const std::optional<NeutralTriple>& triple = {});

struct AxiomReport {
  Verdict<CellWitness> commutative;
  Verdict<TripleWitness> associative;
  Verdict<MonotoneWitness> monotone;
  std::vector<NeutralTriple> triples;

  bool all_axioms_ok() const { return commutative.ok && associative.ok && monotone.ok; }
};

AxiomReport run_axiom_suite(const OperatorTable& t);

/// Pass/fail per structural item (seven of them), witness cell on failure.
struct StructuralReport {
  struct Item {
    bool ok = true;
    std::optional<CellWitness> witness;
  };
  std::array<Item, 7> items;

  bool all_ok() const;
};

/// Structural facts every 2-uninorm with 2-neutral element {e,f}_a satisfies:
///   1. op(x,y) = op(x,a) on [0,a] x [a,f]
///   2. op(x,y) = op(a,y) on [a,f] x [0,a]
///   3. op(x,y) = op(x,a) on [a,1] x [e,a]
///   4. op(x,y) = op(a,y) on [e,a] x [a,1]
///   5. min(x,y) <= op(x,y) <= a on [0,e] x [e,f] and its mirror
///   6. a <= op(x,y) <= max(x,y) on [e,f] x [f,1] and its mirror
///   7. op(x,y) in [0,e) u {a} u (f,1] on [0,a] x [a,1] and its mirror
/// A failure on a verified 2-uninorm indicates an implementation bug.
/// Throws PreconditionError unless is_2uninorm(t, triple) holds.
StructuralReport check_structural_props(const OperatorTable& t, const NeutralTriple& triple);

}  // namespace unimig
