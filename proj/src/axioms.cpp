#include "unimig/axioms.hpp"

#include <algorithm>

#include "unimig/kernels.hpp"

namespace unimig {

Verdict<CellWitness> check_commutative(const OperatorTable& t) {
  const int n1 = t.n1();
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j)
      if (t.at_index(i, j) != t.at_index(j, i)) return {false, CellWitness{{i}, {j}}};
  return {};
}

Verdict<TripleWitness> check_associative(const OperatorTable& t) {
  const auto& k = kernels::active_kernels();
  const int n1 = t.n1();
  for (int x = 0; x < n1; ++x) {
    const std::uint8_t* row_x = t.row(x);
    for (int y = 0; y < n1; ++y) {
      const std::uint8_t v = row_x[y];  // t(x,y)
      // t(t(x,y), z) vs t(x, t(y,z)) over all z
      const int z = k.first_lut_mismatch(t.row(v), row_x, t.row(y), n1);
      if (z >= 0) return {false, TripleWitness{{x}, {y}, {z}}};
    }
  }
  return {};
}

Verdict<MonotoneWitness> check_monotone(const OperatorTable& t) {
  const auto& k = kernels::active_kernels();
  const int n1 = t.n1();
  for (int i = 0; i < n1; ++i) {
    const std::uint8_t* row = t.row(i);
    const int j = k.first_greater(row, row + 1, n1 - 1);
    if (j >= 0) return {false, MonotoneWitness{MonotoneAxis::Row, {i}, {j}, {j + 1}}};
  }
  for (int i = 0; i + 1 < n1; ++i) {
    const int j = k.first_greater(t.row(i), t.row(i + 1), n1);
    if (j >= 0) return {false, MonotoneWitness{MonotoneAxis::Column, {j}, {i}, {i + 1}}};
  }
  return {};
}

std::vector<NeutralTriple> find_2neutral(const OperatorTable& t) {
  const int n = t.n();
  // Per row r: identity_prefix[r] = largest p with t(r,x) = x for all x <= p,
  // identity_suffix[r] = smallest s with t(r,x) = x for all x >= s.
  std::vector<int> prefix(n + 1, -1), suffix(n + 1, n + 1);
  for (int r = 0; r <= n; ++r) {
    int p = -1;
    while (p + 1 <= n && t.at_index(r, p + 1) == p + 1) ++p;
    prefix[r] = p;
    int s = n + 1;
    while (s - 1 >= 0 && t.at_index(r, s - 1) == s - 1) --s;
    suffix[r] = s;
  }
  std::vector<NeutralTriple> out;
  for (int a = 0; a <= n; ++a)
    for (int e = 0; e <= a; ++e) {
      if (prefix[e] < a) continue;
      for (int f = a; f <= n; ++f)
        if (suffix[f] <= a) out.push_back({{e}, {a}, {f}});
    }
  return out;
}

bool is_2uninorm(const OperatorTable& t, const std::optional<NeutralTriple>& triple) {
  if (!check_commutative(t).ok || !check_associative(t).ok || !check_monotone(t).ok)
    return false;
  const auto triples = find_2neutral(t);
  if (!triple) return !triples.empty();
  return std::find(triples.begin(), triples.end(), *triple) != triples.end();
}

AxiomReport run_axiom_suite(const OperatorTable& t) {
  return {check_commutative(t), check_associative(t), check_monotone(t), find_2neutral(t)};
}

bool StructuralReport::all_ok() const {
  return std::all_of(items.begin(), items.end(), [](const Item& it) { return it.ok; });
}

namespace {

using Pred = bool (*)(const OperatorTable&, const NeutralTriple&, int, int);

StructuralReport::Item scan_region(const OperatorTable& t, const NeutralTriple& tr, int xlo,
                                   int xhi, int ylo, int yhi, Pred pred, bool mirror) {
  for (int pass = 0; pass < (mirror ? 2 : 1); ++pass) {
    const int alo = pass == 0 ? xlo : ylo, ahi = pass == 0 ? xhi : yhi;
    const int blo = pass == 0 ? ylo : xlo, bhi = pass == 0 ? yhi : xhi;
    for (int x = alo; x <= ahi; ++x)
      for (int y = blo; y <= bhi; ++y)
        if (!pred(t, tr, x, y)) return {false, CellWitness{{x}, {y}}};
  }
  return {};
}

}  // namespace

StructuralReport check_structural_props(const OperatorTable& t, const NeutralTriple& tr) {
  if (!is_2uninorm(t, tr))
    throw PreconditionError("structural suite requires a verified 2-uninorm");

  const int n = t.n(), e = tr.e.index, a = tr.a.index, f = tr.f.index;
  StructuralReport r;

  // 1: op(x,y) = op(x,a) on [0,a] x [a,f]
  r.items[0] = scan_region(
      t, tr, 0, a, a, f,
      [](const OperatorTable& t, const NeutralTriple& tr, int x, int y) {
        return t.at_index(x, y) == t.at_index(x, tr.a.index);
      },
      false);
  // 2: op(x,y) = op(a,y) on [a,f] x [0,a]
  r.items[1] = scan_region(
      t, tr, a, f, 0, a,
      [](const OperatorTable& t, const NeutralTriple& tr, int x, int y) {
        return t.at_index(x, y) == t.at_index(tr.a.index, y);
      },
      false);
  // 3: op(x,y) = op(x,a) on [a,1] x [e,a]
  r.items[2] = scan_region(
      t, tr, a, n, e, a,
      [](const OperatorTable& t, const NeutralTriple& tr, int x, int y) {
        return t.at_index(x, y) == t.at_index(x, tr.a.index);
      },
      false);
  // 4: op(x,y) = op(a,y) on [e,a] x [a,1]
  r.items[3] = scan_region(
      t, tr, e, a, a, n,
      [](const OperatorTable& t, const NeutralTriple& tr, int x, int y) {
        return t.at_index(x, y) == t.at_index(tr.a.index, y);
      },
      false);
  // 5: min(x,y) <= op(x,y) <= a on [0,e] x [e,f] and mirror
  r.items[4] = scan_region(
      t, tr, 0, e, e, f,
      [](const OperatorTable& t, const NeutralTriple& tr, int x, int y) {
        const int v = t.at_index(x, y);
        return std::min(x, y) <= v && v <= tr.a.index;
      },
      true);
  // 6: a <= op(x,y) <= max(x,y) on [e,f] x [f,1] and mirror
  r.items[5] = scan_region(
      t, tr, e, f, f, n,
      [](const OperatorTable& t, const NeutralTriple& tr, int x, int y) {
        const int v = t.at_index(x, y);
        return tr.a.index <= v && v <= std::max(x, y);
      },
      true);
  // 7: op(x,y) in [0,e) u {a} u (f,1] on [0,a] x [a,1] and mirror
  r.items[6] = scan_region(
      t, tr, 0, a, a, n,
      [](const OperatorTable& t, const NeutralTriple& tr, int x, int y) {
        const int v = t.at_index(x, y);
        return v < tr.e.index || v == tr.a.index || v > tr.f.index;
      },
      true);
  return r;
}

}  // namespace unimig
