#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unimig/axioms.hpp"

using namespace unimig;

namespace {

OperatorTable min_table(int n) { return discretize(*make_spec(MinOp{}), make_grid(n)); }

OperatorTable example_table(int e, int a, int f, int n) {
  return discretize(*make_spec(Example2Uninorm{{e, n}, {a, n}, {f, n}}), make_grid(n));
}

/// Rounded-half-up arithmetic mean of the indices: the canonical commutative
/// monotone operation that fails associativity.
OperatorTable mean_table(int n) {
  OperatorTable t{make_grid(n)};
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) t.set(i, j, static_cast<std::uint8_t>((i + j + 1) / 2));
  return t;
}

}  // namespace

TEST_CASE("commutativity: verdicts and witnesses") {
  CHECK(check_commutative(min_table(5)).ok);
  CHECK(check_commutative(example_table(3, 5, 7, 10)).ok);

  OperatorTable t{make_grid(1)};
  t.set(0, 1, 0);
  t.set(1, 0, 1);
  t.set(1, 1, 1);
  const auto v = check_commutative(t);
  REQUIRE_FALSE(v.ok);
  CHECK(v.witness->x.index == 0);
  CHECK(v.witness->y.index == 1);
}

TEST_CASE("associativity: mean table fails with a sound witness") {
  CHECK(check_associative(discretize(*make_spec(MaxOp{}), make_grid(6))).ok);
  CHECK(check_associative(example_table(2, 6, 8, 10)).ok);

  const OperatorTable t = mean_table(4);
  const auto v = check_associative(t);
  REQUIRE_FALSE(v.ok);
  const int x = v.witness->x.index, y = v.witness->y.index, z = v.witness->z.index;
  CHECK(t.at_index(t.at_index(x, y), z) != t.at_index(x, t.at_index(y, z)));

  // A violating triple over the endpoints 0 and 1 exists too.
  CHECK(t.at_index(t.at_index(0, 4), 4) != t.at_index(0, t.at_index(4, 4)));

  // Independent full scan must agree with the kernel on the first witness.
  bool found = false;
  for (int i = 0; i <= 4 && !found; ++i)
    for (int j = 0; j <= 4 && !found; ++j)
      for (int k = 0; k <= 4 && !found; ++k)
        if (t.at_index(t.at_index(i, j), k) != t.at_index(i, t.at_index(j, k))) {
          CHECK(i == x);
          CHECK(j == y);
          CHECK(k == z);
          found = true;
        }
  CHECK(found);
}

TEST_CASE("monotonicity: verdicts and witnesses") {
  CHECK(check_monotone(min_table(6)).ok);

  OperatorTable t{make_grid(2)};
  t.set(0, 0, 0);
  t.set(0, 1, 1);
  t.set(0, 2, 0);  // inversion inside row 0
  const auto v = check_monotone(t);
  REQUIRE_FALSE(v.ok);
  CHECK(v.witness->axis == MonotoneAxis::Row);
  CHECK(v.witness->fixed.index == 0);
  CHECK(v.witness->at.index == 1);
  CHECK(v.witness->next.index == 2);
}

TEST_CASE("find_2neutral on min: the three derived triples") {
  const auto triples = find_2neutral(min_table(2));
  REQUIRE(triples.size() == 3);
  CHECK(triples[0] == NeutralTriple{{0}, {0}, {2}});
  CHECK(triples[1] == NeutralTriple{{1}, {1}, {2}});
  CHECK(triples[2] == NeutralTriple{{2}, {2}, {2}});
}

TEST_CASE("find_2neutral on the example operator") {
  const auto triples = find_2neutral(example_table(3, 5, 7, 10));
  CHECK(std::find(triples.begin(), triples.end(), NeutralTriple{{3}, {5}, {7}}) != triples.end());
}

TEST_CASE("find_2neutral on the constant-zero table is empty") {
  OperatorTable t{make_grid(1)};  // all cells 0
  CHECK(find_2neutral(t).empty());
}

TEST_CASE("find_2neutral triples replay the defining identities") {
  for (const OperatorTable& t :
       {min_table(4), example_table(3, 5, 7, 10), example_table(2, 6, 8, 10)}) {
    const auto triples = find_2neutral(t);
    CHECK_FALSE(triples.empty());
    for (const NeutralTriple& tr : triples) {
      for (int x = 0; x <= tr.a.index; ++x) CHECK(t.at_index(tr.e.index, x) == x);
      for (int x = tr.a.index; x <= t.n(); ++x) CHECK(t.at_index(tr.f.index, x) == x);
    }
  }
}

TEST_CASE("is_2uninorm combines the axioms with the neutral data") {
  CHECK(is_2uninorm(example_table(2, 6, 8, 10), NeutralTriple{{2}, {6}, {8}}));
  CHECK(is_2uninorm(min_table(2), NeutralTriple{{2}, {2}, {2}}));
  CHECK_FALSE(is_2uninorm(mean_table(4)));
  CHECK_FALSE(is_2uninorm(min_table(2), NeutralTriple{{0}, {1}, {2}}));
}

TEST_CASE("structural suite passes on known 2-uninorms") {
  CHECK(check_structural_props(example_table(3, 5, 7, 10), {{3}, {5}, {7}}).all_ok());
  CHECK(check_structural_props(min_table(4), {{4}, {4}, {4}}).all_ok());
  CHECK_THROWS_AS(check_structural_props(mean_table(4), {{0}, {2}, {4}}), PreconditionError);
}

TEST_CASE("witnesses from random tables re-evaluate as violations") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    OperatorTable t{make_grid(n)};
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) t.set(i, j, static_cast<std::uint8_t>(rng() % (n + 1)));

    if (const auto c = check_commutative(t); !c.ok)
      CHECK(t.at_index(c.witness->x.index, c.witness->y.index) !=
            t.at_index(c.witness->y.index, c.witness->x.index));
    if (const auto a = check_associative(t); !a.ok) {
      const int x = a.witness->x.index, y = a.witness->y.index, z = a.witness->z.index;
      CHECK(t.at_index(t.at_index(x, y), z) != t.at_index(x, t.at_index(y, z)));
    }
    if (const auto m = check_monotone(t); !m.ok) {
      const auto& w = *m.witness;
      if (w.axis == MonotoneAxis::Row)
        CHECK(t.at_index(w.fixed.index, w.at.index) > t.at_index(w.fixed.index, w.next.index));
      else
        CHECK(t.at_index(w.at.index, w.fixed.index) > t.at_index(w.next.index, w.fixed.index));
    }
  }
}
