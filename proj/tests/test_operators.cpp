#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unimig/axioms.hpp"
#include "unimig/operators.hpp"

using namespace unimig;

namespace {

SpecPtr example_spec(const Fraction& e, const Fraction& a, const Fraction& f) {
  return make_spec(Example2Uninorm{e, a, f});
}

GridPoint eval(const SpecPtr& s, const UnitGrid& g, int i, int j) {
  return evaluate(*s, g, {i}, {j});
}

}  // namespace

TEST_CASE("min has neutral element 1") {
  const UnitGrid g = make_grid(7);
  const auto s = make_spec(MinOp{});
  for (int i = 0; i <= 7; ++i) CHECK(eval(s, g, i, 7).index == i);
}

TEST_CASE("example operator matches its piecewise regions") {
  const UnitGrid g10 = make_grid(10);
  const auto u2 = example_spec({3, 10}, {1, 2}, {7, 10});
  CHECK(eval(u2, g10, 2, 7).index == 5);  // absorbing mixed block
  const auto u1 = example_spec({1, 5}, {3, 5}, {4, 5});
  CHECK(eval(u1, g10, 8, 7).index == 7);  // min block [a,f]^2
  CHECK(eval(u1, g10, 1, 1).index == 1);  // min block [0,e]^2
  CHECK(eval(u1, g10, 1, 9).index == 9);  // max otherwise
}

TEST_CASE("example regions agree wherever they overlap") {
  // First-match precedence is only sound because the regions agree on their
  // shared boundary lines; check that cell by cell.
  const int e = 4, a = 12, f = 16;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const bool min_block = (i <= e && j <= e) || (a <= i && i <= f && a <= j && j <= f);
      const bool a_block = (i <= a && a <= j && j <= f) || (a <= i && i <= f && j <= a);
      if (min_block && a_block) CHECK(std::min(i, j) == a);
    }
}

TEST_CASE("discretize tabulates evaluate") {
  const UnitGrid g = make_grid(10);
  const auto spec = example_spec({3, 10}, {1, 2}, {7, 10});
  const OperatorTable t = discretize(*spec, g);
  CHECK(t.at_index(2, 7) == 5);
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j)
      CHECK(t.at_index(i, j) == eval(spec, g, i, j).index);

  const OperatorTable tmin = discretize(*make_spec(MinOp{}), make_grid(2));
  CHECK(tmin.at_index(2, 0) == 0);
  CHECK(tmin.at_index(2, 1) == 1);
  CHECK(tmin.at_index(2, 2) == 2);
}

TEST_CASE("product needs a compatible grid in exact mode") {
  CHECK_THROWS_AS(discretize(*make_spec(ProductOp{}), make_grid(2)), NotOnGridError);
  // ... and the default float eps does not bail it out either: 1/4 is far
  // from every carrier point of {0, 1/2, 1}.
  CHECK_THROWS_AS(discretize(*make_spec(ProductOp{}), make_grid(2), ToleranceConfig::floating()),
                  NotOnGridError);
}

TEST_CASE("rescale_into maps endpoints and interior cells") {
  const UnitGrid g2 = make_grid(2);
  const PartialTable lo_min = rescale_into(*make_spec(MinOp{}), g2, {0}, {1});
  CHECK(lo_min.value({1}, {1}).index == 1);

  const PartialTable hi_max = rescale_into(*make_spec(MaxOp{}), g2, {1}, {2});
  CHECK(hi_max.value({1}, {2}).index == 2);

  const UnitGrid g4 = make_grid(4);
  const PartialTable luk = rescale_into(*make_spec(LukasiewiczOp{}), g4, {0}, {2});
  CHECK(luk.value({1}, {1}).index == 0);

  CHECK_THROWS_AS(rescale_into(*make_spec(ProductOp{}), make_grid(3), {0}, {2}), NotOnGridError);
  CHECK_THROWS_AS(rescale_into(*make_spec(MinOp{}), g4, {2}, {2}), PreconditionError);
}

TEST_CASE("duality against closed forms") {
  const UnitGrid g = make_grid(6);
  const OperatorTable max_t = discretize(*make_spec(MaxOp{}), g);
  const OperatorTable dual_min = discretize(*make_spec(DualConorm{make_spec(MinOp{})}), g);
  CHECK(max_t == dual_min);

  // Dual of Lukasiewicz is the bounded sum min(1, x+y).
  const OperatorTable bs = discretize(*make_spec(DualConorm{make_spec(LukasiewiczOp{})}), g);
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) CHECK(bs.at_index(i, j) == std::min(6, i + j));
}

TEST_CASE("classify follows the documented first-match order") {
  const UnitGrid g = make_grid(10);
  auto tri = [](int e, int a, int f) { return NeutralTriple{{e}, {a}, {f}}; };
  CHECK(classify(tri(10, 10, 10), g) == SubclassTag::TNorm);
  CHECK(classify(tri(0, 0, 0), g) == SubclassTag::TConorm);
  CHECK(classify(tri(4, 4, 4), g) == SubclassTag::Uninorm);
  CHECK(classify(tri(4, 10, 10), g) == SubclassTag::Uninorm);
  CHECK(classify(tri(0, 0, 4), g) == SubclassTag::Uninorm);
  CHECK(classify(tri(0, 6, 10), g) == SubclassTag::Nullnorm);
  CHECK(classify(tri(2, 6, 10), g) == SubclassTag::UniNullnorm);
  CHECK(classify(tri(0, 4, 8), g) == SubclassTag::NullUninorm);
  CHECK(classify(tri(2, 6, 8), g) == SubclassTag::General2Uninorm);
}

TEST_CASE("uninorm and nullnorm constructions assemble their blocks") {
  const UnitGrid g = make_grid(8);
  const auto tmin = make_spec(MinOp{});
  const auto smax = make_spec(MaxOp{});

  const auto umin = make_spec(UninormMinClass{{1, 2}, tmin, smax});
  CHECK(eval(umin, g, 2, 3).index == 2);   // mixed -> min
  CHECK(eval(umin, g, 6, 7).index == 7);   // conorm block
  CHECK(eval(umin, g, 1, 2).index == 1);   // t-norm block
  for (int i = 0; i <= 8; ++i) CHECK(eval(umin, g, 4, i).index == i);  // neutral 1/2

  const auto umax = make_spec(UninormMaxClass{{1, 2}, tmin, smax});
  CHECK(eval(umax, g, 2, 6).index == 6);  // mixed -> max
  for (int i = 0; i <= 8; ++i) CHECK(eval(umax, g, 4, i).index == i);

  const auto nn = make_spec(NullnormSpec{{1, 2}, smax, tmin});
  CHECK(eval(nn, g, 1, 3).index == 3);    // conorm below a
  CHECK(eval(nn, g, 5, 7).index == 5);    // t-norm above a
  CHECK(eval(nn, g, 1, 7).index == 4);    // absorbing mixed block
  for (int i = 0; i <= 8; ++i) CHECK(eval(nn, g, 4, i).index == 4);
  CHECK(canonical_triple(*nn, g) == NeutralTriple{{0}, {4}, {8}});
}

TEST_CASE("glued construction is gated by the axiom suite") {
  const UnitGrid g = make_grid(8);
  const auto tmin = make_spec(MinOp{});
  const auto smax = make_spec(MaxOp{});
  // Disjunctive low part, conjunctive high part: passes.
  const auto good = make_spec(GluedTwoUninorm{
      {1, 2}, make_spec(UninormMaxClass{{1, 2}, tmin, smax}),
      make_spec(UninormMinClass{{1, 2}, tmin, smax})});
  const OperatorTable t = discretize(*good, g);
  const auto triple = canonical_triple(*good, g);
  REQUIRE(triple.has_value());
  CHECK(*triple == NeutralTriple{{2}, {4}, {6}});
  CHECK(is_2uninorm(t, *triple));

  // A min-class low part keeps its own top row instead of saturating to a,
  // which breaks associativity across the seam.
  const auto bad = make_spec(GluedTwoUninorm{
      {1, 2}, make_spec(UninormMinClass{{1, 2}, tmin, smax}),
      make_spec(UninormMinClass{{1, 2}, tmin, smax})});
  CHECK_THROWS_AS(discretize(*bad, g), ConstructionError);
}

TEST_CASE("example operator is a 2-uninorm with its own triple") {
  const UnitGrid g = make_grid(10);
  for (auto [e, a, f] : {std::tuple{2, 6, 8}, std::tuple{3, 5, 7}}) {
    const auto spec = example_spec({e, 10}, {a, 10}, {f, 10});
    const OperatorTable t = discretize(*spec, g);
    CHECK(is_2uninorm(t, NeutralTriple{{e}, {a}, {f}}));
    CHECK(canonical_triple(*spec, g) == NeutralTriple{{e}, {a}, {f}});
  }
}

TEST_CASE("float evaluation matches the exact tables at carrier points") {
  const UnitGrid g = make_grid(20);
  const auto spec = example_spec({1, 5}, {3, 5}, {4, 5});
  const OperatorTable exact = discretize(*spec, g);
  const OperatorTable floated = discretize(*spec, g, ToleranceConfig::floating());
  CHECK(exact == floated);
  CHECK(evaluate_real(*spec, 0.25, 0.9) == doctest::Approx(0.9));
  CHECK(evaluate_real(*spec, 0.55, 0.7) == doctest::Approx(0.6));
  CHECK_THROWS_AS(evaluate_real(*spec, 1.25, 0.5), OutOfRangeError);
}

TEST_CASE("table specs bind to their grid") {
  const UnitGrid g = make_grid(2);
  const OperatorTable t = discretize(*make_spec(MinOp{}), g);
  const auto spec = make_spec(TableSpec{t});
  CHECK(discretize(*spec, g) == t);
  CHECK_THROWS_AS(discretize(*spec, make_grid(3)), ValidationError);
  CHECK_THROWS_AS(evaluate_real(*spec, 0.1, 0.2), ValidationError);
}
