#include "doctest.h"

#include <cmath>

#include "gw/galois.hpp"
#include "gw/monodromy.hpp"

using namespace gw;

TEST_CASE("branch points from exact discriminants") {
  ParametricFamily cube = ParametricFamily::parse("y^3 - p");
  auto ws = branch_points(cube);
  REQUIRE(ws.size() == 1);
  CHECK(std::abs(ws[0]) < 1e-9);

  ParametricFamily square = ParametricFamily::parse("y^2 - p");
  auto ws2 = branch_points(square);
  REQUIRE(ws2.size() == 1);
  CHECK(std::abs(ws2[0]) < 1e-9);

  // y^3 + p y + p: branch points at 0 and -27/4
  ParametricFamily f = ParametricFamily::parse("y^3 + p*y + p");
  auto ws3 = branch_points(f);
  REQUIRE(ws3.size() == 2);
  CHECK(std::abs(ws3[0] - cplx(-6.75, 0)) < 1e-9);
  CHECK(std::abs(ws3[1]) < 1e-9);

  // a family with identically vanishing discriminant is rejected
  CHECK_THROWS(branch_points(ParametricFamily::parse("y^2 - 2*p*y + p^2")));
}

TEST_CASE("square root sheets swap") {
  ParametricFamily fam = ParametricFamily::parse("y^2 - p");
  MonodromyResult m = monodromy_group(fam);
  REQUIRE(m.loop_permutations.size() == 1);
  CHECK(m.loop_permutations[0].str() == "(1 2)");
  CHECK(m.group.order() == 2);
  CHECK(m.transitive());
}

TEST_CASE("cube root family gives the 3-cycle group") {
  ParametricFamily fam = ParametricFamily::parse("y^3 - p");
  MonodromyResult m = monodromy_group(fam);
  REQUIRE(m.loop_permutations.size() == 1);
  CHECK(m.loop_permutations[0].cycle_type()[0] == 3);
  CHECK(m.group.order() == 3);
  CHECK(m.transitive());
  CHECK(m.group.is_even_subgroup()); // A3
}

TEST_CASE("contractible loop is the identity") {
  ParametricFamily fam = ParametricFamily::parse("y^3 + p*y + p");
  // small square far from both branch points
  std::vector<cplx> path{{10, 10}, {11, 10}, {11, 11}, {10, 11}, {10, 10}};
  CHECK(track_loop(fam, path).is_identity());
}

TEST_CASE("depressed cubic family has full monodromy S3") {
  ParametricFamily fam = ParametricFamily::parse("y^3 + p*y + p");
  MonodromyResult m = monodromy_group(fam);
  CHECK(m.group.order() == 6);
  CHECK(m.transitive());
}

TEST_CASE("loop composition equals the big circle") {
  // for y^d - p the big circle is a d-cycle and there is a single petal
  for (const char *txt : {"y^2 - p", "y^3 - p", "y^4 - p"}) {
    ParametricFamily fam = ParametricFamily::parse(txt);
    MonodromyResult m = monodromy_group(fam);
    Perm big = big_circle_permutation(fam);
    CHECK(big.cycle_type()[0] == fam.fiber_degree());
    Perm prod(fam.fiber_degree());
    for (const Perm &s : m.loop_permutations)
      prod = s * prod; // concatenation order: earlier petals act first
    CHECK(prod == big);
  }
  // two branch points: composition in petal order must still match
  ParametricFamily fam = ParametricFamily::parse("y^3 + p*y + p");
  MonodromyResult m = monodromy_group(fam);
  Perm prod(3);
  for (const Perm &s : m.loop_permutations)
    prod = s * prod;
  CHECK(prod == big_circle_permutation(fam));
}

TEST_CASE("determinism across repeated runs") {
  for (int run = 0; run < 2; ++run) {
    MonodromyResult a = monodromy_group(ParametricFamily::parse("y^3 + p*y + p"));
    MonodromyResult b = monodromy_group(ParametricFamily::parse("y^3 + p*y + p"));
    REQUIRE(a.loop_permutations.size() == b.loop_permutations.size());
    for (size_t i = 0; i < a.loop_permutations.size(); ++i)
      CHECK(a.loop_permutations[i] == b.loop_permutations[i]);
    CHECK(a.fiber == b.fiber);
  }
}

TEST_CASE("family widths") {
  CHECK(family_width(ParametricFamily::parse("y^3 - p")).width == 3);
  CHECK(family_width(ParametricFamily::parse("y^2 - p")).width == 2);
  WidthReport r = family_width(ParametricFamily::parse("y^3 + p*y + p"));
  CHECK(r.width == 3); // S3 factors {C2, C3}
  CHECK(r.confidence == Confidence::heuristic_lower_bound);
}

TEST_CASE("quintic family: numerical group matches exact certification") {
  // y^5 - p y - p: monodromy gives S5 numerically; a rational
  // specialization certifies S5 exactly, and the family width never
  // exceeds the specialized width
  ParametricFamily fam = ParametricFamily::parse("y^5 - p*y - p");
  MonodromyResult m = monodromy_group(fam);
  CHECK(m.group.order() == 120);
  WidthReport family = family_width(fam);
  CHECK(family.width == 5);

  ZPoly spec = fam.f.eval_y_poly(mpz_class(7)); // p = 7
  WidthReport exact = width_of_polynomial(spec);
  CHECK(exact.confidence == Confidence::proved);
  CHECK(exact.width == 5);
  CHECK(family.width <= exact.width);
}
