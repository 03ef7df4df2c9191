#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "gw/group_expr.hpp"
#include "gw/structure.hpp"

using namespace gw;

namespace {

PermGroup eval_str(const std::string &s) {
  return evaluate(*parse_group_expr(s));
}

std::multiset<std::string> factor_names(const std::vector<SimpleFactorId> &v) {
  std::multiset<std::string> out;
  for (const auto &f : v)
    out.insert(f.display());
  return out;
}

} // namespace

TEST_CASE("normal closure") {
  PermGroup s4 = eval_str("S(4)");
  PermGroup v4 = normal_closure(s4, {Perm::parse_cycles("(1 2)(3 4)", 4)});
  CHECK(v4.order() == 4);

  PermGroup s5 = eval_str("S(5)");
  PermGroup a5 = normal_closure(s5, {Perm::parse_cycles("(1 2 3)", 5)});
  CHECK(a5.order() == 60);

  PermGroup triv = normal_closure(s5, {Perm(5)});
  CHECK(triv.order() == 1);

  CHECK_THROWS(normal_closure(eval_str("A(4)"), {Perm::parse_cycles("(1 2)", 4)}));
}

TEST_CASE("derived subgroup and solvability") {
  CHECK(derived_subgroup(eval_str("S(4)")).order() == 12);
  CHECK(derived_subgroup(eval_str("A(5)")).order() == 60);
  CHECK(derived_subgroup(eval_str("C(12)")).order() == 1);
  CHECK(is_solvable(eval_str("S(4)")));
  CHECK(is_solvable(eval_str("C(12)")));
  CHECK(is_solvable(eval_str("wr(S(4),S(2))")));
  CHECK_FALSE(is_solvable(eval_str("A(5)")));
  CHECK_FALSE(is_solvable(eval_str("S(6)")));
}

TEST_CASE("is_simple") {
  CHECK(is_simple(eval_str("A(5)")));
  CHECK_FALSE(is_simple(eval_str("A(4)")));
  CHECK(is_simple(eval_str("C(7)")));
  CHECK_FALSE(is_simple(eval_str("C(6)")));
  CHECK_FALSE(is_simple(eval_str("S(5)")));
  CHECK(is_simple(eval_str("A(6)")));
  CHECK_THROWS(is_simple(PermGroup::trivial(3)));
  // above the exhaustive bound: the documented randomized sampling
  CHECK(is_simple(eval_str("A(10)")));
  CHECK_FALSE(is_simple(eval_str("S(10)")));
  CHECK_FALSE(is_simple(eval_str("wr(S(2),S(10)) & alt")));
}

TEST_CASE("find_proper_normal tactics") {
  // block-action kernel of the five-point-pose group: order 2^9
  PermGroup fpp = eval_str("wr(S(2),S(10)) & alt");
  auto n = find_proper_normal(fpp);
  REQUIRE(n.has_value());
  CHECK(n->order() == 512);
  CHECK(n->is_even_subgroup());
  // elementary abelian: all nontrivial elements have order 2
  CHECK(derived_subgroup(*n).order() == 1);

  // derived subgroup route for S(4)
  auto a4 = find_proper_normal(eval_str("S(4)"));
  REQUIRE(a4.has_value());
  CHECK(a4->order() == 12);

  CHECK_FALSE(find_proper_normal(eval_str("A(5)")).has_value());
}

TEST_CASE("quotient realizations") {
  PermGroup s4 = eval_str("S(4)");
  PermGroup v4 = normal_closure(s4, {Perm::parse_cycles("(1 2)(3 4)", 4)});
  QuotientRealization q = quotient(s4, v4);
  CHECK(q.quotient.order() == 6);
  CHECK_FALSE(is_solvable(q.quotient) == false); // S3 is solvable
  // nonabelian of order 6 => S3
  CHECK(derived_subgroup(q.quotient).order() == 3);
  CHECK(q.kernel_witness.order() == 4);

  // projection is a homomorphism on random words
  std::mt19937_64 rng(5);
  const auto &gens = s4.generators();
  for (int trial = 0; trial < 100; ++trial) {
    Perm w(s4.degree()), wq(q.quotient.degree());
    for (int step = 0; step < 6; ++step) {
      size_t k = rng() % gens.size();
      w = gens[k] * w;
      wq = q.projected_gens[k] * wq;
    }
    // lift of image times inverse of word lies in the kernel
    Perm l = q.lift(wq);
    CHECK(v4.contains(l.inverse() * w));
  }

  // block action image: five-point-pose modulo its block kernel = S(10)
  PermGroup fpp = eval_str("wr(S(2),S(10)) & alt");
  auto n = find_proper_normal(fpp);
  REQUIRE(n.has_value());
  QuotientRealization qb = quotient(fpp, *n);
  CHECK(qb.quotient.degree() == 10);
  mpz_class f10 = 1;
  for (int i = 2; i <= 10; ++i)
    f10 *= i;
  CHECK(qb.quotient.order() == f10);

  // order identity |G| = |Q| * |N|
  CHECK(qb.quotient.order() * qb.kernel_witness.order() == fpp.order());

  // G / G is trivial
  QuotientRealization qq = quotient(s4, s4);
  CHECK(qq.quotient.order() == 1);

  // non-normal N rejected
  PermGroup s3_in_s4(4, {Perm::parse_cycles("(1 2)", 4),
                         Perm::parse_cycles("(1 2 3)", 4)});
  CHECK_THROWS(quotient(s4, s3_in_s4));

  // coset-action cap: S4 / V4 has index 6 and no smaller action realizes it
  StructureOptions capped;
  capped.coset_cap = 3;
  CHECK_THROWS(quotient(s4, v4, capped));
}

TEST_CASE("composition series") {
  StructureOptions opts;

  // S4 -> factors C2, C3, C2, C2 in chain order
  CompositionSeries s = composition_series(eval_str("S(4)"), opts);
  s.verify(opts);
  auto f = s.factors();
  REQUIRE(f.size() == 4);
  CHECK(f[0].display() == "C(2)");
  CHECK(f[1].display() == "C(3)");
  CHECK(f[2].display() == "C(2)");
  CHECK(f[3].display() == "C(2)");

  // C12 -> {C2, C2, C3}
  CompositionSeries c = composition_series(eval_str("C(12)"), opts);
  c.verify(opts);
  CHECK(factor_names(c.factors()) ==
        std::multiset<std::string>{"C(2)", "C(2)", "C(3)"});

  // five-point-pose group: {C2 x 10, A(10)}
  CompositionSeries fpp = composition_series(eval_str("wr(S(2),S(10)) & alt"), opts);
  fpp.verify(opts);
  std::multiset<std::string> expect;
  for (int i = 0; i < 10; ++i)
    expect.insert("C(2)");
  expect.insert("A(10)");
  CHECK(factor_names(fpp.factors()) == expect);

  // trivial group: empty series
  CHECK(composition_series(PermGroup::trivial(2), opts).links.empty());

  // a too-small coset cap yields a partial series with a failure marker
  StructureOptions strangled;
  strangled.coset_cap = 1;
  CompositionSeries partial = composition_series(eval_str("S(4)"), strangled);
  CHECK_FALSE(partial.complete);
  CHECK(!partial.failure.empty());
  CHECK_THROWS(partial.verify(strangled));
}

TEST_CASE("factor multiset is independent of the series found") {
  // Jordan-Hoelder: product of factor orders = |G| and multiset stable
  StructureOptions opts;
  for (const char *txt : {"S(4)", "C(12)", "wr(S(2),S(3))", "D(6)",
                          "S(3) x C(4)", "A(4)"}) {
    PermGroup g = eval_str(txt);
    CompositionSeries s = composition_series(g, opts);
    s.verify(opts);
    mpz_class prod = 1;
    for (const auto &id : s.factors())
      prod *= id.order;
    CHECK(prod == g.order());
  }
}

TEST_CASE("factor multiset is independent of tactic order") {
  // Jordan-Hoelder: shuffle the proper-normal tactics and compare
  std::vector<std::vector<NormalTactic>> orders = {
      {NormalTactic::orbit_kernel, NormalTactic::block_kernel,
       NormalTactic::derived, NormalTactic::closures},
      {NormalTactic::closures, NormalTactic::derived,
       NormalTactic::block_kernel, NormalTactic::orbit_kernel},
      {NormalTactic::derived, NormalTactic::closures,
       NormalTactic::orbit_kernel, NormalTactic::block_kernel},
      {NormalTactic::block_kernel, NormalTactic::orbit_kernel,
       NormalTactic::closures, NormalTactic::derived},
  };
  for (const char *txt : {"S(4)", "C(12)", "wr(S(2),S(3))", "wr(S(4),S(2))",
                          "S(3) x C(4)", "A(4)", "onsets(S(4),2)"}) {
    PermGroup g = eval_str(txt);
    std::multiset<std::string> reference;
    for (size_t i = 0; i < orders.size(); ++i) {
      StructureOptions opts;
      opts.tactics = orders[i];
      CompositionSeries s = composition_series(g, opts);
      s.verify(opts);
      auto names = factor_names(s.factors());
      if (i == 0)
        reference = names;
      else
        CHECK(names == reference);
    }
  }
}

TEST_CASE("composition series on random subgroups is robust") {
  std::mt19937_64 rng(99);
  PermGroup s6 = eval_str("S(6)");
  StructureOptions opts;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Perm> gens;
    for (int i = 0; i < 2; ++i)
      gens.push_back(s6.random_element(rng));
    PermGroup h(6, gens);
    CompositionSeries s = composition_series(h, opts);
    s.verify(opts);
    mpz_class prod = 1;
    for (const auto &id : s.factors())
      prod *= id.order;
    CHECK(prod == h.order());
  }
}
