#include "doctest.h"

#include <random>
#include <set>

#include "gw/group_expr.hpp"
#include "gw/width.hpp"

using namespace gw;

namespace {

PermGroup eval_str(const std::string &s) {
  return evaluate(*parse_group_expr(s));
}

} // namespace

TEST_CASE("chain cost") {
  PermGroup s4 = eval_str("S(4)");
  SubgroupChain chain = stabilizer_chain(eval_str("S(3)"));
  CHECK(chain.indices.size() == 2);
  CHECK(chain.indices[0] == 3);
  CHECK(chain.indices[1] == 2);
  CHECK(chain_cost(chain) == 3);

  SubgroupChain triv;
  triv.links.push_back(PermGroup::trivial(1));
  CHECK(chain_cost(triv) == 1);
}

TEST_CASE("stabilizer chain law") {
  // first index d, later ones strictly smaller
  for (const char *txt : {"A(4)", "S(5)", "C(5)", "wr(S(2),S(3))",
                          "onsets(S(5),2)", "D(6)"}) {
    PermGroup g = eval_str(txt);
    SubgroupChain chain = stabilizer_chain(g);
    chain.validate();
    CHECK(chain.strict());
    REQUIRE(!chain.indices.empty());
    CHECK(chain.indices[0] == g.degree());
    for (size_t i = 1; i < chain.indices.size(); ++i)
      CHECK(chain.indices[i] < g.degree());
  }
  // C5 regular: single index [5]
  SubgroupChain c5 = stabilizer_chain(eval_str("C(5)"));
  CHECK(c5.indices.size() == 1);
  CHECK(c5.indices[0] == 5);

  CHECK_THROWS(stabilizer_chain(eval_str("C(2) x C(2)")));
}

TEST_CASE("identify simple") {
  SimpleFactorId a5 = identify_simple(eval_str("A(5)"));
  CHECK(a5.display() == "A(5)");
  REQUIRE(a5.mu.has_value());
  CHECK(*a5.mu == 5);
  CHECK(a5.mu_provenance == SimpleFactorId::MuProvenance::exhaustive_search);

  SimpleFactorId c7 = identify_simple(eval_str("C(7)"));
  CHECK(c7.display() == "C(7)");
  CHECK(*c7.mu == 7);

  // PSL(2,7) as the Moebius action on the projective line over F7:
  // x -> x+1 and x -> -1/x, points 0..6 and infinity=7
  Perm t = Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6}});
  Perm s = Perm::from_cycles(8, {{0, 7}, {1, 6}, {2, 3}, {4, 5}});
  PermGroup psl27(8, {t, s});
  REQUIRE(psl27.order() == 168);
  SimpleFactorId id = identify_simple(psl27);
  CHECK(id.display() == "PSL(2,7)");
  REQUIRE(id.mu.has_value());
  CHECK(*id.mu == 7);
  CHECK(id.mu_provenance == SimpleFactorId::MuProvenance::exhaustive_search);

  // A(6) has order 360
  SimpleFactorId a6 = identify_simple(eval_str("A(6)"));
  CHECK(a6.display() == "A(6)");
  CHECK(*a6.mu == 6);

  // non-simple caller error
  CHECK_THROWS(identify_simple(eval_str("S(4)")));
}

TEST_CASE("mu exhaustive") {
  CHECK(mu_exhaustive(eval_str("C(2) x C(3)")).value() == 5);
  CHECK(mu_exhaustive(eval_str("A(5)")).value() == 5);
  CHECK(mu_exhaustive(eval_str("S(4)")).value() == 4);
  CHECK(mu_exhaustive(eval_str("C(6)")).value() == 5);  // same group as C2 x C3
  CHECK(mu_exhaustive(eval_str("C(4)")).value() == 4);
  CHECK(mu_exhaustive(eval_str("C(2) x C(2)")).value() == 4);
  CHECK(mu_exhaustive(PermGroup::trivial(4)).value() == 1);
  CHECK_FALSE(mu_exhaustive(eval_str("S(7)"), 2000).has_value());
}

TEST_CASE("width by factors") {
  // S(7): factors {C2, A7} -> width 7
  std::vector<SimpleFactorId> s7{SimpleFactorId::cyclic(2),
                                 SimpleFactorId::alternating(7)};
  CHECK(width_by_factors(s7).width == 7);

  // S(4): {C2,C3,C2,C2} -> 3
  std::vector<SimpleFactorId> s4{
      SimpleFactorId::cyclic(2), SimpleFactorId::cyclic(3),
      SimpleFactorId::cyclic(2), SimpleFactorId::cyclic(2)};
  CHECK(width_by_factors(s4).width == 3);

  // ten copies of C2 -> 2
  std::vector<SimpleFactorId> c2s(10, SimpleFactorId::cyclic(2));
  CHECK(width_by_factors(c2s).width == 2);

  // empty factor list: trivial group, width 1
  CHECK(width_by_factors({}).width == 1);

  // unknown mu degrades confidence
  SimpleFactorId unk;
  unk.label = SimpleFactorId::Label::unidentified;
  unk.order = 1234567891;
  unk.degree_bound = 40;
  WidthReport r = width_by_factors({SimpleFactorId::cyclic(2), unk});
  CHECK(r.confidence == Confidence::upper_bound_only);
  CHECK(r.width == 40);
}

TEST_CASE("width of groups") {
  CHECK(width(eval_str("S(4)")).width == 3);
  CHECK(width(eval_str("S(5)")).width == 5);
  CHECK(width(eval_str("A(4)")).width == 3);
  CHECK(width(eval_str("A(3)")).width == 3);
  CHECK(width(eval_str("C(1)")).width == 1);
  CHECK(width(eval_str("C(6)")).width == 3);
  CHECK(width(eval_str("onsets(S(6),3)")).width == 6);

  WidthReport fpp = width(eval_str("wr(S(2),S(10)) & alt"));
  CHECK(fpp.width == 10);
  CHECK(fpp.confidence == Confidence::proved);
}

TEST_CASE("width oracle") {
  WidthReport a4 = width_oracle(eval_str("A(4)"));
  CHECK(a4.width == 3);
  REQUIRE(a4.chain.has_value());
  a4.chain->validate();
  CHECK(chain_cost(*a4.chain) == 3);
  // witness: A4 > V4 > C2 > 1
  REQUIRE(a4.chain->links.size() == 4);
  CHECK(a4.chain->links[1].order() == 4);
  CHECK(a4.chain->links[2].order() == 2);

  CHECK(width_oracle(eval_str("C(6)")).width == 3);
  CHECK(width_oracle(eval_str("S(4)")).width == 3);
  CHECK(width_oracle(eval_str("A(5)")).width == 5);
  CHECK(width_oracle(eval_str("C(2) x C(3)")).width == 3);
  CHECK(width_oracle(eval_str("C(1)")).width == 1);

  // the S5 stabilizer chain costs 5; the oracle cannot do better
  CHECK(chain_cost(stabilizer_chain(eval_str("S(5)"))) == 5);
  CHECK(width_oracle(eval_str("S(5)")).width == 5);

  CHECK_THROWS(width_oracle(eval_str("S(7)"), 2000));
}

TEST_CASE("theorem width equals oracle width on small groups") {
  for (const char *txt :
       {"S(4)", "A(4)", "D(6)", "C(12)", "S(3) x C(4)", "wr(S(2),S(3))",
        "onsets(S(4),2)", "C(30)", "D(4)", "A(5)", "S(5)", "wr(C(2),C(3))",
        "wr(C(3),C(2))", "D(5)", "C(7)", "S(3) x S(3)"}) {
    CAPTURE(txt);
    PermGroup g = eval_str(txt);
    CHECK(width(g).width == width_oracle(g).width);
  }
}

TEST_CASE("theorem width equals oracle width on random subgroups") {
  std::mt19937_64 rng(20260810);
  int tested = 0;
  while (tested < 30) {
    unsigned n = 5 + static_cast<unsigned>(rng() % 4);
    PermGroup s = eval_str("S(" + std::to_string(n) + ")");
    std::vector<Perm> gens;
    unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned i = 0; i < k; ++i)
      gens.push_back(s.random_element(rng));
    PermGroup h(n, gens);
    if (h.order() > 2000)
      continue;
    CHECK(width(h).width == width_oracle(h, 2000).width);
    ++tested;
  }
}

TEST_CASE("monotonicity on random subgroups") {
  std::mt19937_64 rng(2024);
  for (unsigned n : {5u, 6u}) {
    PermGroup g = eval_str("S(" + std::to_string(n) + ")");
    unsigned wg = width(g).width;
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Perm> gens;
      unsigned k = 1 + static_cast<unsigned>(rng() % 3);
      for (unsigned i = 0; i < k; ++i)
        gens.push_back(g.random_element(rng));
      PermGroup h(n, gens);
      CHECK(width(h).width <= wg);
    }
  }
}

TEST_CASE("large unidentified factors degrade to an upper bound") {
  // PSL(2,127) via the Moebius action on the projective line: order
  // 127*128*126/2 = 1024128 exceeds the identification table bound, so the
  // report can only carry the faithful degree as an upper bound.
  const uint32_t q = 127, inf = 127;
  auto inv_mod = [&](uint32_t a) {
    uint32_t r = 1;
    for (uint32_t e = q - 2; e; e >>= 1) {
      if (e & 1)
        r = r * a % q;
      a = a * a % q;
    }
    return r;
  };
  std::vector<uint32_t> t(q + 1), s(q + 1);
  for (uint32_t x = 0; x < q; ++x)
    t[x] = (x + 1) % q;
  t[inf] = inf;
  s[0] = inf;
  s[inf] = 0;
  for (uint32_t x = 1; x < q; ++x)
    s[x] = (q - inv_mod(x)) % q;
  PermGroup psl(q + 1, {Perm(std::move(t)), Perm(std::move(s))});
  CHECK(psl.order() == 1024128);

  WidthReport r = width(psl);
  CHECK(r.confidence == Confidence::upper_bound_only);
  CHECK(r.width == 128); // degree of the given action
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].label == SimpleFactorId::Label::unidentified);
  CHECK_FALSE(r.factors[0].mu.has_value());
}

TEST_CASE("decomposition width") {
  WidthReport a, b;
  a.width = 10;
  b.width = 2;
  CHECK(decomposition_width(a, b).width == 10);
  b.width = 1;
  CHECK(decomposition_width(a, b).width == 10);
  a.width = 3;
  b.width = 3;
  CHECK(decomposition_width(a, b).width == 3);
  b.confidence = Confidence::heuristic_lower_bound;
  CHECK(decomposition_width(a, b).confidence ==
        Confidence::heuristic_lower_bound);
}

TEST_CASE("wreath splitting law") {
  // width(wr(G,H)) = max(width(G), width(H))
  const std::pair<const char *, const char *> pairs[] = {
      {"S(2)", "S(3)"}, {"S(4)", "S(2)"}, {"C(3)", "C(2)"},
      {"S(3)", "S(3)"}, {"C(2)", "S(4)"}};
  for (auto [a, b] : pairs) {
    PermGroup g = eval_str(std::string("wr(") + a + "," + b + ")");
    unsigned wa = width(eval_str(a)).width;
    unsigned wb = width(eval_str(b)).width;
    CHECK(width(g).width == std::max(wa, wb));
  }
}

TEST_CASE("quotient mu law") {
  // for recursion pairs (H, N) with simple quotient and exhaustive mu
  // values: mu(H/N) <= mu(H)
  unsigned checked = 0;
  for (const char *txt : {"S(4)", "A(4)", "C(12)", "wr(S(2),S(3))", "D(6)",
                          "S(3) x C(4)"}) {
    PermGroup g = eval_str(txt);
    std::vector<SeriesSplit> splits;
    StructureOptions opts;
    composition_series(g, opts, &splits);
    for (const SeriesSplit &s : splits) {
      if (s.group.order() > 2000 || s.quotient.order() > 2000)
        continue;
      if (s.quotient.order() > 1 && !is_simple(s.quotient))
        continue;
      auto mu_h = mu_exhaustive(s.group);
      auto mu_q = mu_exhaustive(s.quotient);
      REQUIRE(mu_h.has_value());
      REQUIRE(mu_q.has_value());
      CHECK(*mu_q <= *mu_h);
      ++checked;
    }
  }
  CHECK(checked >= 6);
}

TEST_CASE("solvable law") {
  for (const char *txt : {"S(4)", "C(12)", "D(6)", "wr(S(2),S(3))", "C(30)",
                          "wr(S(4),S(2))", "D(4)", "C(8)", "S(3) x C(4)",
                          "wr(C(2),C(3))"}) {
    PermGroup g = eval_str(txt);
    REQUIRE(is_solvable(g));
    CHECK(width(g).width == largest_prime_factor(g.order()));
  }
}
