#include "doctest.h"

#include <random>

#include "gw/galois.hpp"
#include "gw/zfactor.hpp"

using namespace gw;

namespace {

ZPoly poly(std::initializer_list<long> ascending) {
  std::vector<mpz_class> v;
  for (long c : ascending)
    v.emplace_back(c);
  return ZPoly(std::move(v));
}

// the degree-6 maximum-likelihood polynomial, ascending coefficients
ZPoly ml_poly() {
  return poly({5670, 170397, 434717, -2105058, -2310180, 4127767, 1126944});
}

} // namespace

TEST_CASE("certify x^3 - 2 as S3") {
  GaloisCertificate cert = certify_group(poly({-2, 0, 0, 1}));
  CHECK(cert.claim == GaloisCertificate::Claim::symmetric);
  CHECK(cert.n == 3);
  CHECK_FALSE(cert.discriminant_square);
  CHECK(cert.disc == -108);
  CHECK(cert.transposition_witness.has_value());
  WidthReport r = width_from_certificate(cert);
  CHECK(r.width == 3);
  CHECK(r.confidence == Confidence::proved);
}

TEST_CASE("certify the degree-6 ML polynomial as S6") {
  GaloisCertificate cert = certify_group(ml_poly());
  CHECK(cert.claim == GaloisCertificate::Claim::symmetric);
  CHECK(cert.n == 6);
  CHECK(cert.prime_cycle_witness.has_value());
  CHECK(cert.prime_cycle_length == 5);
  CHECK(cert.transposition_witness.has_value());
  WidthReport r = width_from_certificate(cert);
  CHECK(r.width == 6);
  CHECK(r.confidence == Confidence::proved);
}

TEST_CASE("quadratics certify immediately") {
  WidthReport r = width_of_polynomial(poly({-2, 0, 1})); // x^2 - 2
  CHECK(r.width == 2);
  CHECK(r.confidence == Confidence::proved);
}

TEST_CASE("cyclotomic Phi_5 stays undetermined with a sound lower bound") {
  GaloisCertificate cert = certify_group(poly({1, 1, 1, 1, 1}));
  CHECK(cert.claim == GaloisCertificate::Claim::undetermined);
  // Gal = C4: only cycle types {1,1,1,1}, {2,2}, {4} can occur
  for (const CycleTypeEvidence &ev : cert.evidence) {
    bool ok = ev.factor_degrees == std::vector<unsigned>{1, 1, 1, 1} ||
              ev.factor_degrees == std::vector<unsigned>{2, 2} ||
              ev.factor_degrees == std::vector<unsigned>{4};
    CHECK(ok);
  }
  WidthReport r = width_from_certificate(cert);
  CHECK(r.confidence == Confidence::heuristic_lower_bound);
  CHECK(r.width == 2); // true width of C4; the report must not overclaim
}

TEST_CASE("alternating certification via square discriminant") {
  // x^3 - 3x - 1: disc = 81, Galois group A3
  ZPoly f = poly({-1, -3, 0, 1});
  CHECK(discriminant(f) == 81);
  GaloisCertificate cert = certify_group(f);
  CHECK(cert.discriminant_square);
  CHECK(cert.claim == GaloisCertificate::Claim::alternating);
  CHECK(width_from_certificate(cert).width == 3);
}

TEST_CASE("reducible input reports factors") {
  try {
    certify_group(poly({-1, 0, 0, 0, 1})); // x^4 - 1
    CHECK(false);
  } catch (const ReduciblePolynomial &e) {
    CHECK(e.factors().size() == 3);
  }
}

TEST_CASE("non-squarefree input is rejected") {
  CHECK_THROWS_AS(certify_group(poly({1, 2, 1})), std::invalid_argument);
}

TEST_CASE("symmetric claim excludes square discriminants") {
  // mutual exclusion: a symmetric certificate never coexists with a square
  // discriminant (Frobenius transpositions are odd)
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<mpz_class> c;
    int d = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < d; ++i)
      c.emplace_back(static_cast<long>(rng() % 21) - 10);
    c.emplace_back(1);
    ZPoly f{c};
    if (gcd(f, f.derivative()).degree() > 0)
      continue;
    GaloisOptions opts;
    opts.prime_budget = 300;
    try {
      GaloisCertificate cert = certify_group(f, opts);
      if (cert.claim == GaloisCertificate::Claim::symmetric && cert.n >= 2)
        CHECK_FALSE(cert.discriminant_square);
      CHECK(is_perfect_square(cert.disc) == cert.discriminant_square);
    } catch (const ReduciblePolynomial &) {
      continue;
    }
  }
}

TEST_CASE("specialization consistency for x^3 - p") {
  // random non-cube specializations all certify S3, width 3
  std::mt19937_64 rng(53);
  int done = 0;
  while (done < 25) {
    long long v = static_cast<long long>(rng() % 2000001) - 1000000;
    if (v == 0)
      continue;
    mpz_class pv(static_cast<long>(v));
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), pv.get_mpz_t(), 3) != 0)
      continue; // exact cube
    ZPoly f({mpz_class(-pv), mpz_class(0), mpz_class(0), mpz_class(1)});
    WidthReport r = width_of_polynomial(f);
    CHECK(r.width == 3);
    CHECK(r.confidence == Confidence::proved);
    ++done;
  }
}

TEST_CASE("linear polynomials have width 1") {
  WidthReport r = width_of_polynomial(poly({5, 3}));
  CHECK(r.width == 1);
  CHECK(r.confidence == Confidence::proved);
}
