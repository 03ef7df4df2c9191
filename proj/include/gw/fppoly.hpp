#ifndef GW_FPPOLY_HPP
#define GW_FPPOLY_HPP

#include <cstdint>
#include <vector>

#include "gw/zpoly.hpp"

namespace gw {

// Univariate polynomials over F_p, p an odd prime or 2, p < 2^31.
// Coefficients ascending, trimmed, reduced into [0, p).
struct FpPoly {
  uint64_t p = 0;
  std::vector<uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint64_t lc() const { return c.empty() ? 0 : c.back(); }
  void trim();
  FpPoly monic() const;
};

FpPoly fp_from_zpoly(const ZPoly &f, uint64_t p);
ZPoly fp_to_zpoly(const FpPoly &f);                  // coefficients in [0,p)
ZPoly fp_to_zpoly_symmetric(const FpPoly &f);        // coefficients in (-p/2, p/2]

FpPoly fp_add(const FpPoly &a, const FpPoly &b);
FpPoly fp_sub(const FpPoly &a, const FpPoly &b);
FpPoly fp_mul(const FpPoly &a, const FpPoly &b);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly &a, const FpPoly &b);
FpPoly fp_mod(const FpPoly &a, const FpPoly &b);
FpPoly fp_gcd(FpPoly a, FpPoly b);                   // monic
FpPoly fp_powmod(const FpPoly &base, const mpz_class &e, const FpPoly &mod);
FpPoly fp_derivative(const FpPoly &a);

// Extended Euclid: g = gcd(a, b) monic with s*a + t*b = g.
struct FpBezout {
  FpPoly g, s, t;
};
FpBezout fp_ext_gcd(const FpPoly &a, const FpPoly &b);

// Multiset of degrees of the irreducible factors of the squarefree part,
// via distinct-degree splitting only (no equal-degree refinement needed for
// degree data). Returns degrees in ascending order with multiplicity.
std::vector<unsigned> fp_factor_degrees(const FpPoly &f);

struct FpFactorization {
  bool was_squarefree = true;
  std::vector<FpPoly> factors; // monic irreducible factors of the squarefree part
};

// Distinct-degree then equal-degree splitting, deterministically seeded
// from (f, p) so repeated runs agree.
FpFactorization fp_factor_squarefree_part(const FpPoly &f);

// Reduce an integer polynomial mod p and factor its squarefree part.
// Throws if p divides the leading coefficient.
FpFactorization factor_mod_p(const ZPoly &f, uint64_t p);

} // namespace gw

#endif
