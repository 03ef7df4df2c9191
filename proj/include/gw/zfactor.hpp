#ifndef GW_ZFACTOR_HPP
#define GW_ZFACTOR_HPP

#include <vector>

#include "gw/zpoly.hpp"

namespace gw {

// Irreducible factorization over Z of a nonzero polynomial: primitive
// irreducible factors with multiplicity, plus a rational unit/content so
// that content * product(factors) = f. Zassenhaus: factor modulo a good
// prime, Hensel-lift past the Landau-Mignotte bound, recombine subsets.
struct ZFactorization {
  mpz_class content = 1; // includes the sign
  std::vector<ZPoly> factors;
};

ZFactorization factor_over_z(const ZPoly &f);

bool is_irreducible_over_q(const ZPoly &f);

} // namespace gw

#endif
