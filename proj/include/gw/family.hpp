#ifndef GW_FAMILY_HPP
#define GW_FAMILY_HPP

#include <string>

#include "gw/zpoly.hpp"

namespace gw {

// One-parameter family f(y; p) = sum c_i(p) y^i with exact integer
// coefficient polynomials c_i and fiber degree d = deg_y f.
struct ParametricFamily {
  BiPoly f;

  unsigned fiber_degree() const { return static_cast<unsigned>(f.degree_y()); }
  const ZPoly &leading_coeff() const { return f.cy.back(); }

  // disc_y(f) as an exact polynomial in p; throws when it vanishes
  // identically (the family has no generically finite distinct fiber).
  ZPoly discriminant_p() const;

  static ParametricFamily parse(const std::string &text);
};

} // namespace gw

#endif
