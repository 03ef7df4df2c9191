#include "gw/family.hpp"

#include <stdexcept>

namespace gw {

ZPoly ParametricFamily::discriminant_p() const {
  if (f.degree_y() < 2)
    throw std::invalid_argument("family needs fiber degree >= 2");
  ZPoly d = discriminant_y(f);
  if (d.is_zero())
    throw std::runtime_error(
        "discriminant vanishes identically: no generic distinct fiber");
  return d;
}

ParametricFamily ParametricFamily::parse(const std::string &text) {
  ParametricFamily fam;
  fam.f = parse_bipoly(text, "y", "p");
  if (fam.f.degree_y() < 1)
    throw std::invalid_argument("family must involve y");
  if (fam.f.cy.back().is_zero())
    throw std::invalid_argument("leading y-coefficient vanishes identically");
  return fam;
}

} // namespace gw
