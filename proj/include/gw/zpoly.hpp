#ifndef GW_ZPOLY_HPP
#define GW_ZPOLY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gw {

// Dense univariate polynomial with exact integer coefficients, ascending
// order. The zero polynomial has degree -1.
class ZPoly {
public:
  ZPoly() = default;
  explicit ZPoly(const mpz_class &c);
  explicit ZPoly(long c);
  explicit ZPoly(std::vector<mpz_class> coeffs);

  static ZPoly monomial(const mpz_class &c, size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const mpz_class &operator[](size_t i) const;
  const mpz_class &lc() const;
  const std::vector<mpz_class> &coeffs() const { return c_; }

  ZPoly operator+(const ZPoly &o) const;
  ZPoly operator-(const ZPoly &o) const;
  ZPoly operator*(const ZPoly &o) const;
  ZPoly operator-() const;
  bool operator==(const ZPoly &o) const { return c_ == o.c_; }

  ZPoly derivative() const;
  mpz_class content() const;        // nonnegative gcd of coefficients
  ZPoly primitive_part() const;     // sign of lc preserved
  ZPoly scaled(const mpz_class &k) const;

  mpz_class eval(const mpz_class &x) const;
  std::complex<double> eval(const std::complex<double> &x) const;

  // Exact division; nullopt if o does not divide exactly over Z[x].
  std::optional<ZPoly> divided_by(const ZPoly &o) const;

  std::string str(const std::string &var = "x") const;

private:
  std::vector<mpz_class> c_;
  void trim();
};

ZPoly gcd(const ZPoly &a, const ZPoly &b); // primitive PRS, positive lc

mpz_class resultant(const ZPoly &a, const ZPoly &b);

// (-1)^{n(n-1)/2} Res(f, f') / lc(f)
mpz_class discriminant(const ZPoly &f);

bool is_perfect_square(const mpz_class &n);

// Bivariate polynomial in a main variable y with ZPoly coefficients in a
// parameter; used for one-parameter families f(y; p).
struct BiPoly {
  std::vector<ZPoly> cy; // cy[i] = coefficient of y^i, a polynomial in p

  int degree_y() const { return static_cast<int>(cy.size()) - 1; }
  int degree_p() const;
  bool is_zero() const { return cy.empty(); }
  void trim();

  BiPoly operator+(const BiPoly &o) const;
  BiPoly operator-(const BiPoly &o) const;
  BiPoly operator*(const BiPoly &o) const;
  BiPoly operator-() const;

  ZPoly eval_y_poly(const mpz_class &p_value) const;      // poly in y over Z
  std::vector<std::complex<double>>
  coeffs_at(const std::complex<double> &p_value) const;   // complex y-coeffs

  BiPoly derivative_y() const;
  BiPoly derivative_p() const;

  std::string str(const std::string &y = "y", const std::string &p = "p") const;
};

// Resultant in y of two bivariate polynomials: a polynomial in p.
ZPoly resultant_y(const BiPoly &a, const BiPoly &b);

// Discriminant of f with respect to y, as an exact polynomial in p.
ZPoly discriminant_y(const BiPoly &f);

// Expression parser over named variables with integer literals, +, -, *, ^
// and parentheses. Offsets in errors are byte positions.
ZPoly parse_zpoly(const std::string &text, const std::string &var = "x");
BiPoly parse_bipoly(const std::string &text, const std::string &yvar = "y",
                    const std::string &pvar = "p");

} // namespace gw

#endif
