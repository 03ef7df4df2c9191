#include "gw/zpoly.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gw {

namespace {
const mpz_class kZero = 0;
}

ZPoly::ZPoly(const mpz_class &c) {
  if (c != 0)
    c_.push_back(c);
}

ZPoly::ZPoly(long c) {
  if (c != 0)
    c_.push_back(mpz_class(c));
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const mpz_class &c, size_t k) {
  if (c == 0)
    return ZPoly();
  std::vector<mpz_class> v(k + 1, mpz_class(0));
  v[k] = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

bool ZPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const mpz_class &ZPoly::operator[](size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const mpz_class &ZPoly::lc() const {
  if (c_.empty())
    return kZero;
  return c_.back();
}

ZPoly ZPoly::operator+(const ZPoly &o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = (*this)[i] + o[i];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly &o) const {
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = (*this)[i] - o[i];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const ZPoly &o) const {
  if (is_zero() || o.is_zero())
    return ZPoly();
  std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] += c_[i] * o.c_[j];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const {
  std::vector<mpz_class> v = c_;
  for (auto &x : v)
    x = -x;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1)
    return ZPoly();
  std::vector<mpz_class> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ZPoly(std::move(v));
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto &x : c_)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero())
    return ZPoly();
  mpz_class g = content();
  std::vector<mpz_class> v = c_;
  for (auto &x : v)
    x /= g;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::scaled(const mpz_class &k) const {
  std::vector<mpz_class> v = c_;
  for (auto &x : v)
    x *= k;
  return ZPoly(std::move(v));
}

mpz_class ZPoly::eval(const mpz_class &x) const {
  mpz_class r = 0;
  for (size_t i = c_.size(); i-- > 0;)
    r = r * x + c_[i];
  return r;
}

std::complex<double> ZPoly::eval(const std::complex<double> &x) const {
  std::complex<double> r = 0;
  for (size_t i = c_.size(); i-- > 0;)
    r = r * x + c_[i].get_d();
  return r;
}

std::optional<ZPoly> ZPoly::divided_by(const ZPoly &o) const {
  if (o.is_zero())
    throw std::invalid_argument("division by the zero polynomial");
  if (is_zero())
    return ZPoly();
  if (degree() < o.degree())
    return std::nullopt;
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quo(degree() - o.degree() + 1, mpz_class(0));
  for (int k = degree() - o.degree(); k >= 0; --k) {
    mpz_class &top = rem[k + o.degree()];
    if (top == 0)
      continue;
    if (!mpz_divisible_p(top.get_mpz_t(), o.lc().get_mpz_t()))
      return std::nullopt;
    mpz_class q = top / o.lc();
    quo[k] = q;
    for (int i = 0; i <= o.degree(); ++i)
      rem[k + i] -= q * o[i];
  }
  for (const auto &x : rem)
    if (x != 0)
      return std::nullopt;
  return ZPoly(std::move(quo));
}

std::string ZPoly::str(const std::string &var) const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const mpz_class &a = c_[i];
    if (a == 0)
      continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0)
        os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1)
      os << mag.get_str();
    if (i > 0) {
      if (mag != 1)
        os << "*";
      os << var;
      if (i > 1)
        os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd / resultant via subresultant polynomial remainder sequences. The same
// routine serves Z[x] and (Z[p])[y] through the ring operations.

namespace {

template <typename R> struct RingOps;

template <> struct RingOps<mpz_class> {
  static mpz_class zero() { return 0; }
  static mpz_class one() { return 1; }
  static bool is_zero(const mpz_class &a) { return a == 0; }
  static mpz_class mul(const mpz_class &a, const mpz_class &b) { return a * b; }
  static mpz_class sub(const mpz_class &a, const mpz_class &b) { return a - b; }
  static mpz_class neg(const mpz_class &a) { return -a; }
  static mpz_class divexact(const mpz_class &a, const mpz_class &b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static mpz_class pow(const mpz_class &a, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
  }
};

template <> struct RingOps<ZPoly> {
  static ZPoly zero() { return ZPoly(); }
  static ZPoly one() { return ZPoly(1L); }
  static bool is_zero(const ZPoly &a) { return a.is_zero(); }
  static ZPoly mul(const ZPoly &a, const ZPoly &b) { return a * b; }
  static ZPoly sub(const ZPoly &a, const ZPoly &b) { return a - b; }
  static ZPoly neg(const ZPoly &a) { return -a; }
  static ZPoly divexact(const ZPoly &a, const ZPoly &b) {
    auto q = a.divided_by(b);
    if (!q)
      throw std::logic_error("inexact division in subresultant sequence");
    return *q;
  }
  static ZPoly pow(const ZPoly &a, unsigned long e) {
    ZPoly r = one();
    for (unsigned long i = 0; i < e; ++i)
      r = r * a;
    return r;
  }
};

template <typename R> using RPoly = std::vector<R>; // ascending, trimmed

template <typename R> void rtrim(RPoly<R> &p) {
  while (!p.empty() && RingOps<R>::is_zero(p.back()))
    p.pop_back();
}

template <typename R> int rdeg(const RPoly<R> &p) {
  return static_cast<int>(p.size()) - 1;
}

template <typename R> R rlc(const RPoly<R> &p) {
  return p.empty() ? RingOps<R>::zero() : p.back();
}

template <typename R> RPoly<R> rscale(const RPoly<R> &p, const R &k) {
  RPoly<R> out = p;
  for (auto &x : out)
    x = RingOps<R>::mul(x, k);
  rtrim(out);
  return out;
}

template <typename R> RPoly<R> rdivexact_scalar(const RPoly<R> &p, const R &k) {
  RPoly<R> out = p;
  for (auto &x : out)
    x = RingOps<R>::divexact(x, k);
  return out;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B.
template <typename R> RPoly<R> rprem(RPoly<R> A, const RPoly<R> &B) {
  using Ops = RingOps<R>;
  int e = rdeg(A) - rdeg(B) + 1;
  const R d = rlc(B);
  while (!A.empty() && rdeg(A) >= rdeg(B)) {
    int shift = rdeg(A) - rdeg(B);
    R top = rlc(A);
    RPoly<R> next(std::max(A.size() - 1, B.size() + shift - 1));
    next.assign(A.size() - 1, Ops::zero());
    // d*A - top * x^shift * B, top coefficient cancels
    for (int i = 0; i < rdeg(A); ++i)
      next[i] = Ops::mul(A[i], d);
    for (int i = 0; i < rdeg(B); ++i)
      next[shift + i] = Ops::sub(next[shift + i], Ops::mul(top, B[i]));
    rtrim(next);
    A = std::move(next);
    --e;
  }
  if (e > 0) {
    R k = Ops::pow(d, static_cast<unsigned long>(e));
    A = rscale(A, k);
  }
  return A;
}

// Resultant via the subresultant PRS (Cohen, Algorithm 3.3.7).
template <typename R> R rresultant(RPoly<R> A, RPoly<R> B) {
  using Ops = RingOps<R>;
  rtrim(A);
  rtrim(B);
  if (A.empty() || B.empty())
    return Ops::zero();
  bool negate = false;
  if (rdeg(A) < rdeg(B)) {
    std::swap(A, B);
    if ((rdeg(A) & 1) && (rdeg(B) & 1))
      negate = !negate;
  }
  if (rdeg(B) == 0) {
    R r = Ops::pow(rlc(B), static_cast<unsigned long>(rdeg(A)));
    return negate ? Ops::neg(r) : r;
  }
  R g = Ops::one(), h = Ops::one();
  for (;;) {
    int delta = rdeg(A) - rdeg(B);
    if ((rdeg(A) & 1) && (rdeg(B) & 1))
      negate = !negate;
    RPoly<R> Rm = rprem(A, B);
    if (Rm.empty())
      return Ops::zero(); // common factor of positive degree
    A = B;
    R hd = Ops::pow(h, static_cast<unsigned long>(delta));
    B = rdivexact_scalar(Rm, Ops::mul(g, hd));
    g = rlc(A);
    if (delta > 0) {
      R gd = Ops::pow(g, static_cast<unsigned long>(delta));
      R hd1 = Ops::pow(h, static_cast<unsigned long>(delta - 1));
      h = Ops::divexact(gd, hd1);
    }
    if (rdeg(B) == 0) {
      // final: h^(1 - deg A) * lc(B)^(deg A)
      R num = Ops::pow(rlc(B), static_cast<unsigned long>(rdeg(A)));
      R den = Ops::pow(h, static_cast<unsigned long>(rdeg(A) - 1));
      R r = Ops::divexact(num, den);
      return negate ? Ops::neg(r) : r;
    }
  }
}

} // namespace

ZPoly gcd(const ZPoly &a, const ZPoly &b) {
  if (a.is_zero() && b.is_zero())
    return ZPoly();
  if (a.is_zero())
    return b.lc() < 0 ? -b : b;
  if (b.is_zero())
    return a.lc() < 0 ? -a : a;
  // primitive PRS on primitive parts; content handled separately
  mpz_class ca = a.content(), cb = b.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  RPoly<mpz_class> A = a.primitive_part().coeffs();
  RPoly<mpz_class> B = b.primitive_part().coeffs();
  if (rdeg(A) < rdeg(B))
    std::swap(A, B);
  while (!B.empty()) {
    RPoly<mpz_class> Rm = rprem(A, B);
    ZPoly rp = ZPoly(std::move(Rm)).primitive_part();
    A = std::move(B);
    B = rp.coeffs();
  }
  ZPoly g = ZPoly(std::move(A));
  if (g.lc() < 0)
    g = -g;
  return g.scaled(cg == 0 ? mpz_class(1) : cg);
}

mpz_class resultant(const ZPoly &a, const ZPoly &b) {
  return rresultant<mpz_class>(a.coeffs(), b.coeffs());
}

mpz_class discriminant(const ZPoly &f) {
  if (f.degree() < 2)
    throw std::invalid_argument("discriminant requires degree >= 2");
  mpz_class res = resultant(f, f.derivative());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
  unsigned long n = static_cast<unsigned long>(f.degree());
  if (((n * (n - 1)) / 2) % 2 == 1)
    q = -q;
  return q;
}

bool is_perfect_square(const mpz_class &n) {
  if (n < 0)
    return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// ---------------------------------------------------------------------------
// BiPoly

void BiPoly::trim() {
  while (!cy.empty() && cy.back().is_zero())
    cy.pop_back();
}

int BiPoly::degree_p() const {
  int d = -1;
  for (const ZPoly &c : cy)
    d = std::max(d, c.degree());
  return d;
}

BiPoly BiPoly::operator+(const BiPoly &o) const {
  BiPoly out;
  out.cy.resize(std::max(cy.size(), o.cy.size()));
  for (size_t i = 0; i < out.cy.size(); ++i) {
    ZPoly a = i < cy.size() ? cy[i] : ZPoly();
    ZPoly b = i < o.cy.size() ? o.cy[i] : ZPoly();
    out.cy[i] = a + b;
  }
  out.trim();
  return out;
}

BiPoly BiPoly::operator-(const BiPoly &o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (ZPoly &c : out.cy)
    c = -c;
  return out;
}

BiPoly BiPoly::operator*(const BiPoly &o) const {
  BiPoly out;
  if (cy.empty() || o.cy.empty())
    return out;
  out.cy.assign(cy.size() + o.cy.size() - 1, ZPoly());
  for (size_t i = 0; i < cy.size(); ++i)
    for (size_t j = 0; j < o.cy.size(); ++j)
      out.cy[i + j] = out.cy[i + j] + cy[i] * o.cy[j];
  out.trim();
  return out;
}

ZPoly BiPoly::eval_y_poly(const mpz_class &p_value) const {
  std::vector<mpz_class> v;
  v.reserve(cy.size());
  for (const ZPoly &c : cy)
    v.push_back(c.eval(p_value));
  return ZPoly(std::move(v));
}

std::vector<std::complex<double>>
BiPoly::coeffs_at(const std::complex<double> &p_value) const {
  std::vector<std::complex<double>> v;
  v.reserve(cy.size());
  for (const ZPoly &c : cy)
    v.push_back(c.eval(p_value));
  return v;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly out;
  if (cy.size() <= 1)
    return out;
  out.cy.resize(cy.size() - 1);
  for (size_t i = 1; i < cy.size(); ++i)
    out.cy[i - 1] = cy[i].scaled(static_cast<unsigned long>(i));
  out.trim();
  return out;
}

BiPoly BiPoly::derivative_p() const {
  BiPoly out = *this;
  for (ZPoly &c : out.cy)
    c = c.derivative();
  out.trim();
  return out;
}

std::string BiPoly::str(const std::string &y, const std::string &p) const {
  if (cy.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = cy.size(); i-- > 0;) {
    if (cy[i].is_zero())
      continue;
    if (!first)
      os << " + ";
    first = false;
    bool unit = cy[i].is_one();
    bool atom = cy[i].degree() == 0 || (cy[i].degree() == 1 && cy[i][0] == 0 &&
                                        cy[i][1] == 1);
    if (i == 0) {
      os << (atom ? cy[i].str(p) : "(" + cy[i].str(p) + ")");
      continue;
    }
    if (!unit)
      os << (atom ? cy[i].str(p) : "(" + cy[i].str(p) + ")") << "*";
    os << y;
    if (i > 1)
      os << "^" << i;
  }
  return os.str();
}

ZPoly resultant_y(const BiPoly &a, const BiPoly &b) {
  return rresultant<ZPoly>(a.cy, b.cy);
}

ZPoly discriminant_y(const BiPoly &f) {
  if (f.degree_y() < 2)
    throw std::invalid_argument("discriminant_y requires y-degree >= 2");
  ZPoly res = resultant_y(f, f.derivative_y());
  auto q = res.divided_by(f.cy.back());
  if (!q)
    throw std::logic_error("leading coefficient must divide the resultant");
  unsigned long n = static_cast<unsigned long>(f.degree_y());
  if (((n * (n - 1)) / 2) % 2 == 1)
    return -*q;
  return *q;
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class PolyParser {
public:
  PolyParser(const std::string &text, std::string yvar, std::string pvar)
      : text_(text), yvar_(std::move(yvar)), pvar_(std::move(pvar)) {}

  BiPoly run() {
    BiPoly e = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      fail("trailing input in polynomial expression");
    return e;
  }

private:
  const std::string &text_;
  std::string yvar_, pvar_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw std::invalid_argument(msg + " (at byte " + std::to_string(pos_) + ")");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static BiPoly constant(const mpz_class &v) {
    BiPoly b;
    if (v != 0)
      b.cy.push_back(ZPoly(v));
    return b;
  }

  BiPoly parse_sum() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    BiPoly acc = parse_product();
    if (neg)
      acc = -acc;
    for (;;) {
      skip_ws();
      if (eat('+'))
        acc = acc + parse_product();
      else if (eat('-'))
        acc = acc - parse_product();
      else
        return acc;
    }
  }

  BiPoly parse_product() {
    BiPoly acc = parse_power();
    for (;;) {
      skip_ws();
      if (eat('*'))
        acc = acc * parse_power();
      else
        return acc;
    }
  }

  BiPoly parse_power() {
    BiPoly base = parse_atom();
    skip_ws();
    if (eat('^')) {
      unsigned long e = parse_uint();
      BiPoly acc = constant(1);
      for (unsigned long i = 0; i < e; ++i)
        acc = acc * base;
      return acc;
    }
    return base;
  }

  unsigned long parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected exponent");
    unsigned long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (v > 512)
        fail("exponent out of range");
    }
    return v;
  }

  BiPoly parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of polynomial expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly e = parse_sum();
      if (!eat(')'))
        fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      return constant(mpz_class(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        name += text_[pos_++];
      if (name == yvar_) {
        BiPoly b;
        b.cy.resize(2);
        b.cy[1] = ZPoly(1L);
        return b;
      }
      if (name == pvar_) {
        BiPoly b;
        b.cy.resize(1);
        b.cy[0] = ZPoly::monomial(1, 1);
        return b;
      }
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character in polynomial expression");
  }
};

} // namespace

ZPoly parse_zpoly(const std::string &text, const std::string &var) {
  BiPoly b = PolyParser(text, var, "\0__none__").run();
  std::vector<mpz_class> v;
  for (const ZPoly &c : b.cy) {
    if (c.degree() > 0)
      throw std::invalid_argument("unexpected parameter variable");
    v.push_back(c.is_zero() ? mpz_class(0) : c[0]);
  }
  return ZPoly(std::move(v));
}

BiPoly parse_bipoly(const std::string &text, const std::string &yvar,
                    const std::string &pvar) {
  return PolyParser(text, yvar, pvar).run();
}

} // namespace gw
