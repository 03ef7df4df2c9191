#include "gw/fppoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gw {

namespace {

uint64_t inv_mod(uint64_t a, uint64_t p) {
  // extended Euclid on machine words
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
  while (newr != 0) {
    int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1)
    throw std::invalid_argument("element not invertible mod p");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(p) : t);
}

} // namespace

void FpPoly::trim() {
  while (!c.empty() && c.back() == 0)
    c.pop_back();
}

FpPoly FpPoly::monic() const {
  FpPoly out = *this;
  if (out.is_zero() || out.lc() == 1)
    return out;
  uint64_t s = inv_mod(out.lc(), p);
  for (uint64_t &x : out.c)
    x = x * s % p;
  return out;
}

FpPoly fp_from_zpoly(const ZPoly &f, uint64_t p) {
  FpPoly out;
  out.p = p;
  out.c.reserve(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    mpz_class r = f[i] % static_cast<unsigned long>(p);
    if (r < 0)
      r += static_cast<unsigned long>(p);
    out.c.push_back(r.get_ui());
  }
  out.trim();
  return out;
}

ZPoly fp_to_zpoly(const FpPoly &f) {
  std::vector<mpz_class> v;
  v.reserve(f.c.size());
  for (uint64_t x : f.c)
    v.push_back(mpz_class(static_cast<unsigned long>(x)));
  return ZPoly(std::move(v));
}

ZPoly fp_to_zpoly_symmetric(const FpPoly &f) {
  std::vector<mpz_class> v;
  v.reserve(f.c.size());
  for (uint64_t x : f.c) {
    mpz_class val(static_cast<unsigned long>(x));
    if (x > f.p / 2)
      val -= static_cast<unsigned long>(f.p);
    v.push_back(val);
  }
  return ZPoly(std::move(v));
}

FpPoly fp_add(const FpPoly &a, const FpPoly &b) {
  FpPoly out;
  out.p = a.p;
  out.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) {
    uint64_t x = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
    out.c[i] = x >= a.p ? x - a.p : x;
  }
  out.trim();
  return out;
}

FpPoly fp_sub(const FpPoly &a, const FpPoly &b) {
  FpPoly out;
  out.p = a.p;
  out.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) {
    uint64_t x = (i < a.c.size() ? a.c[i] : 0) + a.p -
                 (i < b.c.size() ? b.c[i] : 0);
    out.c[i] = x >= a.p ? x - a.p : x;
  }
  out.trim();
  return out;
}

FpPoly fp_mul(const FpPoly &a, const FpPoly &b) {
  FpPoly out;
  out.p = a.p;
  if (a.is_zero() || b.is_zero())
    return out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0)
      continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = (out.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  out.trim();
  return out;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly &a, const FpPoly &b) {
  if (b.is_zero())
    throw std::invalid_argument("division by zero polynomial mod p");
  FpPoly rem = a, quo;
  quo.p = a.p;
  if (a.degree() < b.degree())
    return {quo, rem};
  quo.c.assign(a.degree() - b.degree() + 1, 0);
  uint64_t inv_lc = inv_mod(b.lc(), a.p);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    uint64_t top = rem.c[k + b.degree()];
    if (top == 0)
      continue;
    uint64_t q = top * inv_lc % a.p;
    quo.c[k] = q;
    for (int i = 0; i <= b.degree(); ++i) {
      uint64_t sub = q * b.c[i] % a.p;
      uint64_t &slot = rem.c[k + i];
      slot = (slot + a.p - sub) % a.p;
    }
  }
  rem.trim();
  quo.trim();
  return {quo, rem};
}

FpPoly fp_mod(const FpPoly &a, const FpPoly &b) { return fp_divmod(a, b).second; }

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly fp_powmod(const FpPoly &base, const mpz_class &e, const FpPoly &mod) {
  FpPoly result;
  result.p = base.p;
  result.c = {1};
  FpPoly cur = fp_mod(base, mod);
  mpz_class exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t()))
      result = fp_mod(fp_mul(result, cur), mod);
    cur = fp_mod(fp_mul(cur, cur), mod);
    exp >>= 1;
  }
  return result;
}

FpPoly fp_derivative(const FpPoly &a) {
  FpPoly out;
  out.p = a.p;
  if (a.c.size() <= 1)
    return out;
  out.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    out.c[i - 1] = a.c[i] * (i % a.p) % a.p;
  out.trim();
  return out;
}

FpBezout fp_ext_gcd(const FpPoly &a, const FpPoly &b) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0, s1, t0, t1;
  s0.p = s1.p = t0.p = t1.p = a.p;
  s0.c = {1};
  t1.c = {1};
  while (!r1.is_zero()) {
    auto [q, r] = fp_divmod(r0, r1);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // normalize to monic gcd
  if (!r0.is_zero() && r0.lc() != 1) {
    uint64_t s = inv_mod(r0.lc(), a.p);
    for (auto *pv : {&r0, &s0, &t0})
      for (uint64_t &x : pv->c)
        x = x * s % a.p;
  }
  return {r0, s0, t0};
}

namespace {

// Distinct-degree decomposition of a monic squarefree polynomial: list of
// (product of irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly f) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  FpPoly x;
  x.p = f.p;
  x.c = {0, 1};
  FpPoly h = fp_mod(x, f);
  unsigned d = 0;
  while (f.degree() > 0 && f.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = fp_powmod(h, mpz_class(static_cast<unsigned long>(f.p)), f);
    FpPoly g = fp_gcd(f, fp_sub(h, x));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = fp_divmod(f, g).first;
      h = fp_mod(h, f);
    }
  }
  if (f.degree() > 0)
    out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); g is monic squarefree with
// all irreducible factors of degree d.
void equal_degree(const FpPoly &g, unsigned d, std::mt19937_64 &rng,
                  std::vector<FpPoly> &out) {
  unsigned k = static_cast<unsigned>(g.degree()) / d;
  if (k == 1) {
    out.push_back(g.monic());
    return;
  }
  const uint64_t p = g.p;
  FpPoly splitter;
  for (int attempt = 0; attempt < 256; ++attempt) {
    // random polynomial of degree < deg g
    FpPoly a;
    a.p = p;
    a.c.resize(g.degree());
    for (auto &x : a.c)
      x = rng() % p;
    a.trim();
    if (a.degree() < 1 && p > 2)
      continue;
    FpPoly b;
    if (p == 2) {
      // trace map: a + a^2 + a^4 + ... + a^(2^(d-1))
      FpPoly t = a, acc = a;
      for (unsigned i = 1; i < d; ++i) {
        t = fp_mod(fp_mul(t, t), g);
        acc = fp_add(acc, t);
      }
      b = acc;
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
      e = (e - 1) / 2;
      FpPoly apow = fp_powmod(a, e, g); // a^((p^d-1)/2), a square-ness test
      FpPoly one;
      one.p = p;
      one.c = {1};
      b = fp_sub(apow, one);
    }
    FpPoly h = fp_gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      splitter = h;
      break;
    }
  }
  if (splitter.is_zero())
    throw std::runtime_error("equal-degree splitting failed to find a factor");
  equal_degree(splitter, d, rng, out);
  equal_degree(fp_divmod(g, splitter).first.monic(), d, rng, out);
}

} // namespace

FpFactorization factor_mod_p(const ZPoly &f, uint64_t p) {
  if (f.is_zero() || mpz_divisible_ui_p(f.lc().get_mpz_t(), p))
    throw std::invalid_argument("p divides the leading coefficient");
  return fp_factor_squarefree_part(fp_from_zpoly(f, p));
}

std::vector<unsigned> fp_factor_degrees(const FpPoly &f) {
  FpPoly m = f.monic();
  FpPoly der = fp_derivative(m);
  std::vector<unsigned> out;
  if (!der.is_zero() && fp_gcd(m, der).degree() == 0) {
    // squarefree: distinct-degree splitting alone gives the degree data
    for (const auto &[prod, d] : distinct_degree(m)) {
      unsigned count = static_cast<unsigned>(prod.degree()) / d;
      for (unsigned i = 0; i < count; ++i)
        out.push_back(d);
    }
  } else {
    for (const FpPoly &q : fp_factor_squarefree_part(f).factors)
      out.push_back(static_cast<unsigned>(q.degree()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Distinct monic irreducible factors. If the derivative vanishes the input
// is g(x)^p = g(x^p) over the prime field, so recurse on g; otherwise every
// irreducible factor divides f / gcd(f, f') or gcd(f, f').
void distinct_factors(const FpPoly &f, std::mt19937_64 &rng, bool &squarefree,
                      std::vector<FpPoly> &out) {
  FpPoly m = f.monic();
  if (m.degree() < 1)
    return;
  FpPoly der = fp_derivative(m);
  if (der.is_zero()) {
    squarefree = false;
    FpPoly g;
    g.p = m.p;
    for (size_t i = 0; i < m.c.size(); i += m.p)
      g.c.push_back(m.c[i]);
    g.trim();
    distinct_factors(g, rng, squarefree, out);
    return;
  }
  FpPoly gg = fp_gcd(m, der);
  if (gg.degree() == 0) {
    for (const auto &[prod, d] : distinct_degree(m))
      equal_degree(prod, d, rng, out);
    return;
  }
  squarefree = false;
  distinct_factors(fp_divmod(m, gg).first, rng, squarefree, out);
  distinct_factors(gg, rng, squarefree, out);
}

} // namespace

FpFactorization fp_factor_squarefree_part(const FpPoly &f) {
  FpFactorization out;
  if (f.degree() < 1)
    return out;

  // deterministic seed from the coefficients and p
  uint64_t seed = 0x9e3779b97f4a7c15ull ^ f.p;
  for (uint64_t x : f.c)
    seed = seed * 0x100000001b3ull + x;
  std::mt19937_64 rng(seed);

  distinct_factors(f, rng, out.was_squarefree, out.factors);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FpPoly &a, const FpPoly &b) { return a.c < b.c; });
  out.factors.erase(std::unique(out.factors.begin(), out.factors.end(),
                                [](const FpPoly &a, const FpPoly &b) {
                                  return a.c == b.c;
                                }),
                    out.factors.end());
  return out;
}

} // namespace gw
