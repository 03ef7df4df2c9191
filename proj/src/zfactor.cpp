#include "gw/zfactor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gw/fppoly.hpp"

namespace gw {

namespace {

// Polynomials over Z/m for a big modulus m, coefficients in [0, m).
struct MPoly {
  mpz_class m;
  std::vector<mpz_class> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0)
      c.pop_back();
  }
};

MPoly m_from(const ZPoly &f, const mpz_class &m) {
  MPoly out;
  out.m = m;
  for (int i = 0; i <= f.degree(); ++i) {
    mpz_class r = f[i] % m;
    if (r < 0)
      r += m;
    out.c.push_back(r);
  }
  out.trim();
  return out;
}

ZPoly m_to_symmetric(const MPoly &f) {
  std::vector<mpz_class> v;
  mpz_class half = f.m / 2;
  for (const mpz_class &x : f.c)
    v.push_back(x > half ? mpz_class(x - f.m) : x);
  return ZPoly(std::move(v));
}

MPoly m_add(const MPoly &a, const MPoly &b) {
  MPoly out;
  out.m = a.m;
  out.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) {
    mpz_class x = (i < a.c.size() ? a.c[i] : mpz_class(0)) +
                  (i < b.c.size() ? b.c[i] : mpz_class(0));
    if (x >= a.m)
      x -= a.m;
    out.c[i] = x;
  }
  out.trim();
  return out;
}

MPoly m_sub(const MPoly &a, const MPoly &b) {
  MPoly out;
  out.m = a.m;
  out.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) {
    mpz_class x = (i < a.c.size() ? a.c[i] : mpz_class(0)) -
                  (i < b.c.size() ? b.c[i] : mpz_class(0));
    if (x < 0)
      x += a.m;
    out.c[i] = x;
  }
  out.trim();
  return out;
}

MPoly m_mul(const MPoly &a, const MPoly &b) {
  MPoly out;
  out.m = a.m;
  if (a.c.empty() || b.c.empty())
    return out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] += a.c[i] * b.c[j];
  for (auto &x : out.c)
    x %= a.m;
  out.trim();
  return out;
}

MPoly m_scale(const MPoly &a, const mpz_class &k) {
  MPoly out = a;
  mpz_class kk = k % a.m;
  if (kk < 0)
    kk += a.m;
  for (auto &x : out.c)
    x = x * kk % a.m;
  out.trim();
  return out;
}

// divide by a monic polynomial
std::pair<MPoly, MPoly> m_divmod_monic(const MPoly &a, const MPoly &b) {
  if (b.degree() < 0 || b.c.back() != 1)
    throw std::logic_error("m_divmod_monic expects a monic divisor");
  MPoly rem = a, quo;
  quo.m = a.m;
  if (a.degree() < b.degree())
    return {quo, rem};
  quo.c.assign(a.degree() - b.degree() + 1, 0);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    mpz_class q = rem.c[k + b.degree()];
    if (q == 0)
      continue;
    quo.c[k] = q;
    for (int i = 0; i <= b.degree(); ++i) {
      mpz_class &slot = rem.c[k + i];
      slot = (slot - q * b.c[i]) % a.m;
      if (slot < 0)
        slot += a.m;
    }
  }
  rem.trim();
  quo.trim();
  return {quo, rem};
}

MPoly m_lift(const MPoly &a, const mpz_class &m2) {
  MPoly out;
  out.m = m2;
  out.c = a.c;
  return out;
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m),
// h monic, to the same data mod m^2.
struct HenselPair {
  MPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly &f, const HenselPair &in) {
  mpz_class m2 = in.g.m * in.g.m;
  MPoly fm = m_from(f, m2);
  MPoly g = m_lift(in.g, m2), h = m_lift(in.h, m2);
  MPoly s = m_lift(in.s, m2), t = m_lift(in.t, m2);

  MPoly e = m_sub(fm, m_mul(g, h));
  auto [q, r] = m_divmod_monic(m_mul(s, e), h);
  MPoly g1 = m_add(g, m_add(m_mul(t, e), m_mul(q, g)));
  MPoly h1 = m_add(h, r);

  MPoly one;
  one.m = m2;
  one.c = {mpz_class(1)};
  MPoly b = m_sub(m_add(m_mul(s, g1), m_mul(t, h1)), one);
  auto [c, d] = m_divmod_monic(m_mul(s, b), h1);
  MPoly s1 = m_sub(s, d);
  MPoly t1 = m_sub(t, m_add(m_mul(t, b), m_mul(c, g1)));
  return {g1, h1, s1, t1};
}

// Lift a factorization f = g*h (mod p), h monic, to modulus >= target.
HenselPair lift_pair(const ZPoly &f, const FpPoly &g0, const FpPoly &h0,
                     const mpz_class &target) {
  FpBezout bez = fp_ext_gcd(g0, h0);
  if (bez.g.degree() != 0)
    throw std::logic_error("hensel factors are not coprime mod p");
  // scale so s*g + t*h = 1 exactly
  FpPoly s = bez.s, t = bez.t;

  HenselPair cur;
  mpz_class m(static_cast<unsigned long>(g0.p));
  cur.g = m_from(fp_to_zpoly(g0), m);
  cur.h = m_from(fp_to_zpoly(h0), m);
  cur.s = m_from(fp_to_zpoly(s), m);
  cur.t = m_from(fp_to_zpoly(t), m);
  while (cur.g.m < target) {
    cur = hensel_step(f, cur);
  }
  return cur;
}

// Multifactor lift: f = lc * prod(monic factors) (mod p) to mod >= target.
// The leading coefficient is folded into the leftmost factor during the
// recursion, keeping every right-hand product monic.
void lift_tree(const ZPoly &f, const std::vector<FpPoly> &factors, size_t lo,
               size_t hi, const mpz_class &target, std::vector<ZPoly> &out) {
  if (hi - lo == 1) {
    out.push_back(m_to_symmetric(m_from(f, target)));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  FpPoly g0, h0;
  g0.p = h0.p = factors[lo].p;
  g0.c = {1};
  h0.c = {1};
  for (size_t i = lo; i < mid; ++i)
    g0 = fp_mul(g0, factors[i]);
  for (size_t i = mid; i < hi; ++i)
    h0 = fp_mul(h0, factors[i]);
  // fold lc(f) into the left part
  mpz_class lcf = f.lc() % static_cast<long>(g0.p);
  if (lcf < 0)
    lcf += static_cast<long>(g0.p);
  FpPoly lcp;
  lcp.p = g0.p;
  if (lcf != 0)
    lcp.c = {lcf.get_ui()};
  g0 = fp_mul(g0, lcp);

  HenselPair lifted = lift_pair(f, g0, h0, target);
  ZPoly gz = m_to_symmetric(lifted.g);
  ZPoly hz = m_to_symmetric(lifted.h);
  lift_tree(gz, factors, lo, mid, target, out);
  lift_tree(hz, factors, mid, hi, target, out);
}

mpz_class two_norm_ceil(const ZPoly &f) {
  mpz_class sum = 0;
  for (int i = 0; i <= f.degree(); ++i)
    sum += f[i] * f[i];
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), sum.get_mpz_t());
  return root + 1;
}

// Factor a primitive squarefree polynomial with positive leading
// coefficient and degree >= 1.
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly &f) {
  if (f.degree() == 1)
    return {f};

  mpz_class disc = discriminant(f);
  if (disc == 0)
    throw std::logic_error("squarefree polynomial has zero discriminant");

  // choose a good prime with few modular factors among the first candidates
  uint64_t best_p = 0;
  std::vector<FpPoly> best_factors;
  unsigned tried = 0;
  for (uint64_t p = 3; tried < 5 && p < 10000; ++p) {
    bool prime = p > 1;
    for (uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime)
      continue;
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p) ||
        mpz_divisible_ui_p(disc.get_mpz_t(), p))
      continue;
    ++tried;
    FpFactorization fac = fp_factor_squarefree_part(fp_from_zpoly(f, p));
    if (best_p == 0 || fac.factors.size() < best_factors.size()) {
      best_p = p;
      best_factors = fac.factors;
    }
    if (best_factors.size() == 1)
      break;
  }
  if (best_p == 0)
    throw std::runtime_error("no good prime found for factorization");
  if (best_factors.size() == 1)
    return {f};

  // Landau-Mignotte style bound on factor coefficients, times the leading
  // coefficient carried by candidates.
  mpz_class bound = two_norm_ceil(f) * abs(f.lc());
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(f.degree() + 1));
  bound *= pow2;
  mpz_class target(static_cast<unsigned long>(best_p));
  while (target <= 2 * bound)
    target *= target;

  std::vector<ZPoly> lifted;
  lift_tree(f, best_factors, 0, best_factors.size(), target, lifted);
  // normalize lifted factors to monic residues mod target
  mpz_class lc_inv;
  {
    mpz_class lcf = f.lc() % target;
    if (lcf < 0)
      lcf += target;
    if (mpz_invert(lc_inv.get_mpz_t(), lcf.get_mpz_t(), target.get_mpz_t()) == 0)
      throw std::logic_error("leading coefficient not invertible mod p^k");
  }
  for (size_t i = 0; i < lifted.size(); ++i) {
    MPoly m = m_from(lifted[i], target);
    if (m.degree() >= 0 && m.c.back() != 1) {
      // leftmost factor carries lc(f)
      m = m_scale(m, lc_inv);
    }
    lifted[i] = m_to_symmetric(m);
  }

  // subset recombination
  std::vector<ZPoly> result;
  std::vector<size_t> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i)
    live[i] = i;
  ZPoly remaining = f;

  auto try_subsets = [&](auto &&self, size_t subset_size) -> bool {
    if (subset_size > live.size() / 2 + (live.size() % 2))
      return false;
    std::vector<size_t> pick(subset_size);
    std::function<bool(size_t, size_t)> rec = [&](size_t start,
                                                  size_t k) -> bool {
      if (k == subset_size) {
        MPoly cand = m_from(ZPoly(remaining.lc()), target);
        for (size_t idx : pick)
          cand = m_mul(cand, m_from(lifted[live[idx]], target));
        ZPoly g = m_to_symmetric(cand).primitive_part();
        if (g.degree() < 1)
          return false;
        auto q = remaining.divided_by(g);
        if (!q)
          return false;
        result.push_back(g.lc() < 0 ? -g : g);
        remaining = g.lc() < 0 ? -*q : *q;
        std::vector<size_t> next_live;
        for (size_t i = 0; i < live.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end())
            next_live.push_back(live[i]);
        live = next_live;
        return true;
      }
      for (size_t i = start; i < live.size(); ++i) {
        pick[k] = i;
        if (rec(i + 1, k + 1))
          return true;
      }
      return false;
    };
    if (rec(0, 0))
      return true;
    return self(self, subset_size + 1);
  };

  while (live.size() > 0) {
    if (remaining.degree() == 0)
      break;
    if (!try_subsets(try_subsets, 1)) {
      // leftover is irreducible
      result.push_back(remaining.lc() < 0 ? -remaining : remaining);
      remaining = ZPoly(remaining.lc() < 0 ? mpz_class(-1) : mpz_class(1));
      break;
    }
  }
  if (remaining.degree() > 0)
    result.push_back(remaining);
  return result;
}

} // namespace

ZFactorization factor_over_z(const ZPoly &f) {
  if (f.is_zero())
    throw std::invalid_argument("cannot factor the zero polynomial");
  ZFactorization out;
  out.content = f.content();
  ZPoly g = f.primitive_part();
  if (g.lc() < 0) {
    out.content = -out.content;
    g = -g;
  }
  if (g.degree() < 1)
    return out;

  // squarefree part, then recover multiplicities
  ZPoly der = g.derivative();
  ZPoly common = gcd(g, der);
  ZPoly sqfree = g;
  if (common.degree() > 0) {
    auto q = g.divided_by(common);
    if (!q)
      throw std::logic_error("gcd must divide");
    sqfree = q->primitive_part();
  }
  if (sqfree.lc() < 0)
    sqfree = -sqfree;

  std::vector<ZPoly> irr = factor_squarefree_primitive(sqfree);
  std::sort(irr.begin(), irr.end(), [](const ZPoly &a, const ZPoly &b) {
    if (a.degree() != b.degree())
      return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  ZPoly rest = g;
  for (const ZPoly &q : irr) {
    for (;;) {
      auto d = rest.divided_by(q);
      if (!d)
        break;
      out.factors.push_back(q);
      rest = *d;
    }
  }
  if (rest.degree() > 0)
    throw std::logic_error("factorization incomplete");
  out.content *= rest.is_zero() ? mpz_class(1) : rest[0];
  return out;
}

bool is_irreducible_over_q(const ZPoly &f) {
  if (f.degree() < 1)
    return false;
  ZFactorization fac = factor_over_z(f);
  return fac.factors.size() == 1;
}

} // namespace gw
