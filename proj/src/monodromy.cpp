#include "gw/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace gw {

namespace {

cplx horner(const std::vector<cplx> &c, cplx y) {
  cplx r = 0;
  for (size_t i = c.size(); i-- > 0;)
    r = r * y + c[i];
  return r;
}

std::vector<cplx> derivative(const std::vector<cplx> &c) {
  std::vector<cplx> d;
  for (size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i] * static_cast<double>(i));
  return d;
}

double coeff_norm(const std::vector<cplx> &c) {
  double s = 0;
  for (const cplx &x : c)
    s += std::norm(x);
  return std::sqrt(s);
}

// All complex roots of a polynomial given by complex coefficients
// (ascending): companion-matrix eigenvalues polished by Newton.
std::vector<cplx> complex_roots(std::vector<cplx> c, double residual_tol) {
  while (!c.empty() && std::abs(c.back()) == 0.0)
    c.pop_back();
  if (c.size() <= 1)
    return {};
  size_t m = c.size() - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
  for (size_t i = 0; i + 1 < m; ++i)
    comp(i + 1, i) = 1.0;
  for (size_t i = 0; i < m; ++i)
    comp(i, m - 1) = -c[i] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue root finding failed");
  std::vector<cplx> roots;
  std::vector<cplx> der = derivative(c);
  double norm = coeff_norm(c);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    cplx r = es.eigenvalues()[i];
    for (int it = 0; it < 4; ++it) {
      cplx fp = horner(der, r);
      if (std::abs(fp) == 0.0)
        break;
      r -= horner(c, r) / fp;
    }
    double scale = norm * std::pow(std::max(1.0, std::abs(r)),
                                   static_cast<double>(m));
    if (std::abs(horner(c, r)) > residual_tol * scale * 1e4)
      throw std::runtime_error("root residual check failed");
    roots.push_back(r);
  }
  return roots;
}

std::vector<cplx> zroots(const ZPoly &f, double residual_tol) {
  std::vector<cplx> c;
  for (int i = 0; i <= f.degree(); ++i)
    c.push_back(cplx(f[i].get_d(), 0.0));
  return complex_roots(std::move(c), residual_tol);
}

struct Tracker {
  const ParametricFamily &fam;
  const TrackOptions &opts;
  BiPoly dfdp;

  explicit Tracker(const ParametricFamily &f, const TrackOptions &o)
      : fam(f), opts(o), dfdp(f.f.derivative_p()) {}

  bool newton(std::vector<cplx> &c, std::vector<cplx> &dc, cplx &y) const {
    for (int it = 0; it < 8; ++it) {
      cplx fy = horner(dc, y);
      if (std::abs(fy) == 0.0)
        return false;
      cplx delta = horner(c, y) / fy;
      y -= delta;
      if (std::abs(delta) <= opts.newton_tol * (1.0 + std::abs(y)))
        return true;
    }
    return false;
  }

  // Track one root along the straight segment from p0 to p1.
  cplx track_segment(cplx y, cplx p0, cplx p1) const {
    double t = 0.0;
    double h = 0.25;
    unsigned easy = 0;
    while (t < 1.0) {
      h = std::min(h, 1.0 - t);
      cplx pa = p0 + (p1 - p0) * t;
      cplx pb = p0 + (p1 - p0) * (t + h);
      std::vector<cplx> ca = fam.f.coeffs_at(pa);
      std::vector<cplx> da = derivative(ca);
      std::vector<cplx> dp = dfdp.coeffs_at(pa);
      cplx fy = horner(da, y);
      cplx predicted = y;
      if (std::abs(fy) > 0.0)
        predicted -= horner(dp, y) / fy * (pb - pa);
      std::vector<cplx> cb = fam.f.coeffs_at(pb);
      std::vector<cplx> db = derivative(cb);
      cplx corrected = predicted;
      bool ok = newton(cb, db, corrected);
      if (ok) {
        double res = std::abs(horner(cb, corrected));
        double bound = opts.residual_tol * (1.0 + coeff_norm(cb)) *
                       std::pow(std::max(1.0, std::abs(corrected)),
                                static_cast<double>(cb.size() - 1));
        if (res > bound)
          ok = false;
      }
      if (!ok) {
        h *= 0.5;
        easy = 0;
        if (h < opts.min_step) {
          std::ostringstream os;
          os << "path tracking step underflow at p = " << pa.real()
             << (pa.imag() < 0 ? " - " : " + ") << std::abs(pa.imag())
             << "i (segment progress " << t << ", step " << h << ")";
          throw std::runtime_error(os.str());
        }
        continue;
      }
      y = corrected;
      t += h;
      if (++easy >= 3) {
        h *= 2.0;
        easy = 0;
      }
    }
    return y;
  }
};

std::vector<cplx> fiber_at(const ParametricFamily &fam, cplx p,
                           const TrackOptions &opts) {
  std::vector<cplx> c = fam.f.coeffs_at(p);
  std::vector<cplx> roots = complex_roots(c, opts.residual_tol);
  if (roots.size() != fam.fiber_degree())
    throw std::runtime_error("fiber degenerates at the base point");
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real())
      return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

double fiber_diameter(const std::vector<cplx> &fiber) {
  double d = 0;
  for (size_t i = 0; i < fiber.size(); ++i)
    for (size_t j = i + 1; j < fiber.size(); ++j)
      d = std::max(d, std::abs(fiber[i] - fiber[j]));
  return d;
}

Perm match_permutation(const std::vector<cplx> &fiber,
                       const std::vector<cplx> &tracked, double match_tol) {
  size_t d = fiber.size();
  if (d == 1)
    return Perm(1);
  double diam = fiber_diameter(fiber);
  double tol = match_tol * diam;
  std::vector<uint32_t> images(d);
  std::vector<bool> used(d, false);
  for (size_t i = 0; i < d; ++i) {
    size_t best = d;
    double best_dist = 0;
    for (size_t j = 0; j < d; ++j) {
      double dist = std::abs(tracked[i] - fiber[j]);
      if (best == d || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best_dist > tol || used[best])
      throw std::runtime_error("ambiguous fiber matching after a loop");
    used[best] = true;
    images[i] = static_cast<uint32_t>(best);
  }
  return Perm(std::move(images));
}

} // namespace

std::vector<cplx> branch_points(const ParametricFamily &fam,
                                const TrackOptions &opts) {
  ZPoly crit(1L);
  if (fam.f.degree_y() >= 2) {
    ZPoly d = discriminant_y(fam.f);
    if (d.is_zero())
      throw std::runtime_error(
          "discriminant vanishes identically: family violates the distinct-"
          "fiber assumption");
    crit = crit * d;
  }
  if (fam.leading_coeff().degree() >= 1)
    crit = crit * fam.leading_coeff();
  if (crit.degree() < 1)
    return {};
  // squarefree part keeps the same roots without multiplicity
  ZPoly g = gcd(crit, crit.derivative());
  if (g.degree() > 0) {
    auto q = crit.divided_by(g);
    if (q)
      crit = *q;
  }
  std::vector<cplx> roots = zroots(crit, opts.residual_tol);
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real())
      return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

Perm track_loop(const ParametricFamily &fam, const std::vector<cplx> &path,
                const TrackOptions &opts) {
  if (path.size() < 2 || std::abs(path.front() - path.back()) > 1e-14)
    throw std::invalid_argument("loop must be a closed polygonal path");
  std::vector<cplx> fiber = fiber_at(fam, path.front(), opts);
  Tracker tracker(fam, opts);
  std::vector<cplx> tracked = fiber;
  for (size_t s = 0; s + 1 < path.size(); ++s)
    for (cplx &y : tracked)
      y = tracker.track_segment(y, path[s], path[s + 1]);
  return match_permutation(fiber, tracked, opts.match_tol);
}

namespace {

std::vector<cplx> petal_path(cplx base, cplx w, double radius,
                             unsigned segments) {
  cplx dir = (base - w) / std::abs(base - w);
  cplx a = w + radius * dir;
  std::vector<cplx> path{base, a};
  for (unsigned k = 1; k <= segments; ++k) {
    double phi = 2.0 * M_PI * k / segments;
    path.push_back(w + radius * dir * cplx(std::cos(phi), std::sin(phi)));
  }
  path.push_back(base);
  return path;
}

} // namespace

MonodromyResult monodromy_group(const ParametricFamily &fam,
                                const TrackOptions &opts) {
  std::vector<cplx> ws = branch_points(fam, opts);
  if (ws.size() > opts.max_branch_points)
    throw std::runtime_error("too many branch points");

  double maxw = 0;
  for (cplx w : ws)
    maxw = std::max(maxw, std::abs(w));
  double radius = 2.0 * maxw + 1.0;
  cplx base = radius * cplx(std::cos(opts.base_angle), std::sin(opts.base_angle));

  MonodromyResult out;
  out.base_point = base;
  out.fiber = fiber_at(fam, base, opts);

  // Petal order: ascending spoke angle as seen from the base point, so the
  // concatenation of all petals is homotopic to one circuit of the base
  // circle.
  std::sort(ws.begin(), ws.end(), [&](cplx a, cplx b) {
    double aa = std::arg(a - base), ab = std::arg(b - base);
    if (aa != ab)
      return aa < ab;
    if (a.real() != b.real())
      return a.real() < b.real();
    return a.imag() < b.imag();
  });
  out.branch_points = ws;

  unsigned d = fam.fiber_degree();
  std::vector<Perm> perms;
  for (size_t i = 0; i < ws.size(); ++i) {
    double clearance = std::abs(base - ws[i]) / 2.0;
    for (size_t j = 0; j < ws.size(); ++j)
      if (j != i)
        clearance = std::min(clearance, std::abs(ws[i] - ws[j]) / 2.0);
    clearance = std::min(clearance, 1.0);
    clearance = std::max(clearance, opts.clearance_floor);
    try {
      perms.push_back(track_loop(
          fam, petal_path(base, ws[i], clearance, opts.circle_segments),
          opts));
    } catch (const std::exception &e) {
      std::ostringstream os;
      os << "petal loop around branch point " << ws[i].real()
         << (ws[i].imag() < 0 ? " - " : " + ") << std::abs(ws[i].imag())
         << "i failed: " << e.what();
      throw std::runtime_error(os.str());
    }
  }
  out.loop_permutations = perms;
  if (perms.empty())
    perms.push_back(Perm(d));
  out.group = PermGroup(d, perms);
  return out;
}

Perm big_circle_permutation(const ParametricFamily &fam,
                            const TrackOptions &opts) {
  std::vector<cplx> ws = branch_points(fam, opts);
  double maxw = 0;
  for (cplx w : ws)
    maxw = std::max(maxw, std::abs(w));
  double radius = 2.0 * maxw + 1.0;
  unsigned segments = 48;
  std::vector<cplx> path;
  for (unsigned k = 0; k <= segments; ++k) {
    double phi = opts.base_angle + 2.0 * M_PI * k / segments;
    path.push_back(radius * cplx(std::cos(phi), std::sin(phi)));
  }
  path.back() = path.front();
  return track_loop(fam, path, opts);
}

WidthReport family_width(const ParametricFamily &fam,
                         const TrackOptions &opts) {
  MonodromyResult mono = monodromy_group(fam, opts);
  WidthReport r = width(mono.group);
  r.confidence = Confidence::heuristic_lower_bound;
  return r;
}

} // namespace gw
