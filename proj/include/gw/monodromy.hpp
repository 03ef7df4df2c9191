#ifndef GW_MONODROMY_HPP
#define GW_MONODROMY_HPP

#include <complex>
#include <vector>

#include "gw/family.hpp"
#include "gw/perm_group.hpp"
#include "gw/width.hpp"

namespace gw {

using cplx = std::complex<double>;

struct TrackOptions {
  double newton_tol = 1e-12;        // corrector convergence
  double residual_tol = 1e-8;       // |f| acceptance, scaled by coeff norm
  double match_tol = 1e-4;          // endpoint matching after normalization
  double min_step = 1e-12;
  double clearance_floor = 1e-3;    // petal radius lower bound
  unsigned circle_segments = 16;    // polygon points per petal circle
  unsigned max_branch_points = 64;
  double base_angle = 0.6180339887; // generic, fixed for determinism
};

// Roots of disc_y(f)(p) * lc(p), computed from the exact integer
// discriminant, then rooted numerically with a residual check.
std::vector<cplx> branch_points(const ParametricFamily &fam,
                                const TrackOptions &opts = {});

// Continue every fiber root along the closed polygonal path (first ==
// last vertex required); returns the permutation matching end roots to
// start roots. Throws on step underflow or ambiguous matching.
Perm track_loop(const ParametricFamily &fam, const std::vector<cplx> &path,
                const TrackOptions &opts = {});

struct MonodromyResult {
  cplx base_point;
  std::vector<cplx> fiber;             // roots at the base, canonical order
  std::vector<cplx> branch_points;     // canonical (petal) order
  std::vector<Perm> loop_permutations; // one petal loop per branch point
  PermGroup group;

  bool transitive() const { return group.is_transitive(); }
};

// Petal loops: from a base point on a circle of radius 2*max|w|+1, approach
// each branch point, circle it once counterclockwise, return. Petals are
// ordered so that their concatenation is homotopic to the full base circle.
MonodromyResult monodromy_group(const ParametricFamily &fam,
                                const TrackOptions &opts = {});

// Width of the numerically generated group; confidence is always
// heuristic-lower-bound (a subgroup of the true monodromy group still
// bounds the width from below).
WidthReport family_width(const ParametricFamily &fam,
                         const TrackOptions &opts = {});

// Permutation of one circuit around all branch points (used by the
// loop-composition consistency checks).
Perm big_circle_permutation(const ParametricFamily &fam,
                            const TrackOptions &opts = {});

} // namespace gw

#endif
