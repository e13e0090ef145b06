#pragma once

#include <cstddef>
#include <vector>

#include "cihull/geometry.hpp"
#include "cihull/instance.hpp"

namespace cihull {

// x |-> matrix * x + offset, mapping R^d to R^k.
struct AffineMap {
  std::vector<std::vector<double>> matrix;  // k rows of length d
  Point offset;                             // length k

  Point operator()(const Point& x) const;
};

// x |-> center + ratio * x.  A scaling about some fixed point when ratio
// is neither 0 nor 1, a pure translation at ratio 1.  Ratio 0 is kept as
// a marker for an empty image.
struct Homothety {
  Point center;
  double ratio = 1.0;

  Point operator()(const Point& x) const;
  bool empty() const { return ratio == 0.0; }
};

// A hull sandwich: the hull is the closure of `outer` applied to the
// convex hull of the base points minus the union of the `inner` images.
struct Decomposition {
  Homothety outer;
  std::vector<Homothety> inner;  // one per point, empty() when it vanishes
  PointSet base;
};

// Pushes an instance through an affine map.  Points that collide under
// the map are merged and their intervals added.  Families with infinite
// endpoints are clipped first, so the hull must be nonempty and bounded.
Instance apply_affine(const Instance& inst, const AffineMap& map,
                      const Tolerances& tol = {});

// Coefficients expressing v as an affine combination of the points, via
// least squares; throws NotInAffineHull when the residual exceeds
// tolerance.  delta shifts the target coefficient sum: the returned
// vector sums to 1 - delta.
std::vector<double> solve_coefficients(const PointSet& points, const Point& v,
                                       double delta = 0.0,
                                       const Tolerances& tol = {});

// The instance whose hull is the image of the original hull under
// x |-> v + delta * x: each interval becomes nu_j + delta * I_j where nu
// expresses v with coefficient sum 1 - delta.  delta must be nonzero.
Instance apply_homothety(const Instance& inst, const Point& v, double delta,
                         const Tolerances& tol = {});

// Given coefficients c with sum gamma != 1, builds the interval family
// whose hull equals { w + (1 - gamma) y : y in conv(points) } with
// w = sum c_j x_j:  I_j = c_j + (1 - gamma) [0, 1], oriented by the sign
// of 1 - gamma.  Throws GammaIsOne when gamma == 1.
Instance homothet_instance(const PointSet& points,
                           const std::vector<double>& coefficients,
                           const Tolerances& tol = {});

// Writes the hull of an irreducible family on affinely independent points
// as an outer homothet of conv(S) minus one inner homothet per point.
// Requires all-finite intervals with alpha < 1.
Decomposition decompose(const Instance& inst, const Tolerances& tol = {});

}  // namespace cihull
