#pragma once

#include <cstddef>
#include <vector>

namespace cihull {

using Point = std::vector<double>;
using PointSet = std::vector<Point>;

// Numerical tolerances used across the library.
//
//   dedup  relative tolerance for identifying coincident points; it is
//          scaled by the coordinate magnitude of the data at hand
//   geom   absolute tolerance for geometric predicates (rank decisions,
//          hyperplane side tests, linear-program feasibility of points)
//   feas   absolute tolerance for feasibility arithmetic on interval
//          endpoints and coefficient sums
struct Tolerances {
  double dedup = 1e-9;
  double geom = 1e-9;
  double feas = 1e-10;
};

Point sub(const Point& a, const Point& b);
Point add(const Point& a, const Point& b);
Point scaled(const Point& a, double t);
double dot(const Point& a, const Point& b);

// Chebyshev distance between two points of equal dimension.
double max_norm_dist(const Point& a, const Point& b);

// Largest absolute coordinate appearing in the set; 0 for an empty set.
double max_abs_coord(const PointSet& pts);

// max(1, max_abs_coord): multiplier turning relative tolerances into
// absolute ones without collapsing for data near the origin.
double coordinate_scale(const PointSet& pts);

// Dimension of the affine hull of `pts`: -1 for the empty set, 0 for a
// single point, and the rank of the difference matrix otherwise.
int affine_dim(const PointSet& pts, const Tolerances& tol = {});

bool is_affinely_independent(const PointSet& pts, const Tolerances& tol = {});

}  // namespace cihull
