#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cihull/geometry.hpp"
#include "cihull/instance.hpp"
#include "cihull/polytope.hpp"

namespace cihull {

// Is x a feasible combination?  Solved directly as a linear program over
// the coefficients (box bounds, sum-to-one row, one row per coordinate).
// Handles unbounded intervals; independent of the hull pipeline.
bool hull_contains(const Instance& inst, const Point& x,
                   const Tolerances& tol = {});

// Is x a convex combination of the polytope's vertices?
bool vpolytope_contains(const VPolytope& vp, const Point& x,
                        const Tolerances& tol = {});

// Ambient points of feasible combinations on a regular grid: the last
// m-1 coefficients sweep `resolution` evenly spaced values of their
// intervals, the first coefficient is solved from the sum constraint and
// kept iff it lands in its interval (tol.feas slack).  Infeasible
// families yield an empty list.  Requires a bounded family; m is capped
// at 6.
PointSet grid_sample(const Instance& inst, std::size_t resolution,
                     const Tolerances& tol = {});

struct CompareReport {
  bool pass = false;
  std::size_t samples_checked = 0;
  std::size_t samples_outside = 0;
  std::size_t vertices_checked = 0;
  std::size_t vertices_infeasible = 0;
  double worst_sample_violation = 0.0;
  double worst_vertex_violation = 0.0;
  std::vector<Point> offending_samples;
  std::vector<Point> offending_vertices;
};

// Cross-checks a computed hull against the instance from both sides:
// every grid sample (and optionally `random_samples` random feasible
// combinations drawn with `seed`) must lie in the polytope, and every
// polytope vertex must be a feasible combination.
CompareReport compare_hulls(const VPolytope& vp, const Instance& inst,
                            std::size_t resolution, const Tolerances& tol = {},
                            std::size_t random_samples = 0,
                            std::uint64_t seed = 0);

}  // namespace cihull
