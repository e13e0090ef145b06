#pragma once

#include <cstddef>
#include <vector>

#include "cihull/geometry.hpp"

namespace cihull {

// A polytope given by its vertex list.
//
//   vertices  extreme points, sorted lexicographically
//   dim       dimension of the affine hull (-1 when empty)
//   order     when dim == 2: indices into `vertices` walking the boundary
//             counterclockwise, starting at the lexicographically smallest
//             vertex
struct VPolytope {
  PointSet vertices;
  int dim = -1;
  std::vector<std::size_t> order;

  std::size_t count() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
};

// Reduces a finite point set to the vertices of its convex hull: dedups
// coincident points, then drops every point expressible as a convex
// combination of the others (one small linear program per point).
VPolytope extract_vertices(const PointSet& points, const Tolerances& tol = {});

// Set equality of vertex lists up to eps in Chebyshev distance (both
// lists assumed dedupped).
bool vertex_sets_match(const VPolytope& a, const VPolytope& b, double eps);

// Shoelace area of a two-dimensional polytope in ambient dimension 2.
double polygon_area(const VPolytope& vp);

}  // namespace cihull
