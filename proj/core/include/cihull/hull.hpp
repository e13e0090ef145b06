#pragma once

#include <cstdint>

#include "cihull/geometry.hpp"
#include "cihull/instance.hpp"
#include "cihull/polytope.hpp"
#include "cihull/section.hpp"

namespace cihull {

// Computes the vertex description of the set
//
//   { sum_j  xi_j x_j  :  xi_j in I_j,  sum_j xi_j = 1 }.
//
// Returns an empty polytope when the interval sums exclude 1 and throws
// UnboundedHull when the set has a recession direction; otherwise returns
// its vertices (with counterclockwise ordering when the hull is
// two-dimensional).
VPolytope interval_hull(const Instance& inst, const Tolerances& tol = {},
                        std::size_t edge_cap = kDefaultEdgeCap);

// Upper bound on the vertex count for m intervals in general position:
// n * C(m, n) with n = floor(m/2) + 1.
std::uint64_t vertex_bound(std::size_t m);

// Sharper bound m(m-1) valid when every pair of interval widths sums to
// more than 1 - alpha.
std::uint64_t wide_vertex_bound(std::size_t m);

}  // namespace cihull
