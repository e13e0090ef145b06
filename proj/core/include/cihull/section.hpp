#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cihull/geometry.hpp"
#include "cihull/instance.hpp"
#include "cihull/interval.hpp"

namespace cihull {

// The feasible coefficient set rewritten as a hyperplane section of the
// unit cube: substituting xi_j = a_j + w_j mu_j and dropping singleton
// intervals leaves
//
//   { mu in [0,1]^(m') : sum w_r mu_r = rhs },   rhs = 1 - alpha.
//
// `index_map[r]` is the original index of cube coordinate r, `fixed`
// lists the singleton coefficients, and `lows` are the original lower
// endpoints (all indices, singletons included).
struct CoefficientSection {
  std::vector<double> weights;  // positive widths, one per cube coordinate
  double rhs = 0.0;
  std::vector<std::pair<std::size_t, double>> fixed;
  std::vector<std::size_t> index_map;
  std::vector<double> lows;
};

inline constexpr std::size_t kDefaultEdgeCap = 22;

// Builds the section from the family as given.  Endpoints must be finite
// (clip first) and the family nonempty; singletons are moved to `fixed`.
CoefficientSection coefficient_section(const IntervalFamily& fam,
                                       const Tolerances& tol = {});

// Vertices of the cube section, as points in [0,1]^(m').  A vertex either
// is a cube vertex on the constraint plane or lies on a cube edge: all
// coordinates at 0 or 1 except at most one.  Enumeration is O(m 2^m);
// sections with more than `edge_cap` cube coordinates throw CapExceeded.
std::vector<Point> section_vertices(const CoefficientSection& sec,
                                    const Tolerances& tol = {},
                                    std::size_t edge_cap = kDefaultEdgeCap);

// Maps section points to ambient space: sum of lows against the points
// plus the weighted cube contributions.
PointSet map_to_ambient(const CoefficientSection& sec,
                        const std::vector<Point>& section_pts,
                        const PointSet& points);

}  // namespace cihull
