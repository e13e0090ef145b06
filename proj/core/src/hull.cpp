#include "cihull/hull.hpp"

#include <stdexcept>

#include "cihull/errors.hpp"
#include "cihull/feasibility.hpp"
#include "cihull/reduction.hpp"

namespace cihull {

VPolytope interval_hull(const Instance& inst, const Tolerances& tol,
                        std::size_t edge_cap) {
  if (!is_nonempty(inst.family)) return VPolytope{};
  if (!is_bounded(inst))
    throw UnboundedHull("the combination set has a recession direction");

  const IntervalFamily clipped = reduce_family(bound_family(inst.family), tol);
  const CoefficientSection sec = coefficient_section(clipped, tol);
  const std::vector<Point> sv = section_vertices(sec, tol, edge_cap);
  const PointSet ambient = map_to_ambient(sec, sv, inst.points);
  return extract_vertices(ambient, tol);
}

std::uint64_t vertex_bound(std::size_t m) {
  if (m == 0) throw std::invalid_argument("vertex bound needs m >= 1");
  const std::uint64_t n = m / 2 + 1;
  std::uint64_t binom = 1;
  for (std::uint64_t i = 1; i <= m - n; ++i)
    binom = binom * (n + i) / i;  // exact: C(n+i, i) stays integral
  return n * binom;
}

std::uint64_t wide_vertex_bound(std::size_t m) {
  if (m < 2) throw std::invalid_argument("the pairwise bound needs m >= 2");
  return static_cast<std::uint64_t>(m) * (m - 1);
}

}  // namespace cihull
