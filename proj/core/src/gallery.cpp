#include "cihull/gallery.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <utility>
#include <vector>

#include "cihull/errors.hpp"
#include "cihull/hull.hpp"
#include "cihull/interval.hpp"

namespace cihull {
namespace {

const double kR3 = std::sqrt(3.0);
const double kR5 = std::sqrt(5.0);

GalleryEntry make(std::string id, PointSet pts,
                  std::vector<std::pair<double, double>> ivs,
                  std::size_t expected, Regularity reg, std::string notes) {
  std::vector<Interval> family;
  family.reserve(ivs.size());
  for (const auto& [lo, hi] : ivs) family.emplace_back(lo, hi);
  return GalleryEntry{std::move(id),
                      Instance(std::move(pts), IntervalFamily(std::move(family))),
                      expected, reg, std::move(notes)};
}

std::vector<GalleryEntry> build() {
  std::vector<GalleryEntry> g;

  // Planar families over a right triangle.
  const PointSet tri0{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  g.push_back(make("fig1", tri0, {{-1.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}, 4,
                   Regularity::RegularPolygon, "unit square"));
  g.push_back(make("fig2", tri0,
                   {{0.0, 1.0}, {0.0, 2.0 / 3.0}, {0.0, 2.0 / 3.0}}, 5,
                   Regularity::None, "irregular pentagon"));

  // Equilateral triangle with side 2.
  const PointSet tri{{-1.0, 0.0}, {1.0, 0.0}, {0.0, kR3}};
  g.push_back(make("fig3", tri,
                   {{0.0, 2.0 / 3.0}, {0.0, 2.0 / 3.0}, {0.0, 2.0 / 3.0}}, 6,
                   Regularity::RegularPolygon, "regular hexagon"));

  // Three vertices of a regular pentagon plus its top vertex.
  const double pw = std::sqrt(10.0 + 2.0 * kR5);
  g.push_back(make("fig4",
                   {{0.0, -5.0 - 2.0 * kR5}, {pw, kR5}, {0.0, 5.0}, {-pw, kR5}},
                   {{0.0, 3.0 - kR5}, {0.0, 2.0}, {-1.0, 1.0}, {0.0, 2.0}}, 5,
                   Regularity::RegularPolygon, "regular pentagon"));

  const double h = std::sqrt(2.0) / 2.0;
  g.push_back(make("fig5",
                   {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}},
                   {{0.0, h}, {0.0, h}, {0.0, h}, {0.0, h}}, 8,
                   Regularity::RegularPolygon, "regular octagon"));

  // The equilateral triangle together with its center.
  const PointSet tric{{-1.0, 0.0}, {1.0, 0.0}, {0.0, kR3}, {0.0, 1.0 / kR3}};
  g.push_back(make("fig6", tric,
                   {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {(kR3 - 3.0) / 2.0, 1.0}},
                   9, Regularity::EqualEdges, "equilateral nonagon"));
  g.push_back(make("fig7", tric,
                   {{0.0, 2.0}, {0.0, 2.0}, {0.0, 2.0}, {-1.0, 0.0}}, 3,
                   Regularity::RegularPolygon, "equilateral triangle"));
  g.push_back(make("fig8", tric,
                   {{0.0, 1.0}, {0.0, 2.0}, {0.0, 2.0}, {-1.0, 0.0}}, 5,
                   Regularity::None, "pentagon"));
  g.push_back(make("fig9", tric,
                   {{0.0, 1.0}, {0.0, 1.0}, {0.0, 2.0}, {-1.0, 0.0}}, 6,
                   Regularity::None, "hexagon"));
  g.push_back(make("fig10", tric,
                   {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {-1.0, 0.0}}, 6,
                   Regularity::None, "hexagon"));
  g.push_back(make("fig11", tric,
                   {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {1.0 - kR3, 0.0}}, 9,
                   Regularity::None, "nonagon"));
  g.push_back(make("fig12", tric,
                   {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {1.0 - kR3, kR3 - 2.0}},
                   12, Regularity::RegularPolygon, "regular dodecagon"));

  // Regular tetrahedron with side 2.
  const double apexZ = 2.0 * std::sqrt(2.0 / 3.0);
  const PointSet tetra{{-1.0, 0.0, 0.0},
                       {1.0, 0.0, 0.0},
                       {0.0, kR3, 0.0},
                       {0.0, 1.0 / kR3, apexZ}};
  g.push_back(make("fig13", tetra,
                   {{0.0, 2.0 / 3.0},
                    {0.0, 2.0 / 3.0},
                    {0.0, 2.0 / 3.0},
                    {0.0, 2.0 / 3.0}},
                   12, Regularity::None, "truncated tetrahedron"));

  g.push_back(make("fig14",
                   {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}},
                   {{-2.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}, 8,
                   Regularity::None, "cube"));

  // The tetrahedron together with its center.
  PointSet tetrac = tetra;
  tetrac.push_back({0.0, 1.0 / kR3, 1.0 / std::sqrt(6.0)});
  g.push_back(make("fig15", tetrac,
                   {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {-2.0, 0.0}},
                   14, Regularity::None, "rhombic dodecahedron"));
  g.push_back(make("fig16", tetrac,
                   {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {-0.5, 0.0}},
                   16, Regularity::None, "tetrahedron with corners cut"));

  return g;
}

}  // namespace

const std::vector<GalleryEntry>& builtin_gallery() {
  static const std::vector<GalleryEntry> entries = build();
  return entries;
}

bool equal_edge_lengths(const VPolytope& vp, double rel) {
  if (vp.dim != 2 || vp.order.size() < 3) return false;
  double lo = kInf, hi = 0.0;
  const std::size_t n = vp.order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vp.vertices[vp.order[i]];
    const Point& q = vp.vertices[vp.order[(i + 1) % n]];
    const Point e = sub(q, p);
    const double len = std::sqrt(dot(e, e));
    lo = std::min(lo, len);
    hi = std::max(hi, len);
  }
  return hi - lo <= rel * hi;
}

bool is_regular_polygon(const VPolytope& vp, double rel) {
  if (!equal_edge_lengths(vp, rel)) return false;
  // Equal edges plus a common circumscribed circle pin the shape down.
  const std::size_t n = vp.vertices.size();
  Point c(vp.vertices[0].size(), 0.0);
  for (const Point& p : vp.vertices) c = add(c, p);
  c = scaled(c, 1.0 / static_cast<double>(n));
  double lo = kInf, hi = 0.0;
  for (const Point& p : vp.vertices) {
    const Point r = sub(p, c);
    const double dist = std::sqrt(dot(r, r));
    lo = std::min(lo, dist);
    hi = std::max(hi, dist);
  }
  return hi - lo <= rel * hi;
}

GalleryResult run_gallery_entry(const GalleryEntry& entry,
                                const Tolerances& tol) {
  GalleryResult res;
  res.id = entry.id;
  res.expected_vertices = entry.expected_vertices;
  const VPolytope vp = interval_hull(entry.instance, tol);
  res.actual_vertices = vp.count();
  switch (entry.regularity) {
    case Regularity::None:
      break;
    case Regularity::EqualEdges:
      res.regularity_ok = equal_edge_lengths(vp);
      break;
    case Regularity::RegularPolygon:
      res.regularity_ok = is_regular_polygon(vp);
      break;
  }
  res.pass = res.actual_vertices == res.expected_vertices && res.regularity_ok;
  if (!res.pass) {
    std::ostringstream os;
    os << "expected " << res.expected_vertices << " vertices, got "
       << res.actual_vertices;
    if (!res.regularity_ok) os << "; regularity check failed";
    res.detail = os.str();
  }
  return res;
}

}  // namespace cihull
