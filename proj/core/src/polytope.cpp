#include "cihull/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "cihull/errors.hpp"
#include "cihull/interval.hpp"
#include "cihull/lp.hpp"

namespace cihull {
namespace {

// Orthonormal basis of the plane spanned by a two-dimensional point set.
std::pair<Point, Point> plane_basis(const PointSet& pts) {
  const std::size_t d = pts[0].size();
  if (d == 2) return {Point{1.0, 0.0}, Point{0.0, 1.0}};

  const Point& origin = pts[0];
  Point u;
  double best = 0.0;
  for (const Point& p : pts) {
    const Point diff = sub(p, origin);
    const double n2 = dot(diff, diff);
    if (n2 > best) {
      best = n2;
      u = diff;
    }
  }
  u = scaled(u, 1.0 / std::sqrt(best));

  Point v;
  best = 0.0;
  for (const Point& p : pts) {
    Point diff = sub(p, origin);
    diff = sub(diff, scaled(u, dot(diff, u)));
    const double n2 = dot(diff, diff);
    if (n2 > best) {
      best = n2;
      v = diff;
    }
  }
  v = scaled(v, 1.0 / std::sqrt(best));
  return {u, v};
}

}  // namespace

VPolytope extract_vertices(const PointSet& points, const Tolerances& tol) {
  VPolytope vp;
  if (points.empty()) return vp;

  const double scale = coordinate_scale(points);
  const double sep = tol.dedup * scale;
  PointSet reps;
  for (const Point& p : points) {
    bool seen = false;
    for (const Point& r : reps)
      if (max_norm_dist(p, r) <= sep) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(p);
  }

  vp.dim = affine_dim(reps, tol);
  const std::size_t n = reps.size();
  const std::size_t d = reps[0].size();

  if (n == 1) {
    vp.vertices = reps;
    return vp;
  }

  // Keep p iff it is not a convex combination of the other points.  The
  // pool deliberately includes points already dropped: they are interior,
  // so they never change the answer, and keeping them makes the test
  // independent of iteration order.
  for (std::size_t i = 0; i < n; ++i) {
    LinearProgram lp;
    lp.num_vars = n - 1;
    lp.lower.assign(n - 1, 0.0);
    lp.upper.assign(n - 1, kInf);
    lp.rows.assign(d + 1, std::vector<double>(n - 1, 0.0));
    lp.rhs.assign(d + 1, 0.0);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      lp.rows[0][col] = 1.0;
      for (std::size_t c = 0; c < d; ++c) lp.rows[c + 1][col] = reps[j][c];
      ++col;
    }
    lp.rhs[0] = 1.0;
    for (std::size_t c = 0; c < d; ++c) lp.rhs[c + 1] = reps[i][c];
    const LpResult res = lp_solve(lp, tol.geom * scale);
    if (res.status != LpStatus::Feasible) vp.vertices.push_back(reps[i]);
  }

  std::sort(vp.vertices.begin(), vp.vertices.end());

  if (vp.dim == 2 && vp.vertices.size() >= 3) {
    const auto [u, v] = plane_basis(vp.vertices);
    const Point& origin = vp.vertices[0];
    std::vector<double> su(vp.vertices.size()), sv(vp.vertices.size());
    double cu = 0.0, cv = 0.0;
    for (std::size_t i = 0; i < vp.vertices.size(); ++i) {
      const Point diff = sub(vp.vertices[i], origin);
      su[i] = dot(diff, u);
      sv[i] = dot(diff, v);
      cu += su[i];
      cv += sv[i];
    }
    cu /= static_cast<double>(vp.vertices.size());
    cv /= static_cast<double>(vp.vertices.size());

    vp.order.resize(vp.vertices.size());
    std::iota(vp.order.begin(), vp.order.end(), std::size_t{0});
    std::vector<double> ang(vp.vertices.size());
    for (std::size_t i = 0; i < vp.vertices.size(); ++i)
      ang[i] = std::atan2(sv[i] - cv, su[i] - cu);
    std::sort(vp.order.begin(), vp.order.end(),
              [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
    const auto start = std::find(vp.order.begin(), vp.order.end(), std::size_t{0});
    std::rotate(vp.order.begin(), start, vp.order.end());
  }
  return vp;
}

bool vertex_sets_match(const VPolytope& a, const VPolytope& b, double eps) {
  if (a.count() != b.count()) return false;
  std::vector<bool> used(b.count(), false);
  for (const Point& p : a.vertices) {
    bool found = false;
    for (std::size_t j = 0; j < b.count(); ++j) {
      if (used[j]) continue;
      if (max_norm_dist(p, b.vertices[j]) <= eps) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

double polygon_area(const VPolytope& vp) {
  if (vp.dim != 2 || vp.vertices.empty() || vp.vertices[0].size() != 2)
    throw DimensionUnsupported("area needs a two-dimensional hull in the plane");
  double twice = 0.0;
  const std::size_t n = vp.order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vp.vertices[vp.order[i]];
    const Point& q = vp.vertices[vp.order[(i + 1) % n]];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return std::abs(twice) / 2.0;
}

}  // namespace cihull
