#include "cihull/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace cihull {

Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point scaled(const Point& a, double t) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_norm_dist(const Point& a, const Point& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs_coord(const PointSet& pts) {
  double m = 0.0;
  for (const auto& p : pts)
    for (double c : p) m = std::max(m, std::abs(c));
  return m;
}

double coordinate_scale(const PointSet& pts) {
  return std::max(1.0, max_abs_coord(pts));
}

int affine_dim(const PointSet& pts, const Tolerances& tol) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  const std::size_t d = pts[0].size();
  Eigen::MatrixXd diff(static_cast<Eigen::Index>(pts.size() - 1),
                       static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t c = 0; c < d; ++c)
      diff(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(c)) =
          pts[i][c] - pts[0][c];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(diff);
  qr.setThreshold(tol.geom);
  return static_cast<int>(qr.rank());
}

bool is_affinely_independent(const PointSet& pts, const Tolerances& tol) {
  return affine_dim(pts, tol) == static_cast<int>(pts.size()) - 1;
}

}  // namespace cihull
