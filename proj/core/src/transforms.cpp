#include "cihull/transforms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "cihull/errors.hpp"
#include "cihull/feasibility.hpp"
#include "cihull/reduction.hpp"

namespace cihull {

Point AffineMap::operator()(const Point& x) const {
  Point y(offset);
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += matrix[i][j] * x[j];
  return y;
}

Point Homothety::operator()(const Point& x) const {
  Point y(center);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += ratio * x[i];
  return y;
}

Instance apply_affine(const Instance& inst, const AffineMap& map,
                      const Tolerances& tol) {
  if (map.matrix.empty() || map.offset.size() != map.matrix.size())
    throw InvalidInstance("affine map needs a matrix and an offset of matching height");
  for (const auto& row : map.matrix)
    if (row.size() != inst.dim())
      throw InvalidInstance("affine map width does not match the point dimension");
  // Interval sums must stay meaningful under merging, so infinite
  // endpoints are clipped away first; this keeps the hull intact and
  // rejects empty or unbounded instances.
  const IntervalFamily fam = inst.family.all_finite()
                                 ? inst.family
                                 : bound_family(inst.family);

  PointSet images;
  images.reserve(inst.size());
  for (const Point& p : inst.points) images.push_back(map(p));

  // Points that collide under the map carry one merged coefficient, so
  // their intervals add.
  const double sep = tol.dedup * coordinate_scale(images);
  PointSet pts;
  std::vector<Interval> ivs;
  std::vector<std::string> labels;
  const bool labeled = !inst.labels.empty();
  for (std::size_t j = 0; j < inst.size(); ++j) {
    std::size_t hit = pts.size();
    for (std::size_t r = 0; r < pts.size(); ++r)
      if (max_norm_dist(images[j], pts[r]) <= sep) {
        hit = r;
        break;
      }
    if (hit == pts.size()) {
      pts.push_back(images[j]);
      ivs.push_back(fam[j]);
      if (labeled) labels.push_back(inst.labels[j]);
    } else {
      ivs[hit] = Interval(ivs[hit].lo + fam[j].lo, ivs[hit].hi + fam[j].hi);
      if (labeled) labels[hit] += "+" + inst.labels[j];
    }
  }
  return Instance(std::move(pts), IntervalFamily(std::move(ivs)),
                  std::move(labels), tol);
}

std::vector<double> solve_coefficients(const PointSet& points, const Point& v,
                                       double delta, const Tolerances& tol) {
  if (points.empty()) throw InvalidInstance("need at least one point");
  const std::size_t m = points.size();
  const std::size_t d = points[0].size();
  if (v.size() != d)
    throw InvalidInstance("target dimension does not match the points");

  // Coordinates stacked over the coefficient-sum row.
  Eigen::MatrixXd a(static_cast<Eigen::Index>(d + 1),
                    static_cast<Eigen::Index>(m));
  Eigen::VectorXd b(static_cast<Eigen::Index>(d + 1));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t j = 0; j < m; ++j)
      a(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(j)) =
          points[j][c];
    b(static_cast<Eigen::Index>(c)) = v[c];
  }
  for (std::size_t j = 0; j < m; ++j)
    a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(j)) = 1.0;
  b(static_cast<Eigen::Index>(d)) = 1.0 - delta;

  const Eigen::VectorXd nu =
      a.completeOrthogonalDecomposition().solve(b);
  const double residual = (a * nu - b).lpNorm<Eigen::Infinity>();
  double scale = std::max(1.0, std::abs(1.0 - delta));
  scale = std::max(scale, max_abs_coord(points));
  for (double c : v) scale = std::max(scale, std::abs(c));
  if (residual > tol.geom * scale)
    throw NotInAffineHull("the target cannot be written over these points with the required coefficient sum");

  std::vector<double> out(m);
  for (std::size_t j = 0; j < m; ++j)
    out[j] = nu(static_cast<Eigen::Index>(j));
  return out;
}

Instance apply_homothety(const Instance& inst, const Point& v, double delta,
                         const Tolerances& tol) {
  if (delta == 0.0)
    throw std::invalid_argument("scaling ratio must be nonzero");
  const std::vector<double> nu = solve_coefficients(inst.points, v, delta, tol);

  std::vector<Interval> ivs;
  ivs.reserve(inst.size());
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const Interval& iv = inst.family[j];
    if (delta > 0.0)
      ivs.emplace_back(nu[j] + delta * iv.lo, nu[j] + delta * iv.hi);
    else
      ivs.emplace_back(nu[j] + delta * iv.hi, nu[j] + delta * iv.lo);
  }
  return Instance(inst.points, IntervalFamily(std::move(ivs)), inst.labels,
                  tol);
}

Instance homothet_instance(const PointSet& points,
                           const std::vector<double>& coefficients,
                           const Tolerances& tol) {
  if (coefficients.size() != points.size())
    throw InvalidInstance("one coefficient per point required");
  double gamma = 0.0;
  for (double c : coefficients) gamma += c;
  if (gamma == 1.0)
    throw GammaIsOne("coefficients summing to one leave no room to scale");

  const double q = 1.0 - gamma;
  std::vector<Interval> ivs;
  ivs.reserve(coefficients.size());
  for (double c : coefficients) {
    if (q > 0.0)
      ivs.emplace_back(c, c + q);
    else
      ivs.emplace_back(c + q, c);
  }
  return Instance(points, IntervalFamily(std::move(ivs)), {}, tol);
}

Decomposition decompose(const Instance& inst, const Tolerances& tol) {
  if (!is_affinely_independent(inst.points, tol))
    throw NotAffinelyIndependent("decomposition needs affinely independent points");
  if (!inst.family.all_finite() || !is_irreducible(inst.family, tol))
    throw NotIrreducible("decomposition needs a finite, fully clipped interval family");
  const double alpha = inst.family.alpha();
  if (!(alpha < 1.0))
    throw AlphaNotBelowOne("decomposition needs the lower endpoints to sum below one");

  const std::size_t d = inst.dim();
  const double delta = 1.0 - alpha;
  Point v(d, 0.0);
  for (std::size_t j = 0; j < inst.size(); ++j)
    for (std::size_t c = 0; c < d; ++c)
      v[c] += inst.family[j].lo * inst.points[j][c];

  Decomposition dec;
  dec.outer = {v, delta};
  dec.base = inst.points;
  dec.inner.reserve(inst.size());
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const double dj = inst.family.widths()[j];
    Point t(v);
    for (std::size_t c = 0; c < d; ++c) t[c] += dj * inst.points[j][c];
    dec.inner.push_back({std::move(t), std::max(0.0, delta - dj)});
  }
  return dec;
}

}  // namespace cihull
