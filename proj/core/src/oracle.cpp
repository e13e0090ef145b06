#include "cihull/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <sstream>
#include <utility>

#include "cihull/errors.hpp"
#include "cihull/feasibility.hpp"
#include "cihull/lp.hpp"

namespace cihull {
namespace {

constexpr std::size_t kGridVarCap = 6;
constexpr std::size_t kOffenderCap = 8;

double point_scale(const PointSet& pts, const Point& x) {
  double s = std::max(1.0, max_abs_coord(pts));
  for (double c : x) s = std::max(s, std::abs(c));
  return s;
}

LpResult membership_lp(const Instance& inst, const Point& x,
                       const Tolerances& tol) {
  if (x.size() != inst.dim())
    throw InvalidInstance("query dimension does not match the instance");
  const std::size_t m = inst.size();
  const std::size_t d = inst.dim();
  LinearProgram lp;
  lp.num_vars = m;
  lp.lower.resize(m);
  lp.upper.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    lp.lower[j] = inst.family[j].lo;
    lp.upper[j] = inst.family[j].hi;
  }
  lp.rows.assign(d + 1, std::vector<double>(m, 0.0));
  lp.rhs.assign(d + 1, 0.0);
  for (std::size_t j = 0; j < m; ++j) lp.rows[0][j] = 1.0;
  lp.rhs[0] = 1.0;
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t j = 0; j < m; ++j)
      lp.rows[c + 1][j] = inst.points[j][c];
    lp.rhs[c + 1] = x[c];
  }
  return lp_solve(lp, tol.geom * point_scale(inst.points, x));
}

LpResult convexity_lp(const VPolytope& vp, const Point& x,
                      const Tolerances& tol) {
  const std::size_t n = vp.count();
  const std::size_t d = vp.vertices[0].size();
  if (x.size() != d)
    throw InvalidInstance("query dimension does not match the polytope");
  LinearProgram lp;
  lp.num_vars = n;
  lp.lower.assign(n, 0.0);
  lp.upper.assign(n, kInf);
  lp.rows.assign(d + 1, std::vector<double>(n, 0.0));
  lp.rhs.assign(d + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) lp.rows[0][j] = 1.0;
  lp.rhs[0] = 1.0;
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t j = 0; j < n; ++j)
      lp.rows[c + 1][j] = vp.vertices[j][c];
    lp.rhs[c + 1] = x[c];
  }
  return lp_solve(lp, tol.geom * point_scale(vp.vertices, x));
}

Point combine(const Instance& inst, const std::vector<double>& xi) {
  Point y(inst.dim(), 0.0);
  for (std::size_t j = 0; j < inst.size(); ++j)
    for (std::size_t c = 0; c < inst.dim(); ++c)
      y[c] += xi[j] * inst.points[j][c];
  return y;
}

}  // namespace

bool hull_contains(const Instance& inst, const Point& x,
                   const Tolerances& tol) {
  return membership_lp(inst, x, tol).status == LpStatus::Feasible;
}

bool vpolytope_contains(const VPolytope& vp, const Point& x,
                        const Tolerances& tol) {
  if (vp.empty()) return false;
  return convexity_lp(vp, x, tol).status == LpStatus::Feasible;
}

namespace {

// Coefficient vectors behind grid_sample; shared with compare_hulls.
std::vector<std::vector<double>> grid_coefficients(const Instance& inst,
                                                   std::size_t resolution,
                                                   const Tolerances& tol) {
  if (resolution == 0)
    throw std::invalid_argument("resolution must be at least 1");
  const std::size_t m = inst.size();
  if (m > kGridVarCap) {
    std::ostringstream os;
    os << "grid sampling over " << m << " coefficients exceeds the cap of "
       << kGridVarCap;
    throw CapExceeded(os.str(), m);
  }
  if (!is_nonempty(inst.family)) return {};
  const IntervalFamily fam = bound_family(inst.family);

  // The first coefficient is solved from the others, so only m-1 axes are
  // swept.
  std::vector<std::vector<double>> axes;
  for (std::size_t j = 1; j < m; ++j) {
    const Interval& iv = fam[j];
    std::vector<double> vals;
    if (iv.width() == 0.0 || resolution == 1) {
      vals.push_back(iv.lo);
    } else {
      for (std::size_t i = 0; i < resolution; ++i)
        vals.push_back(iv.lo + static_cast<double>(i) * iv.width() /
                                   static_cast<double>(resolution - 1));
    }
    axes.push_back(std::move(vals));
  }

  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    std::vector<double> xi(m, 0.0);
    double rest = 0.0;
    for (std::size_t j = 1; j < m; ++j) {
      xi[j] = axes[j - 1][idx[j - 1]];
      rest += xi[j];
    }
    xi[0] = 1.0 - rest;
    if (fam[0].contains(xi[0], tol.feas)) out.push_back(std::move(xi));

    std::size_t k = 0;
    for (; k < axes.size(); ++k) {
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
    }
    if (k == axes.size()) break;
  }
  return out;
}

}  // namespace

PointSet grid_sample(const Instance& inst, std::size_t resolution,
                     const Tolerances& tol) {
  PointSet out;
  for (const auto& xi : grid_coefficients(inst, resolution, tol))
    out.push_back(combine(inst, xi));
  return out;
}

CompareReport compare_hulls(const VPolytope& vp, const Instance& inst,
                            std::size_t resolution, const Tolerances& tol,
                            std::size_t random_samples, std::uint64_t seed) {
  CompareReport rep;
  const bool nonempty = is_nonempty(inst.family);
  if (vp.empty() || !nonempty) {
    rep.pass = vp.empty() && !nonempty;
    return rep;
  }

  auto check_sample = [&](const std::vector<double>& xi) {
    const Point y = combine(inst, xi);
    const LpResult res = convexity_lp(vp, y, tol);
    ++rep.samples_checked;
    if (res.status != LpStatus::Feasible) {
      ++rep.samples_outside;
      rep.worst_sample_violation =
          std::max(rep.worst_sample_violation, res.infeasibility);
      if (rep.offending_samples.size() < kOffenderCap)
        rep.offending_samples.push_back(y);
    }
  };

  for (const auto& xi : grid_coefficients(inst, resolution, tol))
    check_sample(xi);

  if (random_samples > 0) {
    const IntervalFamily fam = bound_family(inst.family);
    std::mt19937_64 rng(seed);
    std::size_t accepted = 0;
    for (std::size_t tries = 0;
         accepted < random_samples && tries < random_samples * 50; ++tries) {
      std::vector<double> xi(inst.size(), 0.0);
      double rest = 0.0;
      for (std::size_t j = 1; j < inst.size(); ++j) {
        std::uniform_real_distribution<double> dist(fam[j].lo, fam[j].hi);
        xi[j] = fam[j].is_singleton() ? fam[j].lo : dist(rng);
        rest += xi[j];
      }
      xi[0] = 1.0 - rest;
      if (!fam[0].contains(xi[0], tol.feas)) continue;
      ++accepted;
      check_sample(xi);
    }
  }

  for (const Point& v : vp.vertices) {
    const LpResult res = membership_lp(inst, v, tol);
    ++rep.vertices_checked;
    if (res.status != LpStatus::Feasible) {
      ++rep.vertices_infeasible;
      rep.worst_vertex_violation =
          std::max(rep.worst_vertex_violation, res.infeasibility);
      if (rep.offending_vertices.size() < kOffenderCap)
        rep.offending_vertices.push_back(v);
    }
  }

  rep.pass = rep.samples_outside == 0 && rep.vertices_infeasible == 0;
  return rep;
}

}  // namespace cihull
