#include "cihull/section.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "cihull/errors.hpp"

namespace cihull {

namespace {

constexpr std::size_t kHardEdgeCap = 26;

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool close(const Point& a, const Point& b, double eps) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > eps) return false;
  }
  return true;
}

}  // namespace

CoefficientSection coefficient_section(const IntervalFamily& fam,
                                       const Tolerances& tol) {
  (void)tol;
  if (!fam.all_finite()) {
    throw UnboundedHull("coefficient_section needs finite endpoints; clip the family first");
  }
  if (fam.alpha() > 1.0 || fam.beta() < 1.0) {
    throw EmptyHull("coefficient_section: interval sums exclude 1");
  }
  CoefficientSection sec;
  sec.rhs = 1.0 - fam.alpha();
  sec.lows.reserve(fam.size());
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const Interval& iv = fam[j];
    sec.lows.push_back(iv.lo);
    if (iv.is_singleton()) {
      sec.fixed.emplace_back(j, iv.lo);
    } else {
      sec.weights.push_back(iv.width());
      sec.index_map.push_back(j);
    }
  }
  return sec;
}

std::vector<Point> section_vertices(const CoefficientSection& sec,
                                    const Tolerances& tol,
                                    std::size_t edge_cap) {
  const std::size_t m = sec.weights.size();
  const std::size_t cap = std::min(edge_cap, kHardEdgeCap);
  if (m > cap)
    throw CapExceeded("section has too many interval coordinates to enumerate", m);

  double wmax = 0.0;
  for (double w : sec.weights) wmax = std::max(wmax, w);
  const double scale = std::max({1.0, std::abs(sec.rhs), wmax});
  const double eps_plane = tol.geom * scale;  // residual of sum w_r mu_r - rhs
  const double eps_band = tol.geom;           // slack on a single mu_k

  if (m == 0) {
    if (std::abs(sec.rhs) <= eps_plane) return {Point{}};
    return {};
  }

  std::vector<Point> cand;
  const std::uint64_t masks = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    double s = 0.0;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      s += sec.weights[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    if (std::abs(s - sec.rhs) <= eps_plane) {
      Point p(m, 0.0);
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        p[static_cast<std::size_t>(std::countr_zero(bits))] = 1.0;
      }
      cand.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (std::uint64_t{1} << k)) continue;
      const double mu = (sec.rhs - s) / sec.weights[k];
      if (mu < -eps_band || mu > 1.0 + eps_band) continue;
      Point p(m, 0.0);
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        p[static_cast<std::size_t>(std::countr_zero(bits))] = 1.0;
      }
      p[k] = std::clamp(mu, 0.0, 1.0);
      cand.push_back(std::move(p));
    }
  }

  std::sort(cand.begin(), cand.end(), lex_less);
  std::vector<Point> out;
  const double eps_dup = tol.dedup;  // cube coordinates, unit scale
  for (auto& p : cand) {
    if (!out.empty() && close(out.back(), p, eps_dup)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

PointSet map_to_ambient(const CoefficientSection& sec,
                        const std::vector<Point>& section_pts,
                        const PointSet& points) {
  const std::size_t d = points.empty() ? 0 : points[0].size();
  Point base(d, 0.0);
  for (std::size_t j = 0; j < sec.lows.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) base[i] += sec.lows[j] * points[j][i];
  }
  PointSet out;
  out.reserve(section_pts.size());
  for (const Point& mu : section_pts) {
    Point x = base;
    for (std::size_t r = 0; r < sec.index_map.size(); ++r) {
      const Point& pj = points[sec.index_map[r]];
      const double c = sec.weights[r] * mu[r];
      for (std::size_t i = 0; i < d; ++i) x[i] += c * pj[i];
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace cihull
