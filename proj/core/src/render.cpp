#include "cihull/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "cihull/errors.hpp"

namespace cihull {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::string render_svg(const Instance& inst, const VPolytope& vp) {
  if (inst.dim() != 2 || vp.dim != 2)
    throw DimensionUnsupported("svg output needs a two-dimensional hull in the plane");

  double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
  auto grow = [&](const Point& p) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  };
  for (const Point& p : inst.points) grow(p);
  for (const Point& p : vp.vertices) grow(p);
  const double pad = 0.1 * std::max({xmax - xmin, ymax - ymin, 1e-6});
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const double w = xmax - xmin;
  const double ht = ymax - ymin;
  // Flip the vertical axis so larger y is drawn higher.
  auto fy = [&](double y) { return ymax + ymin - y; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\""
     << num(640.0 * ht / w) << "\" viewBox=\"" << num(xmin) << " " << num(ymin)
     << " " << num(w) << " " << num(ht) << "\">\n";
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < vp.order.size(); ++i) {
    const Point& p = vp.vertices[vp.order[i]];
    if (i) os << " ";
    os << num(p[0]) << "," << num(fy(p[1]));
  }
  os << "\" fill=\"#d0d0d0\" stroke=\"#808080\" stroke-width=\""
     << num(0.004 * w) << "\"/>\n";
  const double r = 0.015 * std::max(w, ht);
  for (const Point& p : inst.points)
    os << "  <circle cx=\"" << num(p[0]) << "\" cy=\"" << num(fy(p[1]))
       << "\" r=\"" << num(r) << "\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_obj(const VPolytope& vp, const Tolerances& tol) {
  if (vp.empty() || vp.vertices[0].size() != 3 || vp.dim < 2)
    throw DimensionUnsupported("obj output needs a solid or planar hull in three dimensions");

  const std::size_t n = vp.count();
  std::ostringstream os;
  for (const Point& p : vp.vertices)
    os << "v " << num(p[0]) << " " << num(p[1]) << " " << num(p[2]) << "\n";

  Point centroid(3, 0.0);
  for (const Point& p : vp.vertices) centroid = add(centroid, p);
  centroid = scaled(centroid, 1.0 / static_cast<double>(n));

  auto face_cycle = [&](std::vector<std::size_t> face, const Point& normal) {
    // Angle order around the face centroid, counterclockwise when seen
    // from outside (the normal pointing at the viewer).
    Point fc(3, 0.0);
    for (std::size_t i : face) fc = add(fc, vp.vertices[i]);
    fc = scaled(fc, 1.0 / static_cast<double>(face.size()));
    const Point& first = vp.vertices[face[0]];
    Point u = sub(first, fc);
    u = scaled(u, 1.0 / std::sqrt(dot(u, u)));
    Point w = cross(normal, u);
    std::vector<double> ang(face.size());
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Point r = sub(vp.vertices[face[i]], fc);
      ang[i] = std::atan2(dot(r, w), dot(r, u));
    }
    std::vector<std::size_t> ord(face.size());
    std::iota(ord.begin(), ord.end(), std::size_t{0});
    std::sort(ord.begin(), ord.end(),
              [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
    std::vector<std::size_t> out(face.size());
    for (std::size_t i = 0; i < face.size(); ++i) out[i] = face[ord[i]];
    return out;
  };

  if (vp.dim == 2) {
    std::vector<std::size_t> face(n);
    std::iota(face.begin(), face.end(), std::size_t{0});
    const Point a = sub(vp.vertices[1], vp.vertices[0]);
    Point b;
    double best = 0.0;
    for (std::size_t i = 2; i < n; ++i) {
      const Point c = cross(a, sub(vp.vertices[i], vp.vertices[0]));
      const double n2 = dot(c, c);
      if (n2 > best) {
        best = n2;
        b = c;
      }
    }
    b = scaled(b, 1.0 / std::sqrt(dot(b, b)));
    os << "f";
    for (std::size_t i : face_cycle(face, b)) os << " " << i + 1;
    os << "\n";
    return os.str();
  }

  const double scale = coordinate_scale(vp.vertices);
  const double eps = tol.geom * scale;
  std::set<std::vector<std::size_t>> seen;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Point nrm = cross(sub(vp.vertices[j], vp.vertices[i]),
                          sub(vp.vertices[k], vp.vertices[i]));
        const double len = std::sqrt(dot(nrm, nrm));
        if (len <= eps) continue;
        nrm = scaled(nrm, 1.0 / len);
        double side_max = -kInf, side_min = kInf;
        for (std::size_t t = 0; t < n; ++t) {
          const double s = dot(nrm, sub(vp.vertices[t], vp.vertices[i]));
          side_max = std::max(side_max, s);
          side_min = std::min(side_min, s);
        }
        double dir;
        if (side_max <= eps)
          dir = 1.0;
        else if (side_min >= -eps)
          dir = -1.0;
        else
          continue;  // the triple's plane cuts the hull

        std::vector<std::size_t> face;
        for (std::size_t t = 0; t < n; ++t)
          if (std::abs(dot(nrm, sub(vp.vertices[t], vp.vertices[i]))) <= eps)
            face.push_back(t);
        std::vector<std::size_t> key = face;
        if (!seen.insert(key).second) continue;

        Point outward = scaled(nrm, dir);
        // The outward side must face away from the solid.
        if (dot(outward, sub(vp.vertices[i], centroid)) < 0.0)
          outward = scaled(outward, -1.0);
        const std::vector<std::size_t> cyc = face_cycle(face, outward);
        for (std::size_t t = 1; t + 1 < cyc.size(); ++t)
          os << "f " << cyc[0] + 1 << " " << cyc[t] + 1 << " " << cyc[t + 1] + 1
             << "\n";
      }
  return os.str();
}

}  // namespace cihull
