#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cihull/geometry.hpp"
#include "cihull/interval.hpp"

namespace cihull {

// A problem instance: m distinct points in R^d, one interval per point,
// and optional labels.  Validation enforces m >= 1, d >= 1, uniform
// dimensions, finite coordinates, pairwise distinct points (up to the
// dedup tolerance at the data's coordinate scale), and label count zero
// or m.
struct Instance {
  Instance(PointSet points, IntervalFamily family,
           std::vector<std::string> labels = {}, const Tolerances& tol = {});

  PointSet points;
  IntervalFamily family;
  std::vector<std::string> labels;

  std::size_t size() const { return points.size(); }
  std::size_t dim() const { return points.front().size(); }
};

// Reads an instance from JSON text:
//
//   {
//     "points":    [[x, y, ...], ...],
//     "intervals": [[lo, hi], ...],
//     "labels":    ["p1", ...]          (optional)
//   }
//
// Endpoints are numbers or the strings "inf" / "-inf".  Unknown keys are
// ignored.  Throws ParseError for malformed text and InvalidInstance for
// structurally bad data.
Instance parse_instance(const std::string& text, const Tolerances& tol = {});

// Serializes an instance back to the same JSON shape.  Numbers round-trip
// exactly.
std::string serialize_instance(const Instance& inst);

}  // namespace cihull
