#pragma once

#include <string>

#include "cihull/instance.hpp"
#include "cihull/polytope.hpp"

namespace cihull {

// SVG drawing of a planar hull with the instance's points marked.
// Requires ambient dimension 2 and a two-dimensional hull.
std::string render_svg(const Instance& inst, const VPolytope& vp);

// Wavefront OBJ mesh of a hull in ambient dimension 3 (faces triangulated,
// outward-facing).  Two-dimensional hulls in ambient 3 emit a single
// polygon.  Lower-dimensional hulls throw DimensionUnsupported.
std::string render_obj(const VPolytope& vp, const Tolerances& tol = {});

}  // namespace cihull
