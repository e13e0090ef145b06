#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cihull/geometry.hpp"
#include "cihull/instance.hpp"
#include "cihull/polytope.hpp"

namespace cihull {

enum class Regularity {
  None,
  EqualEdges,      // all boundary edges the same length
  RegularPolygon,  // equal edges and equal vertex angles
};

// A built-in worked example with its known answer.
struct GalleryEntry {
  std::string id;
  Instance instance;
  std::size_t expected_vertices = 0;
  Regularity regularity = Regularity::None;
  std::string notes;
};

// Sixteen configurations with hand-checked vertex counts: planar families
// over triangles and quadrilaterals, and three-dimensional families over
// tetrahedra (a truncated tetrahedron, a cube, a rhombic dodecahedron
// among them).
const std::vector<GalleryEntry>& builtin_gallery();

// Predicates used to check the advertised regularity (two-dimensional
// hulls only; relative tolerance on edge lengths and angles).
bool equal_edge_lengths(const VPolytope& vp, double rel = 1e-6);
bool is_regular_polygon(const VPolytope& vp, double rel = 1e-6);

struct GalleryResult {
  std::string id;
  bool pass = false;
  std::size_t expected_vertices = 0;
  std::size_t actual_vertices = 0;
  bool regularity_ok = true;
  std::string detail;
};

GalleryResult run_gallery_entry(const GalleryEntry& entry,
                                const Tolerances& tol = {});

}  // namespace cihull
