#include <doctest.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cihull/errors.hpp"
#include "cihull/hull.hpp"
#include "cihull/instance.hpp"
#include "cihull/interval.hpp"
#include "cihull/oracle.hpp"
#include "cihull/polytope.hpp"
#include "cihull/section.hpp"

using namespace cihull;

namespace {

Instance tri_instance(std::vector<Interval> ivs) {
  return Instance({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}},
                  IntervalFamily(std::move(ivs)));
}

}  // namespace

TEST_CASE("unit square from a right triangle") {
  const VPolytope vp =
      interval_hull(tri_instance({{-1.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}));
  REQUIRE(vp.count() == 4);
  CHECK(vp.dim == 2);
  const PointSet expect{{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}};
  CHECK(vp.vertices == expect);  // lexicographic order
  // Counterclockwise walk from the lexicographically smallest vertex.
  CHECK(vp.order == std::vector<std::size_t>{0, 2, 3, 1});
}

TEST_CASE("empty sums give an empty polytope") {
  const VPolytope vp =
      interval_hull(tri_instance({{0.6, 0.7}, {0.6, 0.7}, {0.6, 0.7}}));
  CHECK(vp.empty());
  CHECK(vp.dim == -1);
}

TEST_CASE("recession directions throw") {
  CHECK_THROWS_AS(
      interval_hull(tri_instance({{-kInf, 0.0}, {0.0, kInf}, {0.0, 1.0}})),
      UnboundedHull);
}

TEST_CASE("one sided unbounded intervals are clipped in the pipeline") {
  const VPolytope vp =
      interval_hull(tri_instance({{0.0, kInf}, {0.0, kInf}, {0.0, kInf}}));
  CHECK(vp.count() == 3);  // the whole triangle
}

TEST_CASE("singleton coefficients collapse to one point") {
  const VPolytope vp =
      interval_hull(tri_instance({{0.5, 0.5}, {0.25, 0.25}, {0.25, 0.25}}));
  REQUIRE(vp.count() == 1);
  CHECK(vp.dim == 0);
  CHECK(vp.vertices[0][0] == doctest::Approx(0.25));
  CHECK(vp.vertices[0][1] == doctest::Approx(0.25));
}

TEST_CASE("segment hulls report dimension one") {
  const Instance inst({{0.0, 0.0}, {2.0, 0.0}},
                      IntervalFamily({{0.0, 1.0}, {0.0, 1.0}}));
  const VPolytope vp = interval_hull(inst);
  CHECK(vp.dim == 1);
  CHECK(vp.count() == 2);
}

TEST_CASE("coefficient section singles out fixed intervals") {
  const CoefficientSection sec =
      coefficient_section(IntervalFamily({{0.5, 0.5}, {0.0, 0.5}}));
  CHECK(sec.weights == std::vector<double>{0.5});
  CHECK(sec.rhs == doctest::Approx(0.5));
  REQUIRE(sec.fixed.size() == 1);
  CHECK(sec.fixed[0].first == 0);
  CHECK(sec.fixed[0].second == 0.5);
  CHECK(sec.index_map == std::vector<std::size_t>{1});
  CHECK(sec.lows == std::vector<double>{0.5, 0.0});
}

TEST_CASE("coefficient section keeps the family as given") {
  const CoefficientSection sec =
      coefficient_section(IntervalFamily({{-1.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}));
  CHECK(sec.weights == std::vector<double>{2.0, 1.0, 1.0});
  CHECK(sec.rhs == doctest::Approx(2.0));
  CHECK(sec.fixed.empty());
}

TEST_CASE("coefficient section rejects bad families") {
  CHECK_THROWS_AS(coefficient_section(IntervalFamily({{0.0, kInf}})),
                  UnboundedHull);
  CHECK_THROWS_AS(
      coefficient_section(IntervalFamily({{0.6, 0.7}, {0.6, 0.7}, {0.6, 0.7}})),
      EmptyHull);
}

TEST_CASE("section vertices of the regular simplex slice") {
  CoefficientSection sec;
  sec.weights = {1.0, 1.0, 1.0};
  sec.rhs = 1.0;
  sec.index_map = {0, 1, 2};
  sec.lows = {0.0, 0.0, 0.0};
  const auto pts = section_vertices(sec);
  const std::vector<Point> expect{{0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}};
  CHECK(pts == expect);
}

TEST_CASE("section vertices with uneven weights") {
  CoefficientSection sec;
  sec.weights = {2.0, 1.0, 1.0};
  sec.rhs = 2.0;
  sec.index_map = {0, 1, 2};
  sec.lows = {-1.0, 0.0, 0.0};
  const auto pts = section_vertices(sec);
  const std::vector<Point> expect{
      {0.0, 1.0, 1.0}, {0.5, 0.0, 1.0}, {0.5, 1.0, 0.0}, {1.0, 0.0, 0.0}};
  CHECK(pts == expect);
}

TEST_CASE("empty section is one point only when the plane passes zero") {
  CoefficientSection flat;
  flat.rhs = 0.0;
  CHECK(section_vertices(flat) == std::vector<Point>{Point{}});
  flat.rhs = 0.5;
  CHECK(section_vertices(flat).empty());
}

TEST_CASE("section enumeration cap") {
  CoefficientSection sec;
  sec.weights.assign(23, 1.0);
  sec.rhs = 2.0;
  sec.index_map.resize(23);
  sec.lows.assign(23, 0.0);
  CHECK_THROWS_AS(section_vertices(sec), CapExceeded);
  try {
    section_vertices(sec);
  } catch (const CapExceeded& e) {
    CHECK(e.required == 23);
  }
}

TEST_CASE("ambient mapping applies lows and weighted offsets") {
  CoefficientSection sec;
  sec.weights = {2.0, 1.0, 1.0};
  sec.rhs = 2.0;
  sec.index_map = {0, 1, 2};
  sec.lows = {-1.0, 0.0, 0.0};
  const PointSet points{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  const auto sv = section_vertices(sec);
  const PointSet ambient = map_to_ambient(sec, sv, points);
  const VPolytope vp = extract_vertices(ambient);
  const PointSet expect{{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}};
  CHECK(vp.vertices == expect);
}

TEST_CASE("half open hypercube slice has six vertices") {
  const Instance inst({{1.0, 0.0, 0.0, 0.0},
                       {0.0, 1.0, 0.0, 0.0},
                       {0.0, 0.0, 1.0, 0.0},
                       {0.0, 0.0, 0.0, 1.0}},
                      IntervalFamily({{0.0, 0.5}, {0.0, 0.5}, {0.0, 0.5}, {0.0, 0.5}}));
  const VPolytope vp = interval_hull(inst);
  CHECK(vp.count() == 6);  // an octahedron: all midpoints of coordinate pairs
  CHECK(vp.dim == 3);
}

TEST_CASE("near singular widths keep their box vertices") {
  const Instance inst = tri_instance({{0.0, 1e-3}, {1e-11, 1.0}, {0.0, 1.0}});
  const VPolytope vp = interval_hull(inst);
  CHECK(compare_hulls(vp, inst, 11).pass);
}

TEST_CASE("vertex count bounds") {
  CHECK(vertex_bound(1) == 1);
  CHECK(vertex_bound(2) == 2);
  CHECK(vertex_bound(3) == 6);
  CHECK(vertex_bound(4) == 12);
  CHECK(vertex_bound(5) == 30);
  CHECK(vertex_bound(6) == 60);
  CHECK(vertex_bound(22) == 7759752ULL);  // 12 * C(22, 12)
  CHECK_THROWS_AS(vertex_bound(0), std::invalid_argument);

  CHECK(wide_vertex_bound(3) == 6);
  CHECK(wide_vertex_bound(6) == 30);
  CHECK_THROWS_AS(wide_vertex_bound(1), std::invalid_argument);
}

TEST_CASE("vertex extraction goes through a linear program per point") {
  const PointSet pts{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0},
                     {0.5, 0.5}, {0.25, 0.25}, {1.0, 1.0}};
  const VPolytope vp = extract_vertices(pts);
  CHECK(vp.count() == 4);
  CHECK(vp.dim == 2);
}

TEST_CASE("polygon area via the boundary walk") {
  const VPolytope square = extract_vertices(
      {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
  CHECK(polygon_area(square) == doctest::Approx(1.0));
  const VPolytope tri = extract_vertices({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
  CHECK(polygon_area(tri) == doctest::Approx(0.5));
}

TEST_CASE("vertex set comparison tolerates reordering") {
  const VPolytope a = extract_vertices({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
  VPolytope b = a;
  b.vertices[0][0] += 5e-10;
  CHECK(vertex_sets_match(a, b, 1e-9));
  b.vertices[0][0] += 1e-3;
  CHECK_FALSE(vertex_sets_match(a, b, 1e-9));
}
