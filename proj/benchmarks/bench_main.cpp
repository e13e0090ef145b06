#include <benchmark/benchmark.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "cihull/feasibility.hpp"
#include "cihull/gallery.hpp"
#include "cihull/hull.hpp"
#include "cihull/instance.hpp"
#include "cihull/interval.hpp"
#include "cihull/oracle.hpp"
#include "cihull/reduction.hpp"
#include "cihull/section.hpp"

namespace {

using namespace cihull;

Instance extremal_instance(std::size_t m) {
  const std::size_t n = m / 2 + 1;
  const double hi = 2.0 / static_cast<double>(2 * (m - n) + 1);
  PointSet pts;
  for (std::size_t j = 0; j < m; ++j) {
    Point e(m, 0.0);
    e[j] = 1.0;
    pts.push_back(std::move(e));
  }
  return Instance(pts, IntervalFamily(std::vector<Interval>(m, {0.0, hi})));
}

void BM_IntervalHull_Gallery(benchmark::State& state) {
  const auto& entry = builtin_gallery()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    benchmark::DoNotOptimize(interval_hull(entry.instance));
  }
}
BENCHMARK(BM_IntervalHull_Gallery)->DenseRange(0, 15);

void BM_IntervalHull_Extremal(benchmark::State& state) {
  const Instance inst = extremal_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(interval_hull(inst));
  }
}
BENCHMARK(BM_IntervalHull_Extremal)->DenseRange(4, 6);

void BM_SectionVertices(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const Instance inst = extremal_instance(m);
  const CoefficientSection sec =
      coefficient_section(reduce_family(bound_family(inst.family)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(section_vertices(sec));
  }
}
BENCHMARK(BM_SectionVertices)->DenseRange(4, 6);

void BM_LpContains(benchmark::State& state) {
  const auto& entry = builtin_gallery()[12];  // tetrahedral configuration
  const Point probe{0.1, 0.4, 0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull_contains(entry.instance, probe));
  }
}
BENCHMARK(BM_LpContains);

}  // namespace

BENCHMARK_MAIN();
