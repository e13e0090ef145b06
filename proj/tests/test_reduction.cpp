#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "cihull/errors.hpp"
#include "cihull/instance.hpp"
#include "cihull/interval.hpp"
#include "cihull/reduction.hpp"

using namespace cihull;

namespace {

IntervalFamily fam(std::vector<Interval> ivs) {
  return IntervalFamily(std::move(ivs));
}

}  // namespace

TEST_CASE("clipping shrinks to attained ranges") {
  const IntervalFamily hat = reduce_family(fam({{0.0, 3.0}, {0.0, 2.0}, {0.0, 5.0}}));
  CHECK(hat == fam({{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}));
}

TEST_CASE("clipping is idempotent bit for bit") {
  const IntervalFamily once = reduce_family(fam({{0.0, 3.0}, {0.0, 2.0}, {0.0, 5.0}}));
  const IntervalFamily twice = reduce_family(once);
  CHECK(twice == once);

  // Rounding leaves the upper clip a few ulps inside; the tolerance gate
  // keeps the family fixed instead of drifting.
  const IntervalFamily narrow = fam({{0.8, 1.0}, {0.0, 0.2}});
  CHECK(reduce_family(narrow) == narrow);
}

TEST_CASE("already tight families come back unchanged") {
  const IntervalFamily f = fam({{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}});
  CHECK(reduce_family(f) == f);
}

TEST_CASE("clipped sums still straddle one after rounding") {
  // The singleton pins the other coefficient at 1 - c, and computing that
  // value rounds the re-summed endpoints an ulp below 1.  The result must
  // stay usable by exact feasibility checks downstream.
  const double c = -0.044419891920541077;
  const IntervalFamily f =
      fam({{0.43498947947805866, 1.4948220340913412}, {c, c}});
  const IntervalFamily hat = reduce_family(f);
  CHECK(hat.alpha() <= 1.0);
  CHECK(hat.beta() >= 1.0);
  CHECK(reduce_family(hat) == hat);
}

TEST_CASE("clipping respects both sides") {
  // alpha = -1, beta = 1.5: lo' = max(lo, hi - 0.5), hi' = min(hi, lo + 2).
  const IntervalFamily hat = reduce_family(fam({{-1.0, 1.0}, {0.0, 0.5}}));
  CHECK(hat == fam({{0.5, 1.0}, {0.0, 0.5}}));
}

TEST_CASE("clipping rejects bad input") {
  CHECK_THROWS_AS(reduce_family(fam({{0.6, 0.7}, {0.6, 0.7}})), EmptyHull);
  CHECK_THROWS_AS(reduce_family(fam({{0.0, kInf}, {0.0, 1.0}})),
                  UnboundedHull);
  CHECK_THROWS_AS(is_irreducible(fam({{0.0, kInf}, {0.0, 1.0}})),
                  UnboundedHull);
}

TEST_CASE("irreducibility matches the width test") {
  CHECK(is_irreducible(fam({{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}})));
  CHECK_FALSE(is_irreducible(fam({{0.0, 3.0}, {0.0, 2.0}, {0.0, 5.0}})));
  CHECK(is_irreducible(fam({{0.5, 0.5}, {0.5, 0.5}})));
}

TEST_CASE("wide families have every width pair past the slack") {
  CHECK(is_wide(fam({{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}})));
  CHECK_FALSE(is_wide(fam({{-1.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}})));
  CHECK_FALSE(is_wide(fam({{0.0, 0.1}, {0.0, 0.1}, {0.0, 1.0}})));
  CHECK_THROWS_AS(is_wide(fam({{0.0, 1.0}})), InvalidInstance);
  CHECK_THROWS_AS(is_wide(fam({{0.0, kInf}, {0.0, 1.0}})), InvalidInstance);
}

TEST_CASE("minimality classification") {
  const PointSet tri{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  const PointSet quad{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  CHECK(minimality_status(Instance(
            tri, fam({{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}))) ==
        MinimalityStatus::Minimal);
  CHECK(minimality_status(Instance(
            tri, fam({{0.0, 3.0}, {0.0, 2.0}, {0.0, 5.0}}))) ==
        MinimalityStatus::NotMinimal);
  CHECK(minimality_status(Instance(
            quad, fam({{0.0, 0.5}, {0.0, 0.5}, {0.0, 0.5}, {0.0, 0.5}}))) ==
        MinimalityStatus::IrreducibleButUndecided);
}

TEST_CASE("coefficient range is the clipped interval") {
  const IntervalFamily f = fam({{0.0, 3.0}, {0.0, 2.0}, {0.0, 5.0}});
  CHECK(coefficient_range(f, 0) == Interval(0.0, 1.0));
  CHECK(coefficient_range(f, 2) == Interval(0.0, 1.0));
  CHECK_THROWS_AS(coefficient_range(f, 3), std::out_of_range);

  // Unbounded input is clipped before reduction.
  const IntervalFamily u = fam({{0.0, kInf}, {0.0, kInf}});
  CHECK(coefficient_range(u, 0) == Interval(0.0, 1.0));
}
