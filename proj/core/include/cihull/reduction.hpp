#pragma once

#include <cstddef>

#include "cihull/geometry.hpp"
#include "cihull/instance.hpp"
#include "cihull/interval.hpp"

namespace cihull {

enum class MinimalityStatus {
  NotMinimal,
  Minimal,
  IrreducibleButUndecided,
};

// Clips every interval to the range its coefficient can actually attain:
//
//   lo' = max(lo_j, hi_j - (beta - 1))
//   hi' = min(hi_j, lo_j + (1 - alpha))
//
// A clip is only applied when it moves an endpoint by more than tol.feas,
// which makes the operation idempotent bit for bit.  Requires a nonempty,
// all-finite family.
IntervalFamily reduce_family(const IntervalFamily& fam,
                             const Tolerances& tol = {});

// True when no interval can be clipped: every width is at most
// min(1 - alpha, beta - 1), up to tol.feas.
bool is_irreducible(const IntervalFamily& fam, const Tolerances& tol = {});

// True when every pair of widths sums to more than 1 - alpha.  Requires at
// least two intervals, all finite.
bool is_wide(const IntervalFamily& fam);

// NotMinimal if the family is reducible; Minimal if it is irreducible and
// the points are affinely independent; IrreducibleButUndecided otherwise.
MinimalityStatus minimality_status(const Instance& inst,
                                   const Tolerances& tol = {});

// The k-th interval of the fully clipped family: the exact range of
// values coefficient k takes over the feasible set.  Accepts unbounded
// input (bounding happens first).
Interval coefficient_range(const IntervalFamily& fam, std::size_t k,
                           const Tolerances& tol = {});

}  // namespace cihull
