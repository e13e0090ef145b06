#include "cihull/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cihull/errors.hpp"
#include "cihull/feasibility.hpp"

namespace cihull {

namespace {

// Rounding in the clip arithmetic can leave the clipped sums an ulp shy
// of 1 even though the exact clipped family of a feasible input always
// straddles it (a singleton interval forcing another to the value 1 - c
// is the typical culprit).  Pull the clipped endpoints back until the
// sums straddle 1 again; adjustments stay within the original intervals
// and are skipped when the miss exceeds feasibility noise.
void snap_sums_to_one(std::vector<Interval>& cur, const IntervalFamily& fam,
                      double feas) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    double alpha = 0.0;
    for (const Interval& iv : cur) alpha += iv.lo;
    if (alpha <= 1.0 || alpha - 1.0 > feas) break;
    std::size_t pick = cur.size();
    double slack = 0.0;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      const double s = cur[j].lo - fam[j].lo;
      if (s > slack) {
        slack = s;
        pick = j;
      }
    }
    if (pick == cur.size()) break;
    const double lo = std::max(
        fam[pick].lo, std::nextafter(cur[pick].lo - (alpha - 1.0), -kInf));
    cur[pick] = Interval(lo, cur[pick].hi);
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    double beta = 0.0;
    for (const Interval& iv : cur) beta += iv.hi;
    if (beta >= 1.0 || 1.0 - beta > feas) break;
    std::size_t pick = cur.size();
    double slack = 0.0;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      const double s = fam[j].hi - cur[j].hi;
      if (s > slack) {
        slack = s;
        pick = j;
      }
    }
    if (pick == cur.size()) break;
    const double hi = std::min(
        fam[pick].hi, std::nextafter(cur[pick].hi + (1.0 - beta), kInf));
    cur[pick] = Interval(cur[pick].lo, hi);
  }
}

}  // namespace

IntervalFamily reduce_family(const IntervalFamily& fam, const Tolerances& tol) {
  if (!fam.all_finite())
    throw UnboundedHull("reduction needs finite intervals; bound the family first");
  if (!is_nonempty(fam))
    throw EmptyHull("cannot reduce a family whose interval sums exclude 1");

  std::vector<Interval> cur(fam.intervals());
  // One pass suffices in exact arithmetic.  Clips smaller than tol.feas
  // are skipped so the result is a bit-for-bit fixed point; rounding can
  // leave a second pass something to do, hence the loop.
  for (int round = 0; round < 64; ++round) {
    double alpha = 0.0, beta = 0.0;
    for (const Interval& iv : cur) {
      alpha += iv.lo;
      beta += iv.hi;
    }
    const double room_hi = 1.0 - alpha;  // >= 0
    const double room_lo = beta - 1.0;   // >= 0
    bool changed = false;
    for (Interval& iv : cur) {
      const double lo_clip = iv.hi - room_lo;
      const double hi_clip = iv.lo + room_hi;
      double lo = iv.lo, hi = iv.hi;
      if (lo_clip > lo + tol.feas) {
        lo = lo_clip;
        changed = true;
      }
      if (hi_clip < hi - tol.feas) {
        hi = hi_clip;
        changed = true;
      }
      if (lo > hi) lo = hi = 0.5 * (lo + hi);
      iv = Interval(lo, hi);
    }
    if (!changed) {
      snap_sums_to_one(cur, fam, tol.feas);
      return IntervalFamily(std::move(cur));
    }
  }
  throw NumericalBreakdown("interval clipping failed to reach a fixed point");
}

bool is_irreducible(const IntervalFamily& fam, const Tolerances& tol) {
  if (!fam.all_finite())
    throw UnboundedHull("irreducibility needs finite intervals; bound the family first");
  const double room = std::min(1.0 - fam.alpha(), fam.beta() - 1.0);
  for (double w : fam.widths())
    if (w > room + tol.feas) return false;
  return true;
}

bool is_wide(const IntervalFamily& fam) {
  if (fam.size() < 2)
    throw InvalidInstance("width comparison needs at least two intervals");
  if (!fam.all_finite())
    throw InvalidInstance("width comparison needs finite intervals");
  // Smallest two widths decide every pairwise sum.
  double w1 = kInf, w2 = kInf;
  for (double w : fam.widths()) {
    if (w < w1) {
      w2 = w1;
      w1 = w;
    } else if (w < w2) {
      w2 = w;
    }
  }
  return w1 + w2 > 1.0 - fam.alpha();
}

MinimalityStatus minimality_status(const Instance& inst,
                                   const Tolerances& tol) {
  if (!is_irreducible(inst.family, tol)) return MinimalityStatus::NotMinimal;
  if (is_affinely_independent(inst.points, tol)) return MinimalityStatus::Minimal;
  return MinimalityStatus::IrreducibleButUndecided;
}

Interval coefficient_range(const IntervalFamily& fam, std::size_t k,
                           const Tolerances& tol) {
  if (k >= fam.size())
    throw std::out_of_range("coefficient index out of range");
  return reduce_family(bound_family(fam), tol)[k];
}

}  // namespace cihull
