#include "cihull/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "cihull/errors.hpp"

namespace cihull {
namespace {

// Number of intervals unbounded on either side, plus whether each side is
// fully finite.
struct Unboundedness {
  std::size_t below = 0;  // intervals with lo = -inf
  std::size_t above = 0;  // intervals with hi = +inf
  std::size_t touched = 0;  // intervals unbounded on at least one side
};

Unboundedness scan(const IntervalFamily& fam) {
  Unboundedness u;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const bool nb = !fam[j].bounded_below();
    const bool na = !fam[j].bounded_above();
    u.below += nb;
    u.above += na;
    u.touched += (nb || na);
  }
  return u;
}

bool family_bounded(const IntervalFamily& fam) {
  const Unboundedness u = scan(fam);
  return u.below == 0 || u.above == 0 || u.touched <= 1;
}

}  // namespace

bool is_nonempty(const IntervalFamily& fam) {
  return fam.alpha() <= 1.0 && 1.0 <= fam.beta();
}

std::vector<double> witness_coefficients(const IntervalFamily& fam) {
  if (!is_nonempty(fam))
    throw EmptyHull("no coefficients exist: the interval sums exclude 1");

  // Replace infinite endpoints by finite stand-ins large enough that the
  // endpoint sums still straddle 1.
  double mag = 0.0;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    if (fam[j].bounded_below()) mag += std::abs(fam[j].lo);
    if (fam[j].bounded_above()) mag += std::abs(fam[j].hi);
  }
  const double big = mag + 2.0;
  std::vector<double> lo(fam.size()), hi(fam.size());
  double alpha = 0.0, beta = 0.0;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    lo[j] = fam[j].bounded_below() ? fam[j].lo : -big;
    hi[j] = fam[j].bounded_above() ? fam[j].hi : big;
    alpha += lo[j];
    beta += hi[j];
  }

  std::vector<double> xi(fam.size());
  if (alpha == beta) {
    // All widths zero; the sums force every coefficient.
    for (std::size_t j = 0; j < fam.size(); ++j) xi[j] = lo[j];
    return xi;
  }
  // The convex mix of the two extreme endpoint choices that sums to 1.
  const double span = beta - alpha;
  for (std::size_t j = 0; j < fam.size(); ++j)
    xi[j] = ((beta - 1.0) * lo[j] + (1.0 - alpha) * hi[j]) / span;
  return xi;
}

bool is_bounded(const Instance& inst) { return family_bounded(inst.family); }

IntervalFamily bound_family(const IntervalFamily& fam) {
  if (!is_nonempty(fam))
    throw EmptyHull("cannot bound a family whose interval sums exclude 1");
  if (!family_bounded(fam))
    throw UnboundedHull("the combination set has a recession direction");
  if (fam.all_finite()) return fam;

  const Unboundedness u = scan(fam);
  std::vector<Interval> out;
  out.reserve(fam.size());
  if (u.below == 0) {
    // Lower endpoints sum to alpha; each coefficient is then capped above.
    const double room = 1.0 - fam.alpha();
    for (std::size_t j = 0; j < fam.size(); ++j)
      out.emplace_back(fam[j].lo, std::min(fam[j].hi, fam[j].lo + room));
  } else if (u.above == 0) {
    const double room = fam.beta() - 1.0;
    for (std::size_t j = 0; j < fam.size(); ++j)
      out.emplace_back(std::max(fam[j].lo, fam[j].hi - room), fam[j].hi);
  } else {
    // Exactly one interval, unbounded on both sides; the others pin it.
    std::size_t k = fam.size();
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (!fam[j].bounded()) k = j;
    double rest_lo = 0.0, rest_hi = 0.0;
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (j == k) continue;
      rest_lo += fam[j].lo;
      rest_hi += fam[j].hi;
    }
    for (std::size_t j = 0; j < fam.size(); ++j)
      out.push_back(j == k ? Interval(1.0 - rest_hi, 1.0 - rest_lo) : fam[j]);
  }
  return IntervalFamily(std::move(out));
}

FeasibilityReport analyze_feasibility(const Instance& inst) {
  FeasibilityReport rep;
  rep.nonempty = is_nonempty(inst.family);
  rep.bounded = family_bounded(inst.family);
  if (rep.nonempty) rep.witness = witness_coefficients(inst.family);
  if (!rep.bounded) {
    // Lexicographically first pair (j, k), j unbounded below, k above.
    const IntervalFamily& fam = inst.family;
    for (std::size_t j = 0; j < fam.size() && !rep.unbounded_direction; ++j) {
      if (fam[j].bounded_below()) continue;
      for (std::size_t k = 0; k < fam.size(); ++k)
        if (k != j && !fam[k].bounded_above()) {
          rep.unbounded_direction = {j, k};
          break;
        }
    }
  }
  return rep;
}

}  // namespace cihull
