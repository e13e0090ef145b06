#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cihull/instance.hpp"
#include "cihull/interval.hpp"

namespace cihull {

struct FeasibilityReport {
  bool nonempty = false;
  bool bounded = false;
  // Coefficients picking one point of the hull; present iff nonempty.
  std::optional<std::vector<double>> witness;
  // When unbounded: indices (j, k) such that moving mass from interval j
  // (unbounded below) to interval k (unbounded above) is a recession
  // direction x_k - x_j.
  std::optional<std::pair<std::size_t, std::size_t>> unbounded_direction;
};

// The hull is nonempty exactly when alpha <= 1 <= beta.  Exact endpoint
// comparisons; infinite sums count as strict bounds.
bool is_nonempty(const IntervalFamily& fam);

// One feasible coefficient vector: the convex combination of endpoint
// choices ((beta-1) a + (1-alpha) b) / (beta-alpha), with infinite
// endpoints clipped to large finite stand-ins first.  Requires
// nonemptiness.
std::vector<double> witness_coefficients(const IntervalFamily& fam);

// Bounded exactly when at most one interval fails to be bounded on each
// relevant side: all bounded below, or all bounded above, or only one
// unbounded interval in total.
bool is_bounded(const Instance& inst);

// Replaces infinite endpoints by the finite bounds the constraint sum
// forces.  Families that are already bounded on one side get the opposite
// side clipped; a single doubly-unbounded interval is pinned by the other
// intervals' sums.  All-finite families come back unchanged.  Requires a
// bounded, nonempty configuration.
IntervalFamily bound_family(const IntervalFamily& fam);

FeasibilityReport analyze_feasibility(const Instance& inst);

}  // namespace cihull
