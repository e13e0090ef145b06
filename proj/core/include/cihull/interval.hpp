#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace cihull {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A closed interval [lo, hi].  lo may be -inf and hi may be +inf; both
// endpoints may coincide (a singleton).  NaN endpoints and lo > hi are
// rejected at construction.
struct Interval {
  Interval(double lo, double hi);

  double lo;
  double hi;

  double width() const { return hi - lo; }
  bool is_singleton() const { return lo == hi; }
  bool bounded_below() const { return lo != -kInf; }
  bool bounded_above() const { return hi != kInf; }
  bool bounded() const { return bounded_below() && bounded_above(); }

  // Closed-interval membership with symmetric slack.
  bool contains(double t, double slack = 0.0) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// An ordered, nonempty list of closed intervals together with its endpoint
// sums.  alpha() is the sum of lower endpoints, beta() the sum of upper
// endpoints; either may be infinite.
class IntervalFamily {
 public:
  explicit IntervalFamily(std::vector<Interval> intervals);

  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](std::size_t j) const { return intervals_[j]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::vector<double>& widths() const { return widths_; }
  bool all_finite() const { return all_finite_; }

  friend bool operator==(const IntervalFamily& a, const IntervalFamily& b) {
    return a.intervals_ == b.intervals_;
  }

 private:
  std::vector<Interval> intervals_;
  std::vector<double> widths_;
  double alpha_;
  double beta_;
  bool all_finite_;
};

}  // namespace cihull
