#include "cihull/interval.hpp"

#include <cmath>
#include <sstream>

#include "cihull/errors.hpp"

namespace cihull {

Interval::Interval(double lo, double hi) : lo(lo), hi(hi) {
  if (std::isnan(lo) || std::isnan(hi))
    throw InvalidInstance("interval endpoint is NaN");
  if (lo == kInf) throw InvalidInstance("interval lower endpoint is +inf");
  if (hi == -kInf) throw InvalidInstance("interval upper endpoint is -inf");
  if (lo > hi) {
    std::ostringstream os;
    os << "interval [" << lo << ", " << hi << "] has lo > hi";
    throw InvalidInstance(os.str());
  }
}

bool Interval::contains(double t, double slack) const {
  return t >= lo - slack && t <= hi + slack;
}

IntervalFamily::IntervalFamily(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty())
    throw InvalidInstance("interval family must be nonempty");
  widths_.reserve(intervals_.size());
  alpha_ = 0.0;
  beta_ = 0.0;
  all_finite_ = true;
  for (const Interval& iv : intervals_) {
    widths_.push_back(iv.width());
    alpha_ += iv.lo;
    beta_ += iv.hi;
    all_finite_ = all_finite_ && iv.bounded();
  }
}

}  // namespace cihull
