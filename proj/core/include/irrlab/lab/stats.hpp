#pragma once

#include <cstdint>

namespace irrlab::lab {

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

/// Wilson score interval for a binomial proportion. Throws InvalidInput when
/// trials = 0 or successes > trials.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

}  // namespace irrlab::lab
