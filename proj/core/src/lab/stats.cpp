#include "irrlab/lab/stats.hpp"

#include <algorithm>
#include <cmath>

#include "irrlab/errors.hpp"

namespace irrlab::lab {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw InvalidInput("Wilson interval needs at least one trial");
  if (successes > trials) throw InvalidInput("more successes than trials");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace irrlab::lab
