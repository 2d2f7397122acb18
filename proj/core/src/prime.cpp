#include "irrlab/prime.hpp"

#include <string>

#include "irrlab/errors.hpp"

namespace irrlab {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(0) {
  if (value >= (std::uint64_t{1} << 31) || !is_prime(value)) {
    throw InvalidInput("not a prime below 2^31: " + std::to_string(value));
  }
  value_ = static_cast<std::uint32_t>(value);
}

}  // namespace irrlab
