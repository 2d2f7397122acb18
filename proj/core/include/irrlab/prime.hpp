#pragma once

#include <compare>
#include <cstdint>

namespace irrlab {

/// A prime modulus. Arithmetic over F_p keeps residues in 32 bits, so the
/// value must be below 2^31.
class Prime {
 public:
  /// Throws InvalidInput when `value` is not a prime in [2, 2^31).
  explicit Prime(std::uint64_t value);

  std::uint32_t value() const noexcept { return value_; }

  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint32_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace irrlab
