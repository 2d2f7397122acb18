#include "irrlab/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "irrlab/errors.hpp"

namespace irrlab {

std::uint64_t euler_phi(std::uint64_t n) noexcept {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw InvalidInput("cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<std::uint64_t, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly acc = IntPoly::monomial(d) - IntPoly::monomial(0);
  for (std::uint64_t e = 1; e < d; ++e) {
    if (d % e) continue;
    auto div = int_poly_divrem(acc, cyclotomic(e));
    if (!div.remainder.is_zero()) throw std::logic_error("inexact cyclotomic division");
    acc = std::move(div.quotient);
  }
  std::lock_guard lock(mu);
  cache.emplace(d, acc);
  return acc;
}

std::vector<std::uint64_t> cyclotomic_indices(std::uint64_t max_phi) {
  // phi(d) >= sqrt(d / 2), so d <= 2 max_phi^2 covers every candidate.
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::max<std::uint64_t>(2, 2 * max_phi * max_phi);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    if (euler_phi(d) <= max_phi) out.push_back(d);
  }
  return out;
}

}  // namespace irrlab
