#include "irrlab/irreducibles.hpp"

#include <cmath>
#include <string>

#include "irrlab/errors.hpp"
#include "irrlab/factor.hpp"

namespace irrlab {

int mobius(std::uint64_t n) noexcept {
  if (n == 0) return 0;
  int sign = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt count_irreducibles(Prime p, std::size_t k, bool exclude_x) {
  if (k == 0) throw InvalidInput("degree must be >= 1");
  BigInt total = 0;
  for (std::size_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    const BigInt term = boost::multiprecision::pow(BigInt(p.value()), static_cast<unsigned>(k / d));
    total += mu > 0 ? term : BigInt(-term);
  }
  total /= k;
  if (exclude_x && k == 1) total -= 1;
  return total;
}

double irreducible_density(Prime p, std::size_t k, bool exclude_x) {
  if (k == 0) throw InvalidInput("degree must be >= 1");
  // (1/k) sum_{d|k} mu(d) p^(k/d - k); every term after d = 1 is tiny.
  const double q = p.value();
  double sum = 0.0;
  for (std::size_t d = k; d >= 1; --d) {
    if (k % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    const double e = static_cast<double>(k / d) - static_cast<double>(k);
    sum += mu * std::pow(q, e);
  }
  double density = sum / static_cast<double>(k);
  if (exclude_x && k == 1) density -= 1.0 / q;
  return density;
}

std::vector<MonicPoly> enumerate_irreducibles(Prime p, std::size_t max_deg, bool exclude_x, std::uint64_t budget) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < max_deg; ++i) {
    if (size > budget / p.value()) {
      throw BudgetExceeded("enumerating irreducibles with p=" + std::to_string(p.value()) +
                           ", max_deg=" + std::to_string(max_deg) + " exceeds budget " + std::to_string(budget));
    }
    size *= p.value();
  }
  std::vector<MonicPoly> out;
  const MonicPoly x = MonicPoly::x(p);
  for (std::size_t k = 1; k <= max_deg; ++k) {
    for (auto& f : all_monic_of_degree(p, k, budget)) {
      if (exclude_x && f == x) continue;
      if (is_irreducible(f)) out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace irrlab
