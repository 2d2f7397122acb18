#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "irrlab/monic_poly.hpp"

namespace irrlab {

struct FactorPower {
  MonicPoly factor;
  unsigned multiplicity;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Irreducible factors with multiplicities, sorted canonically.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<FactorPower> factors);

  const std::vector<FactorPower>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  /// Product of all factors with multiplicity over `p`.
  MonicPoly reconstruct(Prime p) const;
  unsigned multiplicity_of(const MonicPoly& irreducible) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<FactorPower> factors_;
};

/// Rabin's criterion. Throws InvalidInput on degree 0.
bool is_irreducible(const MonicPoly& f);

/// Squarefree decomposition, distinct-degree factorization and
/// Cantor-Zassenhaus splitting. Inputs with p^deg at most
/// `kTrialDivisionLimit` are factored by exhaustive trial division instead.
/// The result does not depend on `seed`.
Factorization factor(const MonicPoly& f, std::uint64_t seed = 0);

inline constexpr std::uint64_t kTrialDivisionLimit = 1u << 12;

/// Degrees of the irreducible factors with multiplicity, ascending. Skips the
/// equal-degree splitting, so it is much cheaper than factor().
std::vector<std::size_t> factor_degrees(const MonicPoly& f);

/// Irreducible factors of degree <= max_degree, plus the cofactor that has
/// none. The factors are sorted canonically.
struct PartialFactorization {
  Factorization small;
  MonicPoly cofactor;
};
PartialFactorization factor_up_to_degree(const MonicPoly& f, std::size_t max_degree, std::uint64_t seed = 0);

}  // namespace irrlab
