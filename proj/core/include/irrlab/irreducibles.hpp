#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "irrlab/bigint.hpp"
#include "irrlab/monic_poly.hpp"

namespace irrlab {

/// Number of monic irreducibles of degree k over F_p, from the necklace
/// formula (1/k) sum_{d|k} mu(d) p^(k/d). With `exclude_x`, X is not counted.
BigInt count_irreducibles(Prime p, std::size_t k, bool exclude_x);

/// count_irreducibles(p, k, exclude_x) / p^k in double precision, without
/// forming p^k.
double irreducible_density(Prime p, std::size_t k, bool exclude_x);

int mobius(std::uint64_t n) noexcept;

/// Every monic irreducible of degree 1..max_deg, ordered by degree then
/// coefficients. Throws BudgetExceeded when p^max_deg > budget.
std::vector<MonicPoly> enumerate_irreducibles(Prime p, std::size_t max_deg, bool exclude_x,
                                              std::uint64_t budget = 1u << 24);

}  // namespace irrlab
