#pragma once

#include <cstdint>
#include <vector>

#include "irrlab/int_poly.hpp"

namespace irrlab {

std::uint64_t euler_phi(std::uint64_t n) noexcept;

/// Phi_d over Z, by exact division of X^d - 1 by Phi_e for every proper
/// divisor e of d. Throws InvalidInput for d = 0.
IntPoly cyclotomic(std::uint64_t d);

/// Every d with phi(d) <= max_phi, ascending.
std::vector<std::uint64_t> cyclotomic_indices(std::uint64_t max_phi);

}  // namespace irrlab
