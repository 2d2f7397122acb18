#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "irrlab/int_poly.hpp"

namespace irrlab::lab {

/// A = X^n + sum_{j<n} a_j X^j with a_j i.i.d. uniform on [a, a + N - 1].
struct SamplerConfig {
  std::size_t n = 1;
  std::int64_t a = 0;
  std::uint64_t N = 2;
  std::uint64_t seed = 0;
};

/// Throws InvalidInput when n = 0, N < 2, or the segment leaves
/// [-2^40, 2^40].
void validate(const SamplerConfig& cfg);

/// Counter-based 64-bit hash of (seed, stream, index, attempt).
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, std::uint64_t attempt) noexcept;

/// Fills `out` with a_0, ..., a_{n-1}, 1 for the given trial. The values
/// depend only on (cfg, trial).
void sample_coefficients(const SamplerConfig& cfg, std::uint64_t trial, std::vector<std::int64_t>& out);

IntPoly sample_poly(const SamplerConfig& cfg, std::uint64_t trial);

}  // namespace irrlab::lab
