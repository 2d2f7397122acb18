#pragma once

#include <cstdint>
#include <vector>

#include "irrlab/bigint.hpp"
#include "irrlab/lab/sampler.hpp"

namespace irrlab::lab {

inline constexpr std::uint64_t kDefaultDpBudget = 10000000;

/// Exact law of A(x) for x = +1 or -1: counts[k] coefficient vectors give
/// A(x) = min_value + k, out of total = N^n.
struct ValueDistribution {
  BigInt min_value;
  std::vector<BigInt> counts;
  BigInt total;

  Rational probability(const BigInt& value) const;
};

/// Dynamic programming over the n independent terms a_j x^j. Throws
/// BudgetExceeded when n (N - 1) + 1 > budget and InvalidInput unless
/// x is +1 or -1.
ValueDistribution evaluation_distribution(int x, const SamplerConfig& cfg, std::uint64_t budget = kDefaultDpBudget);

/// P(A(x) = 0).
Rational exact_root_prob(int x, const SamplerConfig& cfg, std::uint64_t budget = kDefaultDpBudget);

}  // namespace irrlab::lab
