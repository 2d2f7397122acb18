#include "irrlab/lab/oracles.hpp"

#include <string>

#include "irrlab/errors.hpp"

namespace irrlab::lab {

Rational ValueDistribution::probability(const BigInt& value) const {
  const BigInt k = value - min_value;
  if (k < 0 || k >= counts.size()) return Rational(0);
  return Rational(counts[k.convert_to<std::size_t>()], total);
}

ValueDistribution evaluation_distribution(int x, const SamplerConfig& cfg, std::uint64_t budget) {
  if (x != 1 && x != -1) throw InvalidInput("x must be +1 or -1");
  validate(cfg);
  const std::uint64_t width = cfg.N - 1;
  if (cfg.n > (budget - 1) / width) {
    throw BudgetExceeded("DP with " + std::to_string(cfg.n) + " terms of width " + std::to_string(width) +
                         " exceeds budget " + std::to_string(budget));
  }
  // a_j = a + b_j. For x^j = -1 the term -b_j is (N - 1 - b_j) - (N - 1) and
  // N - 1 - b_j is uniform like b_j, so T = sum of n uniforms on [0, N - 1].
  std::vector<BigInt> counts{1};
  for (std::size_t j = 0; j < cfg.n; ++j) {
    std::vector<BigInt> next(counts.size() + width);
    BigInt window = 0;
    for (std::size_t v = 0; v < next.size(); ++v) {
      if (v < counts.size()) window += counts[v];
      if (v >= width + 1 && v - width - 1 < counts.size()) window -= counts[v - width - 1];
      next[v] = window;
    }
    counts = std::move(next);
  }
  BigInt constant = (cfg.n % 2 == 0 || x == 1) ? 1 : -1;
  std::uint64_t minus_terms = 0;
  for (std::size_t j = 0; j < cfg.n; ++j) {
    const bool negative = x == -1 && j % 2 == 1;
    constant += negative ? -cfg.a : cfg.a;
    minus_terms += negative;
  }
  ValueDistribution out;
  out.min_value = constant - BigInt(minus_terms) * width;
  out.counts = std::move(counts);
  out.total = boost::multiprecision::pow(BigInt(cfg.N), static_cast<unsigned>(cfg.n));
  return out;
}

Rational exact_root_prob(int x, const SamplerConfig& cfg, std::uint64_t budget) {
  return evaluation_distribution(x, cfg, budget).probability(0);
}

}  // namespace irrlab::lab
