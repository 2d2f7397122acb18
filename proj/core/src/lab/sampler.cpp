#include "irrlab/lab/sampler.hpp"

#include <algorithm>
#include <bit>

#include "irrlab/errors.hpp"

namespace irrlab::lab {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::int64_t kCoefficientLimit = std::int64_t{1} << 40;

}  // namespace

void validate(const SamplerConfig& cfg) {
  if (cfg.n == 0) throw InvalidInput("n must be >= 1");
  if (cfg.N < 2) throw InvalidInput("N must be >= 2");
  if (cfg.a < -kCoefficientLimit || cfg.a > kCoefficientLimit ||
      cfg.N > static_cast<std::uint64_t>(kCoefficientLimit) ||
      cfg.a + static_cast<std::int64_t>(cfg.N) - 1 > kCoefficientLimit) {
    throw InvalidInput("segment must stay within [-2^40, 2^40]");
  }
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, std::uint64_t attempt) noexcept {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (stream * 0xd6e8feb86659fd93ULL));
  h = mix64(h ^ (index * 0xa0761d6478bd642fULL));
  return mix64(h ^ (attempt + 0xe7037ed1a0b428dbULL));
}

void sample_coefficients(const SamplerConfig& cfg, std::uint64_t trial, std::vector<std::int64_t>& out) {
  out.resize(cfg.n + 1);
  out[cfg.n] = 1;
  if (std::has_single_bit(cfg.N)) {
    const unsigned bits = static_cast<unsigned>(std::countr_zero(cfg.N));
    const std::size_t per_word = 64 / bits;
    const std::uint64_t mask = cfg.N - 1;
    for (std::size_t j = 0; j < cfg.n; j += per_word) {
      std::uint64_t word = counter_hash(cfg.seed, trial, j / per_word, 0);
      for (std::size_t k = j; k < std::min(cfg.n, j + per_word); ++k) {
        out[k] = cfg.a + static_cast<std::int64_t>(word & mask);
        word >>= bits;
      }
    }
    return;
  }
  // Lemire's multiply-shift with rejection.
  const std::uint64_t threshold = (0 - cfg.N) % cfg.N;
  for (std::size_t j = 0; j < cfg.n; ++j) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      const unsigned __int128 m = static_cast<unsigned __int128>(counter_hash(cfg.seed, trial, j, attempt)) * cfg.N;
      if (static_cast<std::uint64_t>(m) >= threshold) {
        out[j] = cfg.a + static_cast<std::int64_t>(m >> 64);
        break;
      }
    }
  }
}

IntPoly sample_poly(const SamplerConfig& cfg, std::uint64_t trial) {
  std::vector<std::int64_t> c;
  sample_coefficients(cfg, trial, c);
  std::vector<BigInt> big(c.begin(), c.end());
  return IntPoly(std::move(big));
}

}  // namespace irrlab::lab
