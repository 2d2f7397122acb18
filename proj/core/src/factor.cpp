#include "irrlab/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "irrlab/errors.hpp"
#include "ddf.hpp"
#include "monic_access.hpp"

namespace irrlab {

namespace {

using detail::Coeffs;

std::uint64_t field_size_power(std::uint32_t p, std::size_t deg, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < deg; ++i) {
    if (v > cap / p) return cap + 1;
    v *= p;
  }
  return v;
}

// Deterministic path for tiny fields: divide out monic candidates by
// increasing degree, so every candidate that divides is irreducible.
template <class M>
void trial_division(const M& m, Prime p, Coeffs f, unsigned multiplicity, std::map<Coeffs, unsigned>& acc) {
  const std::uint32_t q = p.value();
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    Coeffs cand(d + 1, 0);
    cand[d] = 1;
    for (;;) {
      for (;;) {
        Coeffs r = f;
        Coeffs quot;
        detail::rem_monic_inplace(m, r, cand, &quot);
        if (!r.empty()) break;
        acc[cand] += multiplicity;
        f = std::move(quot);
      }
      std::size_t pos = d;
      while (pos-- > 0) {
        if (++cand[pos] < q) break;
        cand[pos] = 0;
      }
      if (pos == static_cast<std::size_t>(-1)) break;
    }
  }
  if (f.size() > 1) acc[f] += multiplicity;
}

Factorization to_factorization(Prime p, const std::map<Coeffs, unsigned>& acc) {
  std::vector<FactorPower> out;
  out.reserve(acc.size());
  for (const auto& [c, mult] : acc) out.push_back({MonicPolyAccess::make(p, c), mult});
  return Factorization(std::move(out));
}

template <class M>
void factor_squarefree_part(const M& m, const Coeffs& part, unsigned mult, std::size_t max_degree, std::mt19937_64& rng,
                            std::map<Coeffs, unsigned>& acc, Coeffs& leftover) {
  for (auto& dp : detail::distinct_degree(m, part, max_degree)) {
    if (dp.degree == 0) {
      for (unsigned i = 0; i < mult; ++i) leftover = detail::mul(m, leftover, dp.product);
      continue;
    }
    std::vector<Coeffs> irreducibles;
    detail::equal_degree_split(m, dp.product, dp.degree, rng, irreducibles);
    for (auto& g : irreducibles) acc[g] += mult;
  }
}

}  // namespace

Factorization::Factorization(std::vector<FactorPower> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
}

MonicPoly Factorization::reconstruct(Prime p) const {
  MonicPoly out(p);
  for (const auto& fp : factors_) out *= pow(fp.factor, fp.multiplicity);
  return out;
}

unsigned Factorization::multiplicity_of(const MonicPoly& irreducible) const {
  for (const auto& fp : factors_) {
    if (fp.factor == irreducible) return fp.multiplicity;
  }
  return 0;
}

bool is_irreducible(const MonicPoly& f) {
  const std::size_t n = f.degree();
  if (n == 0) throw InvalidInput("is_irreducible needs degree >= 1");
  if (n == 1) return true;
  std::vector<std::size_t> checkpoints;  // n / q for each prime q | n
  for (std::size_t q = 2, rest = n; q <= rest; ++q) {
    if (rest % q == 0) {
      checkpoints.push_back(n / q);
      while (rest % q == 0) rest /= q;
    }
  }
  return detail::with_modulus(f.modulus().value(), [&](const auto& m) {
    const Coeffs& fc = MonicPolyAccess::raw(f);
    const auto rows = detail::frobenius_matrix(m, fc);
    Coeffs h{0, 1};
    const Coeffs x{0, 1};
    for (std::size_t k = 1; k <= n; ++k) {
      h = detail::apply_frobenius(m, rows, n, h);
      if (k == n) return h == x;
      if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
        Coeffs g = detail::gcd(m, fc, detail::sub(m, h, x));
        if (g.size() > 1) return false;
      }
    }
    return false;
  });
}

Factorization factor(const MonicPoly& f, std::uint64_t seed) {
  const Prime p = f.modulus();
  if (f.is_one()) return {};
  return detail::with_modulus(p.value(), [&](const auto& m) {
    std::map<Coeffs, unsigned> acc;
    const Coeffs& fc = MonicPolyAccess::raw(f);
    if (field_size_power(p.value(), f.degree(), kTrialDivisionLimit) <= kTrialDivisionLimit) {
      trial_division(m, p, fc, 1, acc);
      return to_factorization(p, acc);
    }
    std::mt19937_64 rng(seed);
    Coeffs leftover{1};
    for (const auto& part : detail::squarefree_decomposition(m, fc)) {
      factor_squarefree_part(m, part.poly, part.multiplicity, static_cast<std::size_t>(-1), rng, acc, leftover);
    }
    return to_factorization(p, acc);
  });
}

std::vector<std::size_t> factor_degrees(const MonicPoly& f) {
  std::vector<std::size_t> degrees;
  if (f.is_one()) return degrees;
  detail::with_modulus(f.modulus().value(), [&](const auto& m) {
    for (const auto& part : detail::squarefree_decomposition(m, MonicPolyAccess::raw(f))) {
      for (const auto& dp : detail::distinct_degree(m, part.poly)) {
        const std::size_t count = (dp.product.size() - 1) / dp.degree;
        degrees.insert(degrees.end(), count * part.multiplicity, dp.degree);
      }
    }
  });
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

PartialFactorization factor_up_to_degree(const MonicPoly& f, std::size_t max_degree, std::uint64_t seed) {
  const Prime p = f.modulus();
  if (f.is_one() || max_degree == 0) return {Factorization{}, f};
  return detail::with_modulus(p.value(), [&](const auto& m) {
    std::map<Coeffs, unsigned> acc;
    std::mt19937_64 rng(seed);
    Coeffs leftover{1};
    for (const auto& part : detail::squarefree_decomposition(m, MonicPolyAccess::raw(f))) {
      factor_squarefree_part(m, part.poly, part.multiplicity, max_degree, rng, acc, leftover);
    }
    return PartialFactorization{to_factorization(p, acc), MonicPolyAccess::make(p, std::move(leftover))};
  });
}

}  // namespace irrlab
