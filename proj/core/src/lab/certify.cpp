#include "irrlab/lab/certify.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include "irrlab/cyclotomic.hpp"
#include "irrlab/errors.hpp"
#include "irrlab/lab/degree_set.hpp"
#include "degree_refiner.hpp"

namespace irrlab::lab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kLockstep = 16;

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

u64 powmod(u64 b, u64 e, u64 q) {
  u64 r = 1;
  b %= q;
  while (e) {
    if (e & 1) r = mulmod(r, b, q);
    b = mulmod(b, b, q);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

/// A prime q = 1 mod d and an element of multiplicative order exactly d, so
/// Phi_d splits mod q and omega is one of its roots.
struct RootOfUnity {
  u64 q;
  u64 omega;
};

RootOfUnity root_of_unity(u64 d) {
  static std::mutex mu;
  static std::map<u64, RootOfUnity> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  std::vector<u64> prime_factors;
  for (u64 t = 2, rest = d; t <= rest; ++t) {
    if (rest % t == 0) {
      prime_factors.push_back(t);
      while (rest % t == 0) rest /= t;
    }
  }
  u64 k = (u64{1} << 61) / d;
  while (!is_prime_u64(k * d + 1)) --k;
  const u64 q = k * d + 1;
  for (u64 g = 2;; ++g) {
    const u64 w = powmod(g, (q - 1) / d, q);
    bool exact = w != 0;
    for (u64 l : prime_factors) exact = exact && powmod(w, d / l, q) != 1;
    if (d == 1) exact = w == 1;
    if (exact) return cache[d] = {q, w};
  }
}

const std::vector<u64>& indices_for(u64 bound) {
  static std::mutex mu;
  static std::map<u64, std::vector<u64>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(bound);
  if (it == cache.end()) it = cache.emplace(bound, cyclotomic_indices(bound)).first;
  return it->second;
}

bool fits_small(const IntPoly& a) {
  const BigInt limit = BigInt(1) << 62;
  const BigInt per = limit / (a.coeffs().size() + 1);
  for (const auto& c : a.coeffs()) {
    if (abs(c) > per) return false;
  }
  return true;
}

std::vector<std::int64_t> to_small(const IntPoly& a) {
  std::vector<std::int64_t> out;
  for (const auto& c : a.coeffs()) out.push_back(c.convert_to<std::int64_t>());
  return out;
}

template <class Coeffs, class Cyclo, class Reduce>
Certificate certify_impl(const Coeffs& c, std::size_t n, const PrimeTuple& primes, const CertifyOptions& opts,
                         Cyclo&& cyclo_divides, Reduce&& reduce) {
  if (n < 2) throw InvalidInput("certify needs degree >= 2");
  Certificate cert;
  if (c[0] == 0) {
    cert.verdict = Verdict::ReducibleWitness;
    cert.witness = Witness{Witness::Kind::X, 0};
    return cert;
  }
  for (u64 d : indices_for(opts.cyclotomic_bound)) {
    if (euler_phi(d) >= n) continue;
    if (cyclo_divides(d)) {
      cert.verdict = Verdict::ReducibleWitness;
      cert.witness = Witness{Witness::Kind::Cyclotomic, d};
      return cert;
    }
  }
  DegreeSet common(n);
  for (std::size_t v = 1; v <= n / 2; ++v) common.insert(v);
  if (!opts.stop_early) {
    for (const auto& p : primes.primes()) {
      const DegreeSet s = attainable_degrees(reduce(p));
      cert.primes_used.push_back(p.value());
      cert.attainable_sets.push_back(s.to_vector());
      common.intersect_with(s);
    }
    cert.common_degrees = common.to_vector();
    cert.verdict = common.empty() ? Verdict::CertifiedIrreducible : Verdict::Unknown;
    return cert;
  }
  std::vector<std::unique_ptr<DegreeRefiner>> refiners;
  for (const auto& p : primes.primes()) {
    refiners.push_back(make_degree_refiner(reduce(p)));
    cert.primes_used.push_back(p.value());
  }
  for (;;) {
    DegreeSet outer = common, inner = common;
    std::vector<DegreeSet> uppers;
    for (const auto& r : refiners) {
      uppers.push_back(r->upper());
      outer.intersect_with(uppers.back());
      inner.intersect_with(r->lower());
    }
    if (outer.empty() || !inner.empty()) {
      for (const auto& u : uppers) cert.attainable_sets.push_back(u.to_vector());
      cert.common_degrees = inner.to_vector();
      cert.verdict = outer.empty() ? Verdict::CertifiedIrreducible : Verdict::Unknown;
      return cert;
    }
    // Small common degrees show up early, so every prime first runs to
    // kLockstep; after that the prime expected to settle first goes next.
    std::size_t kmin = std::numeric_limits<std::size_t>::max();
    for (const auto& r : refiners) {
      if (!r->settled()) kmin = std::min(kmin, r->steps());
    }
    if (kmin < kLockstep) {
      for (auto& r : refiners) {
        if (r->steps() == kmin) r->step();
      }
    } else {
      DegreeRefiner* best = nullptr;
      for (auto& r : refiners) {
        if (r->settled()) continue;
        if (!best || r->expected_finish() < best->expected_finish()) best = r.get();
      }
      best->step();
    }
  }
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedIrreducible: return "CertifiedIrreducible";
    case Verdict::ReducibleWitness: return "ReducibleWitness";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

IntPoly Witness::divisor() const { return kind == Kind::X ? IntPoly::monomial(1) : cyclotomic(d); }

std::string Witness::description() const { return kind == Kind::X ? "X" : "Phi_" + std::to_string(d); }

bool cyclotomic_divides(std::span<const std::int64_t> coeffs, std::uint64_t d) {
  if (d == 0) throw InvalidInput("cyclotomic index must be >= 1");
  // A = B mod (X^d - 1) and Phi_d | X^d - 1, so A = B mod Phi_d.
  std::vector<std::int64_t> folded(std::min<std::size_t>(d, coeffs.size()), 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) folded[j % d] += coeffs[j];
  const RootOfUnity ru = root_of_unity(d);
  u64 acc = 0;
  for (std::size_t k = folded.size(); k-- > 0;) {
    const std::int64_t v = folded[k];
    const u64 residue = v >= 0 ? static_cast<u64>(v) % ru.q : (ru.q - static_cast<u64>(-v) % ru.q) % ru.q;
    acc = (mulmod(acc, ru.omega, ru.q) + residue) % ru.q;
  }
  if (acc != 0) return false;
  std::vector<BigInt> big(folded.begin(), folded.end());
  const IntPoly b(std::move(big));
  if (b.is_zero()) return true;
  return int_poly_rem(b, cyclotomic(d)).is_zero();
}

bool cyclotomic_divides(const IntPoly& a, std::uint64_t d) {
  if (fits_small(a)) {
    const auto small = to_small(a);
    return cyclotomic_divides(std::span<const std::int64_t>(small), d);
  }
  return int_poly_rem(a, cyclotomic(d)).is_zero();
}

Certificate certify(std::span<const std::int64_t> coeffs, const PrimeTuple& primes, const CertifyOptions& opts) {
  if (coeffs.empty() || coeffs.back() != 1) throw InvalidInput("certify needs a monic polynomial");
  const std::size_t n = coeffs.size() - 1;
  return certify_impl(
      coeffs, n, primes, opts, [&](u64 d) { return cyclotomic_divides(coeffs, d); },
      [&](Prime p) { return MonicPoly::from_integers(p, coeffs); });
}

Certificate certify(const IntPoly& a, const PrimeTuple& primes, const CertifyOptions& opts) {
  if (!a.is_monic()) throw InvalidInput("certify needs a monic polynomial");
  if (fits_small(a)) {
    const auto small = to_small(a);
    return certify(std::span<const std::int64_t>(small), primes, opts);
  }
  return certify_impl(
      a.coeffs(), a.degree(), primes, opts, [&](u64 d) { return int_poly_rem(a, cyclotomic(d)).is_zero(); },
      [&](Prime p) { return reduce_mod(a, p); });
}

bool witness_divides(const IntPoly& a, const Witness& w) { return int_poly_rem(a, w.divisor()).is_zero(); }

}  // namespace irrlab::lab
