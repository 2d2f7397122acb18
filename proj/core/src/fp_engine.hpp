#pragma once

// Dense polynomial arithmetic over F_p on raw coefficient vectors.
//
// Everything here is templated on a modulus policy. FixedMod<P> lets the
// compiler turn `% P` into multiply-shift sequences and vectorize the inner
// loops, which matters for the Monte Carlo paths; RuntimeMod covers any
// prime below 2^31 with Barrett reduction.
//
// Conventions: a Coeffs value is canonical (no trailing zeros), the zero
// polynomial is the empty vector, and routines that need a monic divisor
// say so.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "irrlab/bigint.hpp"

namespace irrlab::detail {

using Coeffs = std::vector<std::uint32_t>;

struct RuntimeMod {
  using acc_t = std::uint64_t;
  using store_t = std::uint32_t;

  explicit RuntimeMod(std::uint32_t prime) : p(prime), barrett(~std::uint64_t{0} / prime) {}

  std::uint32_t modulus() const noexcept { return p; }
  std::uint32_t reduce(acc_t x) const noexcept {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett) >> 64);
    const std::uint64_t r = x - q * p;
    return static_cast<std::uint32_t>(r >= p ? r - p : r);
  }
  /// How many products (p-1)^2 fit in an accumulator on top of a residue.
  std::size_t lazy_terms() const noexcept {
    const std::uint64_t sq = std::uint64_t(p - 1) * (p - 1);
    return sq == 0 ? std::numeric_limits<std::size_t>::max()
                   : static_cast<std::size_t>((std::numeric_limits<acc_t>::max() - p) / sq);
  }

  std::uint32_t p;
  std::uint64_t barrett;
};

template <std::uint32_t P>
struct FixedMod {
  static_assert(P < 256);
  using acc_t = std::uint32_t;
  using store_t = std::uint8_t;

  std::uint32_t modulus() const noexcept { return P; }
  std::uint32_t reduce(acc_t x) const noexcept { return x % P; }
  std::size_t lazy_terms() const noexcept {
    return static_cast<std::size_t>((std::numeric_limits<acc_t>::max() - P) / ((P - 1) * (P - 1)));
  }
};

template <class F>
decltype(auto) with_modulus(std::uint32_t p, F&& fn) {
  switch (p) {
    case 2: return fn(FixedMod<2>{});
    case 3: return fn(FixedMod<3>{});
    case 5: return fn(FixedMod<5>{});
    case 7: return fn(FixedMod<7>{});
    case 11: return fn(FixedMod<11>{});
    case 13: return fn(FixedMod<13>{});
    default: return fn(RuntimeMod(p));
  }
}

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long degree_of(const Coeffs& a) { return static_cast<long>(a.size()) - 1; }

template <class M>
std::uint32_t mul(const M& m, std::uint32_t a, std::uint32_t b) {
  return m.reduce(static_cast<typename M::acc_t>(a) * b);
}

template <class M>
std::uint32_t inverse(const M& m, std::uint32_t a) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = m.modulus(), new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += m.modulus();
  return static_cast<std::uint32_t>(t);
}

template <class M>
Coeffs add(const M& m, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = m.reduce(static_cast<typename M::acc_t>(x) + y);
  }
  trim(out);
  return out;
}

template <class M>
Coeffs sub(const M& m, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  const std::uint32_t p = m.modulus();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = m.reduce(static_cast<typename M::acc_t>(x) + (p - y));
  }
  trim(out);
  return out;
}

template <class M>
Coeffs scale(const M& m, Coeffs a, std::uint32_t c) {
  for (auto& x : a) x = mul(m, x, c);
  trim(a);
  return a;
}

template <class M>
Coeffs mul(const M& m, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  using acc_t = typename M::acc_t;
  std::vector<acc_t> acc(a.size() + b.size() - 1, 0);
  const std::size_t lazy = m.lazy_terms();
  std::size_t pending = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const acc_t ai = a[i];
    if (ai == 0) continue;
    acc_t* row = acc.data() + i;
    for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
    if (++pending == lazy) {
      for (auto& x : acc) x = m.reduce(x);
      pending = 0;
    }
  }
  Coeffs out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = m.reduce(acc[i]);
  trim(out);
  return out;
}

template <class M>
Coeffs make_monic(const M& m, Coeffs a) {
  if (a.empty() || a.back() == 1) return a;
  const std::uint32_t inv = inverse(m, a.back());
  return scale(m, std::move(a), inv);
}

/// a <- a mod b where b has degree >= 1 and inv_lead is the inverse of its
/// leading coefficient; if `quot` is given it receives the quotient.
template <class M>
void rem_inplace(const M& m, Coeffs& a, const Coeffs& b, std::uint32_t inv_lead, Coeffs* quot = nullptr) {
  const std::size_t db = b.size() - 1;
  const std::uint32_t p = m.modulus();
  using acc_t = typename M::acc_t;
  if (quot) quot->assign(a.size() > db ? a.size() - db : 0, 0);
  if (a.size() <= db) {
    trim(a);
    return;
  }
  // With 32-bit accumulators the updates are left unreduced and a
  // coefficient is reduced only when it becomes the leading one.
  const bool lazy = sizeof(acc_t) == sizeof(std::uint32_t) && a.size() - db < m.lazy_terms();
  for (std::size_t i = a.size() - 1; i >= db; --i) {
    std::uint32_t c = lazy ? m.reduce(a[i]) : a[i];
    if (inv_lead != 1) c = mul(m, c, inv_lead);
    if (c != 0) {
      const acc_t nc = p - c;
      std::uint32_t* dst = a.data() + (i - db);
      const std::uint32_t* src = b.data();
      if (lazy) {
        for (std::size_t j = 0; j < db; ++j) dst[j] += static_cast<std::uint32_t>(nc * src[j]);
      } else {
        for (std::size_t j = 0; j < db; ++j) dst[j] = m.reduce(dst[j] + nc * src[j]);
      }
      if (quot) (*quot)[i - db] = c;
    }
    if (i == db) break;
  }
  a.resize(db);
  if (lazy) {
    for (auto& x : a) x = m.reduce(x);
  }
  trim(a);
  if (quot) trim(*quot);
}

/// a <- a mod b for monic b of degree >= 1.
template <class M>
void rem_monic_inplace(const M& m, Coeffs& a, const Coeffs& b, Coeffs* quot = nullptr) {
  rem_inplace(m, a, b, 1, quot);
}

/// a mod b for arbitrary non-zero b.
template <class M>
Coeffs rem(const M& m, Coeffs a, const Coeffs& b) {
  if (b.size() == 1) return {};
  if (b.back() == 1) {
    rem_monic_inplace(m, a, b);
    return a;
  }
  rem_monic_inplace(m, a, make_monic(m, b));
  return a;
}

/// Exact quotient a / b for monic b.
template <class M>
Coeffs div_exact_monic(const M& m, Coeffs a, const Coeffs& b) {
  if (b.size() == 1) return a;
  Coeffs q;
  rem_monic_inplace(m, a, b, &q);
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class M>
Coeffs gcd(const M& m, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (b.size() == 1) return Coeffs{1};
    rem_inplace(m, a, b, inverse(m, b.back()));
    std::swap(a, b);
  }
  return make_monic(m, std::move(a));
}

template <class M>
Coeffs mulmod(const M& m, const Coeffs& a, const Coeffs& b, const Coeffs& f) {
  Coeffs prod = mul(m, a, b);
  rem_monic_inplace(m, prod, f);
  return prod;
}

template <class M>
Coeffs powmod(const M& m, Coeffs base, const BigInt& e, const Coeffs& f) {
  Coeffs result{1};
  rem_monic_inplace(m, result, f);
  rem_monic_inplace(m, base, f);
  if (e == 0) return result;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = mulmod(m, result, result, f);
    if (boost::multiprecision::bit_test(e, i)) result = mulmod(m, result, base, f);
  }
  return result;
}

/// Resultant of a and b (b nonzero) as a residue mod p.
template <class M>
std::uint32_t resultant(const M& m, Coeffs a, Coeffs b) {
  using acc_t = typename M::acc_t;
  const std::uint32_t p = m.modulus();
  std::uint32_t res = 1;
  auto power = [&](std::uint32_t base, std::size_t e) {
    std::uint32_t r = 1;
    for (; e; e >>= 1, base = mul(m, base, base)) {
      if (e & 1) r = mul(m, r, base);
    }
    return r;
  };
  for (;;) {
    if (b.empty()) return 0;
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    if (db == 0) return mul(m, res, power(b[0], da));
    const std::uint32_t lead = b.back();
    rem_inplace(m, a, b, inverse(m, lead));
    if (a.empty()) return 0;
    const std::size_t dr = a.size() - 1;
    res = mul(m, res, power(lead, da - dr));
    if ((da * db) % 2 == 1) res = m.reduce(static_cast<acc_t>(p - res));
    std::swap(a, b);
  }
}

template <class M>
Coeffs derivative(const M& m, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(m, a[i], m.reduce(static_cast<std::uint32_t>(i % m.modulus())));
  trim(out);
  return out;
}

/// For a with a' = 0 every exponent is a multiple of p and the p-th root
/// just compresses the exponents (residues are fixed by Frobenius on F_p).
template <class M>
Coeffs pth_root(const M& m, const Coeffs& a) {
  const std::size_t p = m.modulus();
  Coeffs out((a.size() - 1) / p + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i * p];
  return out;
}

/// Row-major n x n matrix whose row i is X^(p*i) mod f, n = deg f. Applying
/// it to the coefficient vector of h gives h^p mod f.
template <class M>
std::vector<typename M::store_t> frobenius_matrix(const M& m, const Coeffs& f) {
  using store_t = typename M::store_t;
  const std::size_t n = f.size() - 1;
  const std::uint32_t p = m.modulus();
  std::vector<store_t> rows(n * n, 0);
  auto put_row = [&](std::size_t i, const Coeffs& c) {
    for (std::size_t j = 0; j < c.size(); ++j) rows[i * n + j] = static_cast<store_t>(c[j]);
  };
  Coeffs cur{1};
  if (p < 4 * n) {
    for (std::size_t i = 0; i < n; ++i) {
      put_row(i, cur);
      if (i + 1 == n) break;
      cur.insert(cur.begin(), p, 0);
      rem_monic_inplace(m, cur, f);
    }
  } else {
    const Coeffs xp = powmod(m, Coeffs{0, 1}, BigInt(p), f);
    for (std::size_t i = 0; i < n; ++i) {
      put_row(i, cur);
      if (i + 1 < n) cur = mulmod(m, cur, xp, f);
    }
  }
  return rows;
}

template <class M>
Coeffs apply_frobenius(const M& m, const std::vector<typename M::store_t>& rows, std::size_t n, const Coeffs& h) {
  using acc_t = typename M::acc_t;
  std::vector<acc_t> acc(n, 0);
  const std::size_t lazy = m.lazy_terms();
  std::size_t pending = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const acc_t hi = h[i];
    if (hi == 0) continue;
    const auto* row = rows.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) acc[j] += hi * row[j];
    if (++pending == lazy) {
      for (auto& x : acc) x = m.reduce(x);
      pending = 0;
    }
  }
  Coeffs out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = m.reduce(acc[j]);
  trim(out);
  return out;
}

struct SquarefreePart {
  Coeffs poly;
  unsigned multiplicity;
};

/// Squarefree decomposition of a monic f: f = prod part.poly^part.multiplicity
/// with every part squarefree and pairwise coprime.
template <class M>
std::vector<SquarefreePart> squarefree_decomposition(const M& m, const Coeffs& f) {
  std::vector<SquarefreePart> out;
  if (f.size() <= 1) return out;
  const unsigned p = m.modulus();
  Coeffs fp = derivative(m, f);
  if (fp.empty()) {
    for (auto& part : squarefree_decomposition(m, pth_root(m, f))) out.push_back({std::move(part.poly), part.multiplicity * p});
    return out;
  }
  Coeffs c = gcd(m, f, fp);
  Coeffs w = div_exact_monic(m, f, c);
  unsigned i = 1;
  while (w.size() > 1) {
    Coeffs y = gcd(m, w, c);
    Coeffs z = div_exact_monic(m, w, y);
    if (z.size() > 1) out.push_back({std::move(z), i});
    ++i;
    c = div_exact_monic(m, std::move(c), y);
    w = std::move(y);
  }
  if (c.size() > 1) {
    for (auto& part : squarefree_decomposition(m, pth_root(m, c))) out.push_back({std::move(part.poly), part.multiplicity * p});
  }
  return out;
}

/// Splits a squarefree monic g whose irreducible factors all have degree k.
template <class M>
void equal_degree_split(const M& m, const Coeffs& g, std::size_t k, std::mt19937_64& rng, std::vector<Coeffs>& out) {
  const std::size_t n = g.size() - 1;
  if (n == k) {
    out.push_back(g);
    return;
  }
  const std::uint32_t p = m.modulus();
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  BigInt half_exp;
  if (p != 2) half_exp = (boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k)) - 1) / 2;
  for (;;) {
    Coeffs a(n);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (a.size() < 2) continue;
    Coeffs b;
    if (p == 2) {
      // Trace from F_{2^k}: a + a^2 + ... + a^(2^(k-1)).
      Coeffs term = a;
      b = a;
      for (std::size_t i = 1; i < k; ++i) {
        term = mulmod(m, term, term, g);
        b = add(m, b, term);
      }
    } else {
      b = powmod(m, a, half_exp, g);
      b = sub(m, b, Coeffs{1});
    }
    Coeffs d = gcd(m, g, b);
    if (d.size() > 1 && d.size() < g.size()) {
      Coeffs e = div_exact_monic(m, g, d);
      equal_degree_split(m, d, k, rng, out);
      equal_degree_split(m, e, k, rng, out);
      return;
    }
  }
}

}  // namespace irrlab::detail
