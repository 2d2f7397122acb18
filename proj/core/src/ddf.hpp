#pragma once

// Distinct-degree factorization. The Frobenius iteration and the gcds run
// on a kernel chosen per modulus: bit-packed words for p = 2, 16-bit lanes
// with lazy reduction for the other small fixed primes, and the generic
// 32-bit routines of fp_engine.hpp otherwise.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "fp_engine.hpp"

namespace irrlab::detail {

template <class M>
class WideKernel {
 public:
  using Poly = Coeffs;
  using Frob = std::vector<typename M::store_t>;

  explicit WideKernel(const M& m) : m_(m) {}

  static Poly from(const Coeffs& c) { return c; }
  static Coeffs to(const Poly& c) { return c; }
  static long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }
  static Poly x() { return {0, 1}; }

  Frob frobenius(const Poly& f) const { return frobenius_matrix(m_, f); }
  Poly apply(const Frob& rows, const Poly& f, const Poly& h) const { return apply_frobenius(m_, rows, f.size() - 1, h); }
  void rem_monic(Poly& a, const Poly& b) const { rem_monic_inplace(m_, a, b); }
  Poly mulmod(const Poly& a, const Poly& b, const Poly& f) const { return detail::mulmod(m_, a, b, f); }
  Poly gcd(Poly a, Poly b) const { return detail::gcd(m_, std::move(a), std::move(b)); }
  Poly div_exact(Poly a, const Poly& b) const { return div_exact_monic(m_, std::move(a), b); }
  void minus_x(Poly& t) const {
    if (t.size() < 2) t.resize(2, 0);
    t[1] = m_.reduce(static_cast<typename M::acc_t>(t[1]) + (m_.modulus() - 1));
    trim(t);
  }

 private:
  M m_;
};

/// F_P arithmetic on 16-bit coefficients. Products are accumulated
/// unreduced and reduced every kLazy updates.
template <std::uint32_t P>
class SmallKernel {
 public:
  using Poly = std::vector<std::uint16_t>;
  using Row = std::uint8_t;
  using Frob = std::vector<Row>;

  static constexpr unsigned kLazy = (65535u - (P - 1)) / ((P - 1) * (P - 1));

  explicit SmallKernel(const FixedMod<P>&) {}

  static Poly from(const Coeffs& c) { return Poly(c.begin(), c.end()); }
  static Coeffs to(const Poly& c) { return Coeffs(c.begin(), c.end()); }
  static long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }
  static Poly x() { return {0, 1}; }

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  static void reduce_all(std::uint16_t* a, std::size_t len) {
    for (std::size_t j = 0; j < len; ++j) a[j] = static_cast<std::uint16_t>(a[j] % P);
  }

  /// a <- a mod b for b of degree >= 1 (any nonzero leading coefficient).
  static void rem(Poly& a, const Poly& b, Poly* quot = nullptr) {
    const std::size_t db = b.size() - 1;
    if (quot) quot->assign(a.size() > db ? a.size() - db : 0, 0);
    if (a.size() <= db) {
      trim(a);
      return;
    }
    const std::uint16_t inv = kInverse[b.back()];
    unsigned pending = 0;
    for (std::size_t i = a.size() - 1;; --i) {
      auto c = static_cast<std::uint16_t>(a[i] % P);
      if (inv != 1) c = static_cast<std::uint16_t>(c * inv % P);
      if (c != 0) {
        if (pending == kLazy) {
          reduce_all(a.data(), i);
          pending = 0;
        }
        const auto nc = static_cast<std::uint16_t>(P - c);
        std::uint16_t* dst = a.data() + (i - db);
        const std::uint16_t* src = b.data();
        for (std::size_t j = 0; j < db; ++j) dst[j] = static_cast<std::uint16_t>(dst[j] + nc * src[j]);
        ++pending;
        if (quot) (*quot)[i - db] = c;
      }
      if (i == db) break;
    }
    a.resize(db);
    reduce_all(a.data(), a.size());
    trim(a);
    if (quot) trim(*quot);
  }

  static Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly acc(a.size() + b.size() - 1, 0);
    unsigned pending = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint16_t ai = a[i];
      if (ai == 0) continue;
      if (pending == kLazy) {
        reduce_all(acc.data(), acc.size());
        pending = 0;
      }
      std::uint16_t* row = acc.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) row[j] = static_cast<std::uint16_t>(row[j] + ai * b[j]);
      ++pending;
    }
    reduce_all(acc.data(), acc.size());
    trim(acc);
    return acc;
  }

  Frob frobenius(const Poly& f) const {
    const std::size_t n = f.size() - 1;
    std::vector<Row> rows(n * n, 0);
    Poly cur{1};
    for (std::size_t i = 0; i < n; ++i) {
      std::copy(cur.begin(), cur.end(), rows.begin() + static_cast<std::ptrdiff_t>(i * n));
      if (i + 1 == n) break;
      cur.insert(cur.begin(), P, 0);
      rem(cur, f);
    }
    return rows;
  }

  Poly apply(const Frob& rows, const Poly& f, const Poly& h) const {
    const std::size_t n = f.size() - 1;
    Poly acc(n, 0);
    unsigned pending = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const std::uint16_t hi = h[i];
      if (hi == 0) continue;
      if (pending == kLazy) {
        reduce_all(acc.data(), n);
        pending = 0;
      }
      const Row* row = rows.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) acc[j] = static_cast<std::uint16_t>(acc[j] + hi * row[j]);
      ++pending;
    }
    reduce_all(acc.data(), n);
    trim(acc);
    return acc;
  }

  void rem_monic(Poly& a, const Poly& b) const { rem(a, b); }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& f) const {
    Poly prod = mul(a, b);
    rem(prod, f);
    return prod;
  }

  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      if (b.size() == 1) return Poly{1};
      rem(a, b);
      std::swap(a, b);
    }
    const std::uint16_t inv = a.empty() ? 1 : kInverse[a.back()];
    for (auto& x : a) x = static_cast<std::uint16_t>(x * inv % P);
    return a;
  }

  Poly div_exact(Poly a, const Poly& b) const {
    if (b.size() == 1) return a;
    Poly q;
    rem(a, b, &q);
    return q;
  }

  void minus_x(Poly& t) const {
    if (t.size() < 2) t.resize(2, 0);
    t[1] = static_cast<std::uint16_t>((t[1] + P - 1) % P);
    trim(t);
  }

 private:
  static constexpr std::array<std::uint16_t, P> make_inverses() {
    std::array<std::uint16_t, P> inv{};
    for (std::uint32_t x = 1; x < P; ++x) {
      for (std::uint32_t y = 1; y < P; ++y) {
        if (x * y % P == 1) inv[x] = static_cast<std::uint16_t>(y);
      }
    }
    return inv;
  }
  static constexpr std::array<std::uint16_t, P> kInverse = make_inverses();
};

/// F_2 arithmetic on bit-packed words; Frobenius is squaring.
class Gf2Kernel {
 public:
  using Poly = std::vector<std::uint64_t>;
  struct Frob {};

  explicit Gf2Kernel(const FixedMod<2>&) {}

  static long degree(const Poly& a) {
    return a.empty() ? -1 : static_cast<long>(64 * (a.size() - 1)) + 63 - std::countl_zero(a.back());
  }
  static Poly x() { return {2}; }

  static Poly from(const Coeffs& c) {
    Poly w((c.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < c.size(); ++i) w[i / 64] |= std::uint64_t{c[i] & 1u} << (i % 64);
    trim(w);
    return w;
  }
  static Coeffs to(const Poly& a) {
    Coeffs c(static_cast<std::size_t>(degree(a) + 1));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>(a[i / 64] >> (i % 64) & 1u);
    return c;
  }

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  /// a ^= b * X^shift; a must have room for the result.
  static void xor_shifted(std::uint64_t* a, const Poly& b, std::size_t shift) {
    const std::size_t ws = shift / 64, bs = shift % 64;
    if (bs == 0) {
      for (std::size_t i = 0; i < b.size(); ++i) a[i + ws] ^= b[i];
      return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + ws] ^= b[i] << bs | carry;
      carry = b[i] >> (64 - bs);
    }
    if (carry) a[b.size() + ws] ^= carry;
  }

  static void rem(Poly& a, const Poly& b, Poly* quot = nullptr) {
    const long db = degree(b);
    const long da = degree(a);
    if (quot) quot->assign(da >= db ? static_cast<std::size_t>(da - db) / 64 + 1 : 0, 0);
    for (long i = da; i >= db; --i) {
      const auto bit = static_cast<std::size_t>(i);
      if (!(a[bit / 64] >> (bit % 64) & 1u)) continue;
      const auto shift = static_cast<std::size_t>(i - db);
      xor_shifted(a.data(), b, shift);
      if (quot) (*quot)[shift / 64] |= std::uint64_t{1} << (shift % 64);
    }
    trim(a);
    if (quot) trim(*quot);
  }

  static Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const auto [lo, hi] = clmul(a[i], b[j]);
        out[i + j] ^= lo;
        out[i + j + 1] ^= hi;
      }
    }
    trim(out);
    return out;
  }

  static Frob frobenius(const Poly&) { return {}; }

  static Poly apply(const Frob&, const Poly& f, const Poly& h) {
    Poly sq(2 * h.size() + 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      sq[2 * i] = spread(static_cast<std::uint32_t>(h[i]));
      sq[2 * i + 1] = spread(static_cast<std::uint32_t>(h[i] >> 32));
    }
    trim(sq);
    rem(sq, f);
    return sq;
  }

  static void rem_monic(Poly& a, const Poly& b) { rem(a, b); }

  static Poly mulmod(const Poly& a, const Poly& b, const Poly& f) {
    Poly prod = mul(a, b);
    rem(prod, f);
    return prod;
  }

  static Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
      if (degree(b) == 0) return Poly{1};
      rem(a, b);
      std::swap(a, b);
    }
    return a;
  }

  static Poly div_exact(Poly a, const Poly& b) {
    if (degree(b) == 0) return a;
    Poly q;
    rem(a, b, &q);
    return q;
  }

  static void minus_x(Poly& t) {
    if (t.empty()) t.push_back(0);
    t[0] ^= 2;
    trim(t);
  }

 private:
  static std::pair<std::uint64_t, std::uint64_t> clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t lo = 0, hi = 0;
    for (unsigned i = 0; i < 64; ++i) {
      if (b >> i & 1u) {
        lo ^= a << i;
        if (i) hi ^= a >> (64 - i);
      }
    }
    return {lo, hi};
  }

  static std::uint64_t spread(std::uint32_t x) {
    std::uint64_t v = x;
    v = (v | v << 16) & 0x0000FFFF0000FFFFull;
    v = (v | v << 8) & 0x00FF00FF00FF00FFull;
    v = (v | v << 4) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | v << 2) & 0x3333333333333333ull;
    v = (v | v << 1) & 0x5555555555555555ull;
    return v;
  }
};

template <class M>
struct KernelFor {
  using type = WideKernel<M>;
};

template <std::uint32_t P>
struct KernelFor<FixedMod<P>> {
  using type = SmallKernel<P>;
};

template <>
struct KernelFor<FixedMod<2>> {
  using type = Gf2Kernel;
};

/// Legendre symbol as a residue: 0, 1 or p - 1.
template <class M>
std::uint32_t legendre(const M& m, std::uint32_t a) {
  std::uint32_t r = 1, base = a;
  for (std::size_t e = (m.modulus() - 1) / 2; e; e >>= 1, base = mul(m, base, base)) {
    if (e & 1) r = mul(m, r, base);
  }
  return r;
}

struct DegreePart {
  Coeffs product;  // product of every irreducible factor of this degree
  std::size_t degree;
};

/// Distinct-degree factorization of a squarefree monic f of degree >= 1,
/// advanced a block of degrees at a time: one gcd with the product of
/// X^(p^k) - X over the block, then per-degree gcds only inside a nontrivial
/// block gcd.
template <class M>
class DdfCursor {
  using Kernel = typename KernelFor<M>::type;
  using Poly = typename Kernel::Poly;

 public:
  /// With use_parity, odd p and a nonsquare-or-square discriminant fix the
  /// parity of the number of irreducible factors, which can show the rest
  /// irreducible once it is below three times the next degree.
  DdfCursor(const M& m, const Coeffs& f, bool use_parity = false, std::size_t block = 4)
      : kernel_(m), n_(f.size() - 1), f_(Kernel::from(f)), rest_(f_), h_(Kernel::x()), block_(block) {
    const std::uint32_t p = m.modulus();
    if (use_parity && p != 2 && n_ >= 2) {
      // Stickelberger: disc(f) is a square iff n - (number of factors) is even.
      std::uint32_t disc = resultant(m, f, derivative(m, f));
      if ((n_ * (n_ - 1) / 2) % 2 == 1) disc = m.reduce(static_cast<typename M::acc_t>(p - disc));
      const std::uint32_t chi = legendre(m, disc);
      if (chi != 0) parity_ = static_cast<int>((n_ + (chi == 1 ? 0 : 1)) % 2);
    }
  }

  /// Every irreducible factor of degree <= settled() has been split off.
  std::size_t settled() const noexcept { return settled_; }
  std::size_t rest_degree() const noexcept { return static_cast<std::size_t>(Kernel::degree(rest_)); }
  /// Product of the irreducible factors of degree > settled().
  Coeffs rest() const { return Kernel::to(rest_); }
  /// Whether rest() is 1 or irreducible.
  bool finished() const noexcept {
    if (rest_degree() < 2 * (settled_ + 1)) return true;
    return parity_ >= 0 && (static_cast<std::size_t>(parity_) + found_) % 2 == 1 && rest_degree() < 3 * (settled_ + 1);
  }

  /// Degree by which the rest is expected to be shown 1 or irreducible.
  std::size_t expected_finish() const noexcept {
    const bool odd = parity_ >= 0 && (static_cast<std::size_t>(parity_) + found_) % 2 == 1;
    return odd ? rest_degree() / 3 : rest_degree() / 2;
  }

  /// Settles the degrees up to min(settled() + block, limit), appending the
  /// parts found.
  void advance(std::size_t limit, std::vector<DegreePart>& out) {
    const std::size_t k0 = settled_;
    const std::size_t k1 = std::min(k0 + block_, std::max(limit, k0 + 1));
    if (!frob_) frob_ = kernel_.frobenius(f_);
    std::vector<Poly> ts;
    Poly acc;
    for (std::size_t k = k0 + 1; k <= k1; ++k) {
      h_ = kernel_.apply(*frob_, f_, h_);
      Poly t = h_;
      if (rest_degree() < n_) kernel_.rem_monic(t, rest_);
      kernel_.minus_x(t);
      acc = k == k0 + 1 ? t : kernel_.mulmod(acc, t, rest_);
      ts.push_back(std::move(t));
    }
    settled_ = k1;
    Poly g = kernel_.gcd(rest_, std::move(acc));
    if (Kernel::degree(g) <= 0) return;
    rest_ = kernel_.div_exact(std::move(rest_), g);
    for (std::size_t i = 0; i < ts.size() && Kernel::degree(g) > 0; ++i) {
      Poly gk = g;
      if (ts.size() > 1) {
        kernel_.rem_monic(ts[i], g);
        gk = kernel_.gcd(g, std::move(ts[i]));
      }
      const long dk = Kernel::degree(gk);
      if (dk > 0) {
        g = kernel_.div_exact(std::move(g), gk);
        found_ += static_cast<std::size_t>(dk) / (k0 + 1 + i);
        out.push_back({Kernel::to(gk), k0 + 1 + i});
      }
    }
  }

 private:
  Kernel kernel_;
  std::size_t n_;
  Poly f_;
  Poly rest_;
  Poly h_;  // X^(p^settled) mod f
  std::size_t block_;
  std::size_t settled_ = 0;
  std::size_t found_ = 0;
  int parity_ = -1;  // number of irreducible factors mod 2, if known
  std::optional<typename Kernel::Frob> frob_;
};

/// Distinct-degree factorization of a squarefree monic f of degree >= 1.
/// Stops early once only factors of degree > max_degree can remain and
/// returns the leftover as a part with degree 0 in that case.
template <class M>
std::vector<DegreePart> distinct_degree(const M& m, const Coeffs& f,
                                        std::size_t max_degree = std::numeric_limits<std::size_t>::max()) {
  std::vector<DegreePart> parts;
  DdfCursor<M> cur(m, f);
  while (!cur.finished() && cur.settled() < max_degree) {
    cur.advance(std::min(max_degree, cur.rest_degree() / 2), parts);
  }
  if (cur.rest_degree() > 0) {
    const std::size_t d = cur.rest_degree();
    parts.push_back({cur.rest(), cur.finished() && d <= max_degree ? d : 0});
  }
  return parts;
}

}  // namespace irrlab::detail
