#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "irrlab/bigint.hpp"
#include "irrlab/monic_poly.hpp"
#include "irrlab/prime.hpp"

namespace irrlab {

/// Distinct primes p_1 < ... < p_r.
class PrimeTuple {
 public:
  /// Sorts the input; throws InvalidInput when it is empty or has repeats.
  explicit PrimeTuple(std::vector<Prime> primes);
  /// "2,3,5"
  static PrimeTuple parse(std::string_view text);
  /// The first r primes.
  static PrimeTuple first(std::size_t r);

  std::size_t size() const noexcept { return primes_.size(); }
  const Prime& operator[](std::size_t i) const { return primes_[i]; }
  const std::vector<Prime>& primes() const noexcept { return primes_; }
  BigInt product() const;
  std::string to_string() const;

  friend bool operator==(const PrimeTuple&, const PrimeTuple&) = default;

 private:
  std::vector<Prime> primes_;
};

using DegreeVec = std::vector<std::size_t>;

/// An element of the product of the monic polynomial monoids over each
/// F_{p_i}. Multiplication and divisibility are component-wise.
class PTuple {
 public:
  /// Throws InvalidInput unless component i lives over ctx[i].
  PTuple(PrimeTuple ctx, std::vector<MonicPoly> components);

  static PTuple unit(const PrimeTuple& ctx);
  /// Component `slot` set to `poly`, units elsewhere.
  static PTuple embed(const PrimeTuple& ctx, std::size_t slot, const MonicPoly& poly);
  /// "p=2,3|1,1,1;1,1"
  static PTuple parse(std::string_view text);

  const PrimeTuple& ctx() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return components_.size(); }
  const MonicPoly& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<MonicPoly>& components() const noexcept { return components_; }
  bool is_unit() const;
  std::string to_string() const;

  friend PTuple operator*(const PTuple& a, const PTuple& b);
  PTuple& operator*=(const PTuple& b) { return *this = *this * b; }
  friend bool operator==(const PTuple&, const PTuple&) = default;
  /// Component-wise canonical order; only meaningful within one context.
  friend std::strong_ordering operator<=>(const PTuple& a, const PTuple& b);

 private:
  PrimeTuple ctx_;
  std::vector<MonicPoly> components_;
};

DegreeVec deg_vec(const PTuple& a);
std::size_t total_deg(const PTuple& a);
/// prod p_i^deg(A_i)
BigInt norm(const PTuple& a);
/// 1 / norm(a), exactly.
Rational inverse_norm(const PTuple& a);

bool divides(const PTuple& d, const PTuple& a);
/// a / d; throws InvalidInput when d does not divide a.
PTuple quotient(const PTuple& a, const PTuple& d);

/// (1, ..., 1, poly, 1, ..., 1) with poly in position `slot`.
struct PIrreducible {
  std::size_t slot;
  MonicPoly poly;

  friend bool operator==(const PIrreducible&, const PIrreducible&) = default;
  friend auto operator<=>(const PIrreducible&, const PIrreducible&) = default;
};

struct PFactor {
  PIrreducible irreducible;
  unsigned multiplicity;

  friend bool operator==(const PFactor&, const PFactor&) = default;
};

/// Slot-tagged irreducible factors, by slot and then canonical order.
std::vector<PFactor> factorize_P(const PTuple& a);
BigInt tau(const PTuple& a);
std::size_t omega(const PTuple& a);
unsigned nu(const PIrreducible& irreducible, const PTuple& a);

/// Sum over irreducibles of degree <= m, X_i excluded, of 1/norm.
double sigma_m(const PrimeTuple& ctx, std::size_t m);
/// log of the product over the same set of (1 - 1/norm).
double log_pi_m(const PrimeTuple& ctx, std::size_t m);
inline double pi_m(const PrimeTuple& ctx, std::size_t m) { return std::exp(log_pi_m(ctx, m)); }

struct FriableProfile {
  std::size_t m = 0;
  PTuple friable_part;
  PTuple nonfriable_part;
  double sigma_m = 0.0;
  double pi_m = 0.0;
  double log_pi_m = 0.0;
  BigInt tau_friable;
  double log_tau_friable = 0.0;
  std::size_t omega_friable = 0;
  std::size_t total_deg_friable = 0;
};

/// Splits off the product of irreducible factors of degree <= m other than
/// the X_i. Throws InvalidInput for m = 0.
FriableProfile friable_profile(const PTuple& a, std::size_t m);

struct EmEvaluation {
  FriableProfile profile;
  bool holds = false;
  bool degree_ok = false;
  bool tau_ok = false;
  /// m (Sigma_m - 2)
  double degree_threshold = 0.0;
  /// (1 - 1/r) Sigma_m, compared against log tau
  double log_tau_threshold = 0.0;
};

/// Deg A_{<=m} <= m (Sigma_m - 2) and log tau(A_{<=m}) <= (1 - 1/r) Sigma_m,
/// both non-strict.
EmEvaluation event_Em(const PTuple& a, std::size_t m);

}  // namespace irrlab
