#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irrlab/prime.hpp"

namespace irrlab {

/// Monic polynomial over F_p with coefficients stored in ascending degree.
///
/// The unit polynomial 1 is a regular value of degree 0. Residues are kept
/// canonical in [0, p) and the coefficient vector has length degree + 1 with
/// a trailing 1.
class MonicPoly {
 public:
  /// The unit polynomial over F_p.
  explicit MonicPoly(Prime p);

  static MonicPoly one(Prime p) { return MonicPoly(p); }
  static MonicPoly x(Prime p);
  /// X^k + ... built from residues already in [0, p). Throws InvalidInput if
  /// a residue is out of range or the trimmed leading coefficient is not 1.
  static MonicPoly from_residues(Prime p, std::vector<std::uint32_t> coeffs);
  /// Reduces arbitrary signed coefficients with a floored modulus first.
  static MonicPoly from_integers(Prime p, std::span<const std::int64_t> coeffs);
  /// Parses the "c0,c1,...,cn" text form.
  static MonicPoly parse(Prime p, std::string_view text);

  Prime modulus() const noexcept { return p_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_one() const noexcept { return coeffs_.size() == 1; }

  std::string to_string() const;

  friend MonicPoly operator*(const MonicPoly& a, const MonicPoly& b);
  MonicPoly& operator*=(const MonicPoly& b) { return *this = *this * b; }

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;
  /// Canonical order: modulus, then degree, then coefficients from c0 up.
  friend std::strong_ordering operator<=>(const MonicPoly& a, const MonicPoly& b);

 private:
  MonicPoly(Prime p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {}
  friend struct MonicPolyAccess;

  Prime p_;
  std::vector<std::uint32_t> coeffs_;
};

/// Whether d divides f in F_p[X]. Both must share a modulus.
bool divides(const MonicPoly& d, const MonicPoly& f);
/// f / d. Throws InvalidInput when d does not divide f.
MonicPoly quotient(const MonicPoly& f, const MonicPoly& d);
MonicPoly gcd(const MonicPoly& a, const MonicPoly& b);
MonicPoly pow(const MonicPoly& f, unsigned e);

/// All monic polynomials of degree k over F_p in canonical order.
/// Throws BudgetExceeded if p^k > budget.
std::vector<MonicPoly> all_monic_of_degree(Prime p, std::size_t k, std::uint64_t budget = 1u << 24);

}  // namespace irrlab
