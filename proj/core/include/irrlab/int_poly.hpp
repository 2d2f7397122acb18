#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "irrlab/bigint.hpp"
#include "irrlab/monic_poly.hpp"
#include "irrlab/prime.hpp"

namespace irrlab {

/// Polynomial over Z, ascending coefficients. The zero polynomial has no
/// coefficients; every other value has a non-zero last coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  /// X^n.
  static IntPoly monomial(std::size_t n);
  static IntPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  BigInt evaluate(const BigInt& x) const;
  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct IntDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic divisor of degree >= 1. Throws InvalidInput otherwise.
IntDivision int_poly_divrem(const IntPoly& a, const IntPoly& b);
/// Remainder of a modulo a monic b; zero exactly when b divides a.
IntPoly int_poly_rem(const IntPoly& a, const IntPoly& b);

/// Coefficient-wise reduction of a monic integer polynomial. Throws
/// InvalidInput on non-monic input.
MonicPoly reduce_mod(const IntPoly& a, Prime p);

}  // namespace irrlab
