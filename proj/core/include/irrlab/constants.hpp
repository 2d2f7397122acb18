#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "irrlab/bigint.hpp"
#include "irrlab/ptuple.hpp"

namespace irrlab {

/// t log t - t + 1. Throws InvalidInput for t <= 0.
double Q_of(double t);

/// r Q((1 - 1/r) / log 2).
double exponent_for_r(unsigned r);

/// Smallest r >= 4 with exponent_for_r(r) > c. Throws InvalidInput for c <= 0.
unsigned min_r(double c);

/// Product of the first r primes.
BigInt primorial(unsigned r);

/// P (log(P - 1) + 2) / (0.99 sqrt(P) - 1), evaluated with 50 significant
/// digits. Throws InvalidInput for P < 2.
double f_of(const BigInt& p);

/// N_0 values stated for the two documented regimes (r = 12 and r = 4).
std::optional<std::uint64_t> stated_N0(unsigned r);

struct ConstantsReport {
  double c_target = 0.0;
  unsigned r = 0;
  double exponent = 0.0;
  BigInt p;
  double f_p = 0.0;
  /// ceil(f_p)
  BigInt n0;
  /// Stated value for this r, if any; kept separate from n0.
  std::optional<std::uint64_t> stated_n0;
  /// Exponent s of the Fourier condition that f(P) certifies.
  std::optional<unsigned> s_hint;
};

ConstantsReport N0_for(double c);

enum class RankinKind { TauUpper, TauLower, Omega };

/// tau_lower: log((1 - 1/r) / log 2) / log 2, tau_upper: 1 - tau_lower, both
/// for r >= 4; omega: log u for u > 1.
double rankin_t(RankinKind kind, double param);

struct SeriesValue {
  double value = 0.0;
  /// The true sum lies in [value, value + error_bound].
  double error_bound = 0.0;
  std::size_t max_degree = 0;
  std::size_t max_nu = 0;

  /// Certified enclosure, widened by 1e-12 relative for rounding in the
  /// partial sum.
  double lower() const { return value * (1.0 - 1e-12); }
  double upper() const { return (value + error_bound) * (1.0 + 1e-12); }
};

/// sum over irreducibles I of the product space (all degrees, X_i included)
/// and nu >= 2 of (nu + 1)^t / norm(I)^nu, with a certified tail.
/// Throws InvalidInput for tol <= 0.
SeriesValue S_series(double t, const PrimeTuple& ctx, double tol);

/// Same sum truncated at the given degree and exponent, with its certified
/// tail bound.
SeriesValue S_series_truncated(double t, const PrimeTuple& ctx, std::size_t max_degree, std::size_t max_nu);

}  // namespace irrlab
