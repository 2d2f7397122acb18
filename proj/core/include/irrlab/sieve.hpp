#pragma once

#include <cstddef>
#include <cstdint>

#include "irrlab/bigint.hpp"
#include "irrlab/pspace.hpp"

namespace irrlab {

/// Truncated inclusion-exclusion for P(D | A; (A/D)_{<=m} = 1), with G
/// running over squarefree products of distinct irreducibles of degree <= m
/// that are not X_i.
struct SieveReport {
  std::size_t m = 0;
  std::size_t irreducible_count = 0;
  double sigma_m = 0.0;
  double pi_m = 0.0;
  /// ceil(2 Sigma_m)
  std::size_t ell0 = 0;
  /// floor(4 Sigma_m + 2), the longest product in the error sum
  std::size_t error_cutoff = 0;
  std::uint64_t products_enumerated = 0;

  /// Computed from the atoms directly, without the sieve.
  Rational exact;
  /// Alternating sums of P(DG | A) over products of at most 2 ell0 - 1 and
  /// 2 ell0 irreducibles.
  Rational lower;
  Rational upper;
  /// Same alternating sums for 1 / norm(DG); they bracket Pi_m / norm(D).
  Rational benchmark_lower;
  Rational benchmark_upper;
  /// Sum of |P(DG | A) - 1/norm(DG)| over products of at most error_cutoff.
  Rational error_sum;
  /// 2 Pi_m / norm(D) + error_sum
  double bound = 0.0;

  bool sandwich_holds = false;
  bool benchmark_sandwich_holds = false;
  bool bound_holds = false;
  bool holds() const { return sandwich_holds && benchmark_sandwich_holds && bound_holds; }
};

/// Throws BudgetExceeded when the irreducible list or the number of products
/// is too large to enumerate, InvalidInput for m = 0 or a context mismatch.
SieveReport verify_sieve_truncation(const Distribution& dist, const PTuple& d, std::size_t m,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace irrlab
