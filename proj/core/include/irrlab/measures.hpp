#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrlab/bigint.hpp"
#include "irrlab/ptuple.hpp"

namespace irrlab {

/// Finitely supported probability measure on Z with exact rational masses.
class Measure {
 public:
  /// Merges repeated points and drops zero masses. Throws InvalidInput on an
  /// empty support, a negative mass, or a total farther than 1e-12 from 1.
  static Measure from_masses(std::vector<std::pair<std::int64_t, Rational>> masses);
  /// Uniform on a, ..., a + N - 1.
  static Measure uniform(std::int64_t a, std::uint64_t n);
  /// "v1:p1,v2:p2,..." with masses written "num/den" or as integers.
  static Measure parse(std::string_view text);

  const std::vector<std::pair<std::int64_t, Rational>>& support() const noexcept { return support_; }
  bool is_uniform_segment() const noexcept { return segment_length_ != 0; }
  std::int64_t segment_start() const noexcept { return segment_start_; }
  std::uint64_t segment_length() const noexcept { return segment_length_; }
  std::string to_string() const;

 private:
  std::vector<std::pair<std::int64_t, Rational>> support_;
  std::vector<double> masses_;
  std::int64_t segment_start_ = 0;
  std::uint64_t segment_length_ = 0;

  friend double fourier_abs(const Measure& mu, double theta);
};

/// |sum_j mu(j) e^{2 i pi theta j}|.
double fourier_abs(const Measure& mu, double theta);

/// sum_{k=0}^{Q-1} fourier_abs(mu, frac(k/Q + theta0))^s.
double fourier_power_sum(const Measure& mu, std::uint64_t q, double theta0, unsigned s);

enum class Outcome { Pass, Fail, Indeterminate };
const char* to_string(Outcome o);

/// A condition counts as passed only when the sum is at most bound - slack,
/// failed when at least bound + slack.
inline constexpr double kConditionSlack = 1e-9;

struct ConditionCase {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t ell = 0;
  std::size_t j = 0;
  double sum = 0.0;
  double bound = 0.0;
  double margin() const { return sum - bound; }
};

struct ConditionReport {
  std::vector<std::uint32_t> primes;
  unsigned s = 0;
  double gamma = 0.0;
  std::uint64_t n = 0;
  /// Largest sum - bound over all checked cases, ties to the smallest
  /// (Q, ell, j).
  ConditionCase worst;
  /// Largest attained sum regardless of its bound.
  ConditionCase max_sum;
  std::uint64_t cases_checked = 0;
  Outcome outcome = Outcome::Indeterminate;
  bool pass() const { return outcome == Outcome::Pass; }
};

inline constexpr std::uint64_t kDefaultMaxR = 1000000;

/// For every j, every Q > 1 dividing P = prod primes with R = P/Q, and every
/// ell in Z/RZ: fourier_power_sum(mu_j, Q, ell/R, s) <= (1 - 1/log n) Q^(1 - gamma).
/// Throws BudgetExceeded when some R exceeds `max_r`, InvalidInput when
/// n < 3, s = 0 or gamma is outside [1/2, 1].
ConditionReport check_master_condition(std::span<const Measure> mus, const PrimeTuple& primes, unsigned s,
                                       std::uint64_t n, double gamma, std::uint64_t max_r = kDefaultMaxR);

struct UnifQCertificate {
  double bound = 0.0;
  double threshold = 0.0;
  bool certified = false;
};

/// 1 + Q (log(Q - 1) + 2) / N against 0.99 sqrt(Q).
UnifQCertificate check_unifQ_certificate(std::uint64_t n_length, std::uint64_t q);

struct UnifQAuditCase {
  std::uint64_t n_length = 0;
  std::uint64_t q = 0;
  double theta0 = 0.0;
  double sum = 0.0;
  double bound = 0.0;
  double excess() const { return sum - bound; }
};

struct UnifQAudit {
  /// Largest sum - bound, ties to the smallest (N, Q, theta0).
  UnifQAuditCase worst;
  std::uint64_t cases_checked = 0;
  /// Cases with sum > bound + slack.
  std::uint64_t violations = 0;
  bool pass() const { return violations == 0; }
};

/// fourier_power_sum(uniform on N points, Q, theta0, 1) against
/// check_unifQ_certificate(N, Q).bound for N in [2, n_max], Q in [2, q_max]
/// and theta0 = g / (grid Q), g < grid. The sum has period 1/Q in theta0, so
/// this grid covers all of R/Z.
UnifQAudit audit_unifQ(std::uint64_t n_max, std::uint64_t q_max, std::uint64_t grid, double slack = kConditionSlack);

/// Smallest s in [1, s_max] for which the condition passes.
std::optional<unsigned> min_s_for_condition(const Measure& mu, const PrimeTuple& primes, std::uint64_t n, double gamma,
                                            unsigned s_max, std::uint64_t max_r = kDefaultMaxR);

}  // namespace irrlab
