#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irrlab/bigint.hpp"
#include "irrlab/lab/sampler.hpp"
#include "irrlab/lab/stats.hpp"
#include "irrlab/ptuple.hpp"

namespace irrlab::lab {

/// Worker count for Monte Carlo runs. Counts do not depend on it.
struct RunOptions {
  /// 0 means one worker per hardware thread.
  unsigned jobs = 1;
};

std::string version();

struct ExperimentReport {
  std::string experiment;
  SamplerConfig config;
  /// Experiment parameters beyond the sampler, as printable text.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0.0;
  Interval wilson_ci_95;
  /// The event counted is implied by the quantity of interest, so the
  /// estimate bounds it from above.
  bool estimate_is_upper_bound = false;
  /// Exact probability of the counted event when an oracle covers it.
  std::optional<Rational> exact;
  std::vector<std::pair<std::string, double>> diagnostics;
  double wall_time = 0.0;
  std::string version;
};

/// Frequency of Phi_d | A, by exact remainder. For d = 1, 2 the exact
/// probability P(A(1) = 0) or P(A(-1) = 0) is attached.
ExperimentReport mc_cyclotomic(const SamplerConfig& cfg, std::uint64_t d, std::uint64_t trials,
                               const RunOptions& run = {});

/// Frequency of the necessary condition for a factor with degree in
/// [n1, n2]: some degree in that range is attainable modulo every prime.
/// Throws InvalidInput unless 1 <= n1 <= n2 <= n.
ExperimentReport mc_factor_in_range(const SamplerConfig& cfg, const PrimeTuple& primes, std::size_t n1,
                                    std::size_t n2, std::uint64_t trials, const RunOptions& run = {});

struct EmReport {
  SamplerConfig config;
  std::vector<std::uint32_t> primes;
  std::size_t m = 0;
  std::uint64_t trials = 0;
  double sigma_m = 0.0;
  /// m (Sigma_m - 2)
  double degree_threshold = 0.0;
  /// (1 - 1/r) Sigma_m
  double log_tau_threshold = 0.0;
  /// Histograms over trials of Deg A_{<=m}, omega(A_{<=m}) and tau(A_{<=m}).
  std::map<std::size_t, std::uint64_t> deg_friable;
  std::map<std::size_t, std::uint64_t> omega_friable;
  std::map<BigInt, std::uint64_t> tau_friable;
  /// Trials outside E_m.
  std::uint64_t em_failures = 0;
  double em_failure_frequency = 0.0;
  Interval em_failure_ci_95;
  double median_log2_tau = 0.0;
  /// x_power_counts[i][v - 1] counts the trials with X^v | A mod p_i.
  std::vector<std::vector<std::uint64_t>> x_power_counts;
  double wall_time = 0.0;
  std::string version;
};

inline constexpr unsigned kMaxReportedXPower = 8;

/// Friable-part statistics of A_P = (A mod p_1, ..., A mod p_r).
EmReport em_statistics(const SamplerConfig& cfg, const PrimeTuple& primes, std::size_t m, std::uint64_t trials,
                       const RunOptions& run = {});

/// Exact Delta_{A_P}(m) over all N^n coefficient vectors. Throws
/// BudgetExceeded when N^n > budget.
Rational delta_A_bruteforce(const SamplerConfig& cfg, const PrimeTuple& primes, std::size_t m,
                            std::uint64_t budget = std::uint64_t{1} << 24);

struct SweepRow {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t certified = 0;
  std::uint64_t unknown = 0;
  std::uint64_t witness_x = 0;
  /// Cyclotomic witnesses by index d, in the order they are tried.
  std::map<std::uint64_t, std::uint64_t> witness_cyclotomic;
  /// Trials with Phi_1 | A and with Phi_2 | A, whatever the verdict.
  std::uint64_t phi1_divides = 0;
  std::uint64_t phi2_divides = 0;
  Rational exact_a0_zero;
  Rational exact_phi1;
  Rational exact_phi2;
  /// Trials neither certified nor divisible by X; their frequency estimates
  /// P(not certified) - P(a_0 = 0).
  std::uint64_t residual = 0;
  double estimate = 0.0;
  Interval ci_95;
  Interval ci_99;
};

struct SweepReport {
  SamplerConfig config;
  std::vector<std::uint32_t> primes;
  std::uint64_t cyclotomic_bound = 16;
  std::vector<SweepRow> rows;
  double wall_time = 0.0;
  std::string version;
};

/// certify() on `trials` samples for each degree in `degrees`; the sampler
/// degree in `cfg` is ignored.
SweepReport sweep_irreducibility(const SamplerConfig& cfg, const std::vector<std::size_t>& degrees,
                                 const PrimeTuple& primes, std::uint64_t trials, std::uint64_t cyclotomic_bound = 16,
                                 const RunOptions& run = {});

}  // namespace irrlab::lab
