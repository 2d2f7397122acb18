#include "irrlab/lab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "irrlab/cyclotomic.hpp"
#include "irrlab/errors.hpp"
#include "irrlab/lab/certify.hpp"
#include "irrlab/lab/degree_set.hpp"
#include "irrlab/lab/oracles.hpp"
#include "irrlab/pspace.hpp"

namespace irrlab::lab {

namespace {

constexpr std::uint64_t kChunk = 256;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

unsigned worker_count(const RunOptions& run, std::uint64_t trials) {
  unsigned jobs = run.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : run.jobs;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  return static_cast<unsigned>(std::clamp<std::uint64_t>(chunks, 1, jobs));
}

// Runs body(acc, trial) for every trial. Each worker owns an accumulator and
// claims chunks of trials; the accumulators are merged with +=, which must be
// commutative so the result does not depend on scheduling.
template <class Acc, class Body>
Acc run_trials(std::uint64_t trials, const RunOptions& run, const Acc& zero, Body body) {
  const unsigned workers = worker_count(run, trials);
  std::vector<Acc> partial(workers, zero);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](unsigned w) {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= trials) return;
        const std::uint64_t end = std::min(trials, begin + kChunk);
        for (std::uint64_t t = begin; t < end; ++t) body(partial[w], t);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(trials);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  Acc total = zero;
  for (const auto& p : partial) total += p;
  return total;
}

struct Count {
  std::uint64_t hits = 0;
  Count& operator+=(const Count& o) {
    hits += o.hits;
    return *this;
  }
};

template <class K>
void merge_counts(std::map<K, std::uint64_t>& into, const std::map<K, std::uint64_t>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

ExperimentReport make_report(std::string name, const SamplerConfig& cfg, std::uint64_t trials, std::uint64_t hits) {
  ExperimentReport r;
  r.experiment = std::move(name);
  r.config = cfg;
  r.trials = trials;
  r.successes = hits;
  r.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  r.wilson_ci_95 = wilson_interval(hits, trials, kZ95);
  r.version = version();
  return r;
}

std::vector<std::uint32_t> prime_values(const PrimeTuple& primes) {
  std::vector<std::uint32_t> v;
  for (const auto& p : primes.primes()) v.push_back(static_cast<std::uint32_t>(p.value()));
  return v;
}

PTuple reduce_all(const PrimeTuple& primes, std::span<const std::int64_t> coeffs) {
  std::vector<MonicPoly> comps;
  comps.reserve(primes.size());
  for (const auto& p : primes.primes()) comps.push_back(MonicPoly::from_integers(p, coeffs));
  return PTuple(primes, std::move(comps));
}

Rational a0_zero_probability(const SamplerConfig& cfg) {
  const std::int64_t hi = cfg.a + static_cast<std::int64_t>(cfg.N) - 1;
  return Rational(cfg.a <= 0 && 0 <= hi ? 1 : 0, cfg.N);
}

// A(1) = 0 or A(-1) = 0, evaluated in 128 bits; coefficients are bounded by
// 2^40, so n up to 2^80 terms stay exact.
bool vanishes_at(std::span<const std::int64_t> coeffs, int x) {
  __int128 acc = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    acc += (x < 0 && j % 2 == 1) ? -static_cast<__int128>(coeffs[j]) : static_cast<__int128>(coeffs[j]);
  }
  return acc == 0;
}

}  // namespace

std::string version() { return IRRLAB_VERSION; }

ExperimentReport mc_cyclotomic(const SamplerConfig& cfg, std::uint64_t d, std::uint64_t trials, const RunOptions& run) {
  validate(cfg);
  if (d == 0) throw InvalidInput("cyclotomic index must be >= 1");
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  const Stopwatch clock;
  const std::uint64_t phi = euler_phi(d);
  const Count c = run_trials(trials, run, Count{}, [&](Count& acc, std::uint64_t t) {
    if (phi > cfg.n) return;
    thread_local std::vector<std::int64_t> coeffs;
    sample_coefficients(cfg, t, coeffs);
    if (cyclotomic_divides(std::span<const std::int64_t>(coeffs), d)) ++acc.hits;
  });
  ExperimentReport r = make_report("mc-cyclotomic", cfg, trials, c.hits);
  r.parameters = {{"d", std::to_string(d)}};
  if (d <= 2) r.exact = exact_root_prob(d == 1 ? 1 : -1, cfg);
  const double n = static_cast<double>(cfg.n);
  r.diagnostics = {{"phi_d", static_cast<double>(phi)},
                   {"bound_exponent", static_cast<double>(phi) / 2.0},
                   {"bound_base_over_K", std::min(1.0, static_cast<double>(d) / n)}};
  r.wall_time = clock.seconds();
  return r;
}

ExperimentReport mc_factor_in_range(const SamplerConfig& cfg, const PrimeTuple& primes, std::size_t n1,
                                    std::size_t n2, std::uint64_t trials, const RunOptions& run) {
  validate(cfg);
  if (n1 < 1 || n1 > n2 || n2 > cfg.n) throw InvalidInput("need 1 <= n1 <= n2 <= n");
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  const Stopwatch clock;
  const Count c = run_trials(trials, run, Count{}, [&](Count& acc, std::uint64_t t) {
    thread_local std::vector<std::int64_t> coeffs;
    sample_coefficients(cfg, t, coeffs);
    DegreeSet common(cfg.n);
    for (std::size_t v = n1; v <= n2; ++v) common.insert(v);
    for (const auto& p : primes.primes()) {
      common.intersect_with(attainable_degrees(MonicPoly::from_integers(p, coeffs)));
      if (common.empty()) return;
    }
    ++acc.hits;
  });
  ExperimentReport r = make_report("mc-factor-range", cfg, trials, c.hits);
  r.parameters = {{"primes", primes.to_string()}, {"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}};
  r.estimate_is_upper_bound = true;
  r.wall_time = clock.seconds();
  return r;
}

namespace {

struct EmAcc {
  std::map<std::size_t, std::uint64_t> deg;
  std::map<std::size_t, std::uint64_t> omega;
  std::map<BigInt, std::uint64_t> tau;
  std::uint64_t failures = 0;
  std::vector<std::vector<std::uint64_t>> x_powers;

  EmAcc& operator+=(const EmAcc& o) {
    merge_counts(deg, o.deg);
    merge_counts(omega, o.omega);
    merge_counts(tau, o.tau);
    failures += o.failures;
    for (std::size_t i = 0; i < x_powers.size(); ++i) {
      for (std::size_t v = 0; v < x_powers[i].size(); ++v) x_powers[i][v] += o.x_powers[i][v];
    }
    return *this;
  }
};

}  // namespace

EmReport em_statistics(const SamplerConfig& cfg, const PrimeTuple& primes, std::size_t m, std::uint64_t trials,
                       const RunOptions& run) {
  validate(cfg);
  if (m == 0) throw InvalidInput("m must be >= 1");
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  const Stopwatch clock;
  EmAcc zero;
  zero.x_powers.assign(primes.size(), std::vector<std::uint64_t>(kMaxReportedXPower, 0));
  const EmAcc acc = run_trials(trials, run, zero, [&](EmAcc& a, std::uint64_t t) {
    thread_local std::vector<std::int64_t> coeffs;
    sample_coefficients(cfg, t, coeffs);
    const PTuple ap = reduce_all(primes, coeffs);
    const EmEvaluation ev = event_Em(ap, m);
    ++a.deg[ev.profile.total_deg_friable];
    ++a.omega[ev.profile.omega_friable];
    ++a.tau[ev.profile.tau_friable];
    if (!ev.holds) ++a.failures;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      std::size_t v = 0;
      while (v < coeffs.size() - 1 && coeffs[v] % static_cast<std::int64_t>(primes[i].value()) == 0) ++v;
      for (std::size_t k = 0; k < std::min<std::size_t>(v, kMaxReportedXPower); ++k) ++a.x_powers[i][k];
    }
  });
  EmReport r;
  r.config = cfg;
  r.primes = prime_values(primes);
  r.m = m;
  r.trials = trials;
  r.sigma_m = sigma_m(primes, m);
  const double rr = static_cast<double>(primes.size());
  r.degree_threshold = static_cast<double>(m) * (r.sigma_m - 2.0);
  r.log_tau_threshold = (1.0 - 1.0 / rr) * r.sigma_m;
  r.deg_friable = acc.deg;
  r.omega_friable = acc.omega;
  r.tau_friable = acc.tau;
  r.em_failures = acc.failures;
  r.em_failure_frequency = static_cast<double>(acc.failures) / static_cast<double>(trials);
  r.em_failure_ci_95 = wilson_interval(acc.failures, trials, kZ95);
  // Lower median of the tau histogram.
  std::uint64_t seen = 0;
  for (const auto& [tau, count] : acc.tau) {
    seen += count;
    if (2 * seen >= trials) {
      r.median_log2_tau = std::log2(tau.convert_to<double>());
      break;
    }
  }
  r.x_power_counts = acc.x_powers;
  r.wall_time = clock.seconds();
  r.version = version();
  return r;
}

Rational delta_A_bruteforce(const SamplerConfig& cfg, const PrimeTuple& primes, std::size_t m, std::uint64_t budget) {
  validate(cfg);
  BigInt size = 1;
  for (std::size_t j = 0; j < cfg.n; ++j) {
    size *= cfg.N;
    if (size > budget) {
      throw BudgetExceeded("N^n = " + std::to_string(cfg.N) + "^" + std::to_string(cfg.n) + " exceeds budget " +
                           std::to_string(budget));
    }
  }
  if (m == 0) return Rational(0);
  const std::uint64_t total = size.convert_to<std::uint64_t>();
  std::map<PTuple, std::uint64_t> law;
  std::vector<std::int64_t> coeffs(cfg.n + 1, cfg.a);
  coeffs[cfg.n] = 1;
  std::vector<std::uint64_t> digits(cfg.n, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    ++law[reduce_all(primes, coeffs)];
    for (std::size_t j = 0; j < cfg.n; ++j) {
      if (++digits[j] < cfg.N) {
        ++coeffs[j];
        break;
      }
      digits[j] = 0;
      coeffs[j] = cfg.a;
    }
  }
  std::vector<WeightedTuple> atoms;
  atoms.reserve(law.size());
  for (auto& [tuple, count] : law) atoms.push_back({tuple, Rational(count, total)});
  return delta_spread(Distribution(std::move(atoms)), m, budget);
}

namespace {

struct SweepAcc {
  std::uint64_t certified = 0;
  std::uint64_t unknown = 0;
  std::uint64_t witness_x = 0;
  std::map<std::uint64_t, std::uint64_t> witness_cyclotomic;
  std::uint64_t phi1 = 0;
  std::uint64_t phi2 = 0;

  SweepAcc& operator+=(const SweepAcc& o) {
    certified += o.certified;
    unknown += o.unknown;
    witness_x += o.witness_x;
    merge_counts(witness_cyclotomic, o.witness_cyclotomic);
    phi1 += o.phi1;
    phi2 += o.phi2;
    return *this;
  }
};

}  // namespace

SweepReport sweep_irreducibility(const SamplerConfig& cfg, const std::vector<std::size_t>& degrees,
                                 const PrimeTuple& primes, std::uint64_t trials, std::uint64_t cyclotomic_bound,
                                 const RunOptions& run) {
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  if (degrees.empty()) throw InvalidInput("no degrees to sweep");
  const Stopwatch clock;
  SweepReport report;
  report.config = cfg;
  report.primes = prime_values(primes);
  report.cyclotomic_bound = cyclotomic_bound;
  CertifyOptions opts;
  opts.cyclotomic_bound = cyclotomic_bound;
  opts.stop_early = true;
  for (std::size_t n : degrees) {
    SamplerConfig c = cfg;
    c.n = n;
    validate(c);
    if (n < 2) throw InvalidInput("sweep degrees must be >= 2");
    const SweepAcc acc = run_trials(trials, run, SweepAcc{}, [&](SweepAcc& a, std::uint64_t t) {
      thread_local std::vector<std::int64_t> coeffs;
      sample_coefficients(c, t, coeffs);
      const std::span<const std::int64_t> view(coeffs);
      if (vanishes_at(view, 1)) ++a.phi1;
      if (vanishes_at(view, -1)) ++a.phi2;
      const Certificate cert = certify(view, primes, opts);
      switch (cert.verdict) {
        case Verdict::CertifiedIrreducible: ++a.certified; break;
        case Verdict::Unknown: ++a.unknown; break;
        case Verdict::ReducibleWitness:
          if (cert.witness->kind == Witness::Kind::X) {
            ++a.witness_x;
          } else {
            ++a.witness_cyclotomic[cert.witness->d];
          }
          break;
      }
    });
    SweepRow row;
    row.n = n;
    row.trials = trials;
    row.certified = acc.certified;
    row.unknown = acc.unknown;
    row.witness_x = acc.witness_x;
    row.witness_cyclotomic = acc.witness_cyclotomic;
    row.phi1_divides = acc.phi1;
    row.phi2_divides = acc.phi2;
    row.exact_a0_zero = a0_zero_probability(c);
    row.exact_phi1 = exact_root_prob(1, c);
    row.exact_phi2 = exact_root_prob(-1, c);
    row.residual = trials - acc.certified - acc.witness_x;
    row.estimate = static_cast<double>(row.residual) / static_cast<double>(trials);
    row.ci_95 = wilson_interval(row.residual, trials, kZ95);
    row.ci_99 = wilson_interval(row.residual, trials, kZ99);
    report.rows.push_back(std::move(row));
  }
  report.wall_time = clock.seconds();
  report.version = version();
  return report;
}

}  // namespace irrlab::lab
