#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "irrlab/cyclotomic.hpp"
#include "irrlab/errors.hpp"
#include "irrlab/int_poly.hpp"
#include "irrlab/lab/certify.hpp"
#include "irrlab/lab/degree_set.hpp"
#include "irrlab/lab/experiments.hpp"
#include "irrlab/lab/oracles.hpp"
#include "irrlab/lab/sampler.hpp"
#include "irrlab/lab/stats.hpp"
#include "support/oracles.hpp"

using namespace irrlab;
using namespace irrlab::lab;

namespace {

IntPoly int_poly(const std::vector<std::int64_t>& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(v);
}

oracle::Poly to_oracle(const IntPoly& p) {
  oracle::Poly out;
  for (const auto& c : p.coeffs()) out.push_back(c.convert_to<std::int64_t>());
  return out;
}

// Coefficient vector number `index` of the universe a_j in {0, 1}.
std::vector<std::int64_t> binary_poly(std::size_t n, std::uint64_t index) {
  std::vector<std::int64_t> c(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) c[j] = static_cast<std::int64_t>((index >> j) & 1u);
  c[n] = 1;
  return c;
}

oracle::Poly reduce(const std::vector<std::int64_t>& c, std::int64_t p) {
  oracle::Poly out;
  for (auto v : c) out.push_back(((v % p) + p) % p);
  oracle::trim(out);
  return out;
}

// Whether the attainable degrees of c mod each prime share a value in [lo, hi].
bool common_degree_in(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& primes, std::size_t lo,
                      std::size_t hi) {
  std::vector<int> hits(hi + 1, 0);
  for (auto p : primes) {
    for (auto s : oracle::subset_sums(oracle::factor_degrees_by_trial_division(reduce(c, p), p))) {
      if (s >= lo && s <= hi) ++hits[s];
    }
  }
  for (std::size_t k = lo; k <= hi; ++k) {
    if (hits[k] == static_cast<int>(primes.size())) return true;
  }
  return false;
}

unsigned multiplicity_of_root(oracle::Poly f, std::int64_t root, std::int64_t p) {
  const oracle::Poly lin{(p - root) % p, 1};
  unsigned v = 0;
  while (f.size() > 1 && oracle::rem_mod(f, lin, p).empty()) {
    // Synthetic division by X - root.
    oracle::Poly q(f.size() - 1);
    std::int64_t carry = 0;
    for (std::size_t i = f.size(); i-- > 1;) {
      carry = (f[i] + carry * root) % p;
      q[i - 1] = carry;
    }
    f = q;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("sampler support and determinism") {
  const SamplerConfig cfg{.n = 30, .a = 0, .N = 2, .seed = 11};
  std::vector<std::int64_t> a, b;
  for (std::uint64_t t = 0; t < 200; ++t) {
    sample_coefficients(cfg, t, a);
    sample_coefficients(cfg, t, b);
    CHECK(a == b);
    REQUIRE(a.size() == 31);
    CHECK(a.back() == 1);
    for (std::size_t j = 0; j < 30; ++j) CHECK((a[j] == 0 || a[j] == 1));
  }
  CHECK(sample_poly(cfg, 5) == int_poly([&] {
          sample_coefficients(cfg, 5, a);
          return a;
        }()));
  CHECK_THROWS_AS(validate(SamplerConfig{.n = 0}), InvalidInput);
  CHECK_THROWS_AS(validate(SamplerConfig{.n = 3, .a = 0, .N = 1}), InvalidInput);
  CHECK_THROWS_AS(validate(SamplerConfig{.n = 3, .a = std::int64_t{1} << 41, .N = 2}), InvalidInput);
}

TEST_CASE("sampler mean and range for a wide segment") {
  const SamplerConfig cfg{.n = 10, .a = -3, .N = 7, .seed = 99};
  std::vector<std::int64_t> c;
  double sum = 0.0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> hist(7, 0);
  for (std::uint64_t t = 0; t < 10000; ++t) {
    sample_coefficients(cfg, t, c);
    for (std::size_t j = 0; j < 10; ++j) {
      REQUIRE(c[j] >= -3);
      REQUIRE(c[j] <= 3);
      sum += static_cast<double>(c[j]);
      ++hist[static_cast<std::size_t>(c[j] + 3)];
      ++count;
    }
  }
  const double sigma = std::sqrt((49.0 - 1.0) / 12.0 / static_cast<double>(count));
  CHECK(std::fabs(sum / static_cast<double>(count) - 0.0) < 4.0 * sigma);
  for (auto h : hist) CHECK(h > 0);
}

TEST_CASE("wilson interval") {
  const auto i = wilson_interval(50, 100, kZ95);
  CHECK(i.lo == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(i.hi == doctest::Approx(0.5962).epsilon(1e-3));
  CHECK(wilson_interval(0, 10, kZ95).lo == 0.0);
  CHECK_THROWS_AS(wilson_interval(0, 0, kZ95), InvalidInput);
  CHECK_THROWS_AS(wilson_interval(3, 2, kZ95), InvalidInput);
}

TEST_CASE("attainable_degrees examples") {
  const Prime two(2);
  const auto x = MonicPoly::x(two);
  const auto x1 = MonicPoly::parse(two, "1,1");
  const auto cubic = MonicPoly::parse(two, "1,1,0,1");
  CHECK(attainable_degrees(cubic).to_vector() == std::vector<std::size_t>{0, 3});
  CHECK(attainable_degrees(x * x1 * cubic).to_vector() == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  const auto g = MonicPoly::parse(two, "1,1,1");
  CHECK(attainable_degrees(g * g).to_vector() == std::vector<std::size_t>{0, 2, 4});
  CHECK(attainable_degrees(MonicPoly::one(two)).to_vector() == std::vector<std::size_t>{0});
}

TEST_CASE("property: attainable_degrees matches the trial-division subset sums") {
  oracle::Rng rng(31);
  for (int t = 0; t < 150; ++t) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[rng.below(3)];
    const std::size_t n = 1 + rng.below(9);
    oracle::Poly f(n + 1);
    for (std::size_t j = 0; j < n; ++j) f[j] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p)));
    f[n] = 1;
    const auto mine = attainable_degrees(MonicPoly::from_integers(Prime(static_cast<std::uint64_t>(p)), f));
    CHECK(mine.to_vector() == oracle::subset_sums(oracle::factor_degrees_by_trial_division(f, p)));
    CHECK(mine.contains(0));
    CHECK(mine.contains(n));
  }
}

TEST_CASE("DegreeSet operations") {
  DegreeSet s(130);
  s.insert(0);
  s.add_shifted(3);
  s.add_shifted(64);
  CHECK(s.to_vector() == std::vector<std::size_t>{0, 3, 64, 67});
  s.add_shift_range(60, 70);
  CHECK(s.contains(137) == false);
  CHECK(s.contains(130));
  s.restrict_to(1, 10);
  CHECK(s.to_vector() == std::vector<std::size_t>{3});
  DegreeSet t(130);
  t.insert(4);
  s.intersect_with(t);
  CHECK(s.empty());
}

TEST_CASE("certify examples") {
  const auto primes2 = PrimeTuple::parse("2");
  const auto c1 = certify(int_poly({1, 1, 1}), primes2);
  CHECK(c1.verdict == Verdict::CertifiedIrreducible);
  CHECK(c1.attainable_sets.at(0) == std::vector<std::size_t>{0, 2});

  const auto cx = certify(int_poly({0, 1, 1}), primes2);
  CHECK(cx.verdict == Verdict::ReducibleWitness);
  CHECK(cx.witness->kind == Witness::Kind::X);

  // (X + 1)(X^2 + X + 1)
  const auto a = int_poly({1, 2, 2, 1});
  const auto c2 = certify(a, PrimeTuple::parse("2,3"));
  CHECK(c2.verdict == Verdict::ReducibleWitness);
  CHECK(c2.witness->kind == Witness::Kind::Cyclotomic);
  CHECK(c2.witness->d == 2);
  CHECK(c2.witness->description() == "Phi_2");
  CHECK(witness_divides(a, *c2.witness));

  const auto c3 = certify(a, PrimeTuple::parse("2,3"), CertifyOptions{.cyclotomic_bound = 0});
  CHECK(c3.verdict == Verdict::Unknown);
  CHECK(c3.common_degrees == std::vector<std::size_t>{1});

  CHECK_THROWS_AS(certify(int_poly({1, 1}), primes2), InvalidInput);
  CHECK_THROWS_AS(certify(int_poly({1, 1, 2}), primes2), InvalidInput);
}

TEST_CASE("cyclotomic_divides agrees with exact division") {
  oracle::Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng.below(20);
    std::vector<std::int64_t> c(n + 1);
    for (std::size_t j = 0; j < n; ++j) c[j] = rng.range(-2, 2);
    c[n] = 1;
    const auto a = int_poly(c);
    for (std::uint64_t d = 1; d <= 30; ++d) {
      const bool exact = cyclotomic(d).degree() <= n && int_poly_rem(a, cyclotomic(d)).is_zero();
      CHECK(cyclotomic_divides(std::span<const std::int64_t>(c), d) == exact);
    }
  }
}

TEST_CASE("property: early stopping gives the same verdict as the full route") {
  oracle::Rng rng(1234);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng.below(120);
    std::vector<std::int64_t> c(n + 1);
    const std::int64_t width = 1 + static_cast<std::int64_t>(rng.below(3));
    for (std::size_t j = 0; j < n; ++j) c[j] = rng.range(0, width);
    c[n] = 1;
    const auto primes = PrimeTuple::first(1 + rng.below(5));
    const auto full = certify(std::span<const std::int64_t>(c), primes);
    const auto early = certify(std::span<const std::int64_t>(c), primes, CertifyOptions{.stop_early = true});
    REQUIRE(full.verdict == early.verdict);
    if (full.verdict == Verdict::ReducibleWitness) CHECK(full.witness->d == early.witness->d);
    if (full.verdict == Verdict::Unknown) {
      CHECK_FALSE(early.common_degrees.empty());
      for (auto k : early.common_degrees) {
        CHECK(std::find(full.common_degrees.begin(), full.common_degrees.end(), k) != full.common_degrees.end());
      }
    }
  }
}

TEST_CASE("property: certification is sound on every binary polynomial up to degree 9") {
  const std::vector<std::int64_t> small_primes{2, 3, 5, 7};
  for (std::size_t n = 2; n <= 9; ++n) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
      const auto c = binary_poly(n, idx);
      const auto cert = certify(std::span<const std::int64_t>(c), PrimeTuple::parse("2,3,5,7"));
      if (cert.verdict == Verdict::CertifiedIrreducible) {
        CHECK_FALSE(oracle::smallest_factor_degree(c, n / 2).has_value());
        CHECK_FALSE(common_degree_in(c, small_primes, 1, n / 2));
      } else if (cert.verdict == Verdict::ReducibleWitness) {
        CHECK(oracle::divides_int(to_oracle(cert.witness->divisor()), c));
      } else {
        CHECK(common_degree_in(c, small_primes, 1, n / 2));
      }
    }
  }
}

TEST_CASE("Kronecker oracle finds known factors") {
  // (X^2 + 1)(X^3 - X + 1)
  const oracle::Poly a{1, -1, 1, 0, 0, 1};
  CHECK(oracle::smallest_factor_degree(a, 2) == 2u);
  CHECK_FALSE(oracle::smallest_factor_degree({1, 1, 0, 1}, 1).has_value());
  CHECK(oracle::smallest_factor_degree({-2, 0, 1}, 1) == std::nullopt);
  CHECK(oracle::smallest_factor_degree({-4, 0, 1}, 1) == 1u);
}

TEST_CASE("exact_root_prob examples") {
  CHECK(exact_root_prob(-1, SamplerConfig{.n = 2, .a = 0, .N = 2}) == Rational(1, 4));
  for (std::size_t n : {1u, 5u, 40u}) CHECK(exact_root_prob(1, SamplerConfig{.n = n, .a = 0, .N = 2}) == 0);
  CHECK_THROWS_AS(exact_root_prob(2, SamplerConfig{.n = 2, .a = 0, .N = 2}), InvalidInput);
  CHECK_THROWS_AS(exact_root_prob(-1, SamplerConfig{.n = 1000, .a = 0, .N = 100}, 1000), BudgetExceeded);
}

TEST_CASE("property: DP value law matches enumeration and sums to one") {
  for (const SamplerConfig& cfg : {SamplerConfig{.n = 6, .a = 0, .N = 2}, SamplerConfig{.n = 4, .a = -2, .N = 5},
                                   SamplerConfig{.n = 5, .a = 1, .N = 3}}) {
    for (int x : {1, -1}) {
      const auto dist = evaluation_distribution(x, cfg);
      BigInt sum = 0;
      for (const auto& c : dist.counts) sum += c;
      CHECK(sum == dist.total);
      std::map<std::int64_t, std::uint64_t> brute;
      std::uint64_t total = 1;
      for (std::size_t j = 0; j < cfg.n; ++j) total *= cfg.N;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::int64_t v = 0, pw = 1;
        std::uint64_t rest = idx;
        for (std::size_t j = 0; j < cfg.n; ++j) {
          v += (cfg.a + static_cast<std::int64_t>(rest % cfg.N)) * pw;
          rest /= cfg.N;
          pw *= x;
        }
        ++brute[v + pw];
      }
      CHECK(dist.total == total);
      for (const auto& [v, count] : brute) CHECK(dist.probability(BigInt(v)) == Rational(count, total));
    }
  }
}

TEST_CASE("mc_cyclotomic examples") {
  const auto r1 = mc_cyclotomic(SamplerConfig{.n = 12, .a = 0, .N = 3, .seed = 1}, 1, 5000);
  CHECK(r1.successes == 0);
  CHECK(r1.exact == Rational(0));
  const auto r2 = mc_cyclotomic(SamplerConfig{.n = 2, .a = 0, .N = 2, .seed = 7}, 2, 200000);
  CHECK(r2.exact == Rational(1, 4));
  CHECK(wilson_interval(r2.successes, r2.trials, kZ99).contains(0.25));
  CHECK(r2.estimate == doctest::Approx(static_cast<double>(r2.successes) / 200000.0));
  // phi(15) = 8 > 6
  CHECK(mc_cyclotomic(SamplerConfig{.n = 6, .a = -1, .N = 3, .seed = 3}, 15, 5000).successes == 0);
  CHECK_FALSE(mc_cyclotomic(SamplerConfig{.n = 6, .a = -1, .N = 3, .seed = 3}, 3, 100).exact.has_value());
}

TEST_CASE("mc_factor_in_range against the exhaustive binary universe") {
  const std::size_t n = 10;
  std::uint64_t hits = 0;
  for (std::uint64_t idx = 0; idx < 1024; ++idx) hits += common_degree_in(binary_poly(n, idx), {2}, 1, 5) ? 1 : 0;
  const double exact = static_cast<double>(hits) / 1024.0;
  const auto rep = mc_factor_in_range(SamplerConfig{.n = n, .a = 0, .N = 2, .seed = 5}, PrimeTuple::parse("2"), 1, 5,
                                      40000);
  CHECK(rep.estimate_is_upper_bound);
  CHECK(wilson_interval(rep.successes, rep.trials, kZ99).contains(exact));
  CHECK_THROWS_AS(mc_factor_in_range(SamplerConfig{.n = n, .N = 2}, PrimeTuple::parse("2"), 0, 5, 10), InvalidInput);
  CHECK_THROWS_AS(mc_factor_in_range(SamplerConfig{.n = n, .N = 2}, PrimeTuple::parse("2"), 3, 11, 10), InvalidInput);
}

TEST_CASE("property: mc_factor_in_range shrinks with primes and grows with width") {
  const SamplerConfig cfg{.n = 24, .a = -1, .N = 3, .seed = 8};
  std::uint64_t prev = ~std::uint64_t{0};
  for (std::size_t r = 1; r <= 5; ++r) {
    const auto rep = mc_factor_in_range(cfg, PrimeTuple::first(r), 1, 12, 3000);
    CHECK(rep.successes <= prev);
    prev = rep.successes;
  }
  std::uint64_t last = 0;
  for (std::size_t hi = 1; hi <= 12; ++hi) {
    const auto rep = mc_factor_in_range(cfg, PrimeTuple::parse("2,3"), 1, hi, 3000);
    CHECK(rep.successes >= last);
    last = rep.successes;
  }
}

TEST_CASE("em_statistics m = 1 over (2, 3) against direct root counting") {
  const SamplerConfig cfg{.n = 20, .a = -2, .N = 5, .seed = 42};
  const std::uint64_t trials = 600;
  const auto rep = em_statistics(cfg, PrimeTuple::parse("2,3"), 1, trials);
  std::map<std::size_t, std::uint64_t> deg_hist, omega_hist;
  std::vector<std::int64_t> c;
  for (std::uint64_t t = 0; t < trials; ++t) {
    sample_coefficients(cfg, t, c);
    const unsigned v2 = multiplicity_of_root(reduce(c, 2), 1, 2);
    const unsigned v3a = multiplicity_of_root(reduce(c, 3), 2, 3);  // X + 1
    const unsigned v3b = multiplicity_of_root(reduce(c, 3), 1, 3);  // X + 2
    ++deg_hist[v2 + v3a + v3b];
    ++omega_hist[(v2 > 0) + (v3a > 0) + (v3b > 0)];
  }
  CHECK(rep.deg_friable == deg_hist);
  CHECK(rep.omega_friable == omega_hist);
  CHECK(rep.trials == trials);
  CHECK(rep.sigma_m == doctest::Approx(0.5 + 2.0 / 3.0));
  // Sigma_1 < 2 makes the degree threshold negative, so E_1 never holds.
  CHECK(rep.em_failures == trials);
}

TEST_CASE("em_statistics: X powers and failure frequency") {
  const SamplerConfig cfg{.n = 30, .a = 0, .N = 2, .seed = 4};
  const auto rep = em_statistics(cfg, PrimeTuple::parse("2,3,5,7"), 6, 2000);
  REQUIRE(rep.x_power_counts.size() == 4);
  for (const auto& row : rep.x_power_counts) {
    REQUIRE(row.size() == kMaxReportedXPower);
    for (std::size_t v = 1; v < row.size(); ++v) CHECK(row[v] <= row[v - 1]);
  }
  // X | A mod p exactly when a_0 = 0, for every p.
  CHECK(rep.x_power_counts[0][0] == rep.x_power_counts[3][0]);
  CHECK(rep.em_failure_ci_95.contains(rep.em_failure_frequency));
}

TEST_CASE("delta_A_bruteforce by hand for n = 1") {
  const auto two = PrimeTuple::parse("2");
  // P(X + 1 | A) = P(a_0 odd).
  CHECK(delta_A_bruteforce(SamplerConfig{.n = 1, .a = 0, .N = 2}, two, 1) == 0);
  CHECK(delta_A_bruteforce(SamplerConfig{.n = 1, .a = 0, .N = 3}, two, 1) == Rational(1, 6));
  CHECK(delta_A_bruteforce(SamplerConfig{.n = 1, .a = 0, .N = 5}, two, 1) == Rational(1, 10));
  CHECK(delta_A_bruteforce(SamplerConfig{.n = 1, .a = 1, .N = 5}, two, 1) == Rational(1, 10));
  CHECK(delta_A_bruteforce(SamplerConfig{.n = 3, .a = 0, .N = 3}, two, 0) == 0);
  CHECK_THROWS_AS(delta_A_bruteforce(SamplerConfig{.n = 30, .a = 0, .N = 2}, two, 1, 1000), BudgetExceeded);
}

TEST_CASE("delta_A_bruteforce: uniform mod P beats a non-divisible segment") {
  const auto primes = PrimeTuple::parse("2,3");
  for (std::size_t m = 1; m <= 2; ++m) {
    const Rational uniform = delta_A_bruteforce(SamplerConfig{.n = 3, .a = 0, .N = 6}, primes, m);
    const Rational skewed = delta_A_bruteforce(SamplerConfig{.n = 3, .a = 0, .N = 5}, primes, m);
    CHECK(uniform == 0);
    CHECK(uniform < skewed);
  }
}

TEST_CASE("reproducibility across worker counts") {
  const SamplerConfig cfg{.n = 40, .a = -1, .N = 3, .seed = 2024};
  const auto a = mc_cyclotomic(cfg, 2, 3000, RunOptions{1});
  const auto b = mc_cyclotomic(cfg, 2, 3000, RunOptions{3});
  CHECK(a.successes == b.successes);
  const auto f1 = mc_factor_in_range(cfg, PrimeTuple::parse("2,3"), 1, 20, 2000, RunOptions{1});
  const auto f4 = mc_factor_in_range(cfg, PrimeTuple::parse("2,3"), 1, 20, 2000, RunOptions{4});
  CHECK(f1.successes == f4.successes);
  const auto e1 = em_statistics(cfg, PrimeTuple::parse("2,3,5"), 3, 1000, RunOptions{1});
  const auto e2 = em_statistics(cfg, PrimeTuple::parse("2,3,5"), 3, 1000, RunOptions{2});
  CHECK(e1.tau_friable == e2.tau_friable);
  CHECK(e1.x_power_counts == e2.x_power_counts);
  CHECK(e1.median_log2_tau == e2.median_log2_tau);
}

TEST_CASE("sweep rows are consistent and reproducible") {
  const SamplerConfig cfg{.a = 0, .N = 2, .seed = 77};
  const auto primes = PrimeTuple::parse("2,3,5,7");
  const auto s1 = sweep_irreducibility(cfg, {10, 24}, primes, 600, 16, RunOptions{1});
  const auto s2 = sweep_irreducibility(cfg, {10, 24}, primes, 600, 16, RunOptions{3});
  REQUIRE(s1.rows.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& row = s1.rows[i];
    std::uint64_t cyc = 0;
    for (const auto& [d, count] : row.witness_cyclotomic) cyc += count;
    CHECK(row.certified + row.unknown + row.witness_x + cyc == row.trials);
    CHECK(row.residual == row.trials - row.certified - row.witness_x);
    CHECK(row.exact_a0_zero == Rational(1, 2));
    CHECK(row.exact_phi1 == 0);
    CHECK(row.phi1_divides == 0);
    CHECK(row.exact_phi2 == exact_root_prob(-1, SamplerConfig{.n = row.n, .a = 0, .N = 2}));
    CHECK(row.ci_99.contains(row.estimate));
    CHECK(row.certified == s2.rows[i].certified);
    CHECK(row.unknown == s2.rows[i].unknown);
    CHECK(row.witness_cyclotomic == s2.rows[i].witness_cyclotomic);
    CHECK(row.phi2_divides == s2.rows[i].phi2_divides);
  }
}
