// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "irrlab/constants.hpp"
#include "irrlab/int_poly.hpp"
#include "irrlab/lab/certify.hpp"
#include "irrlab/lab/experiments.hpp"
#include "irrlab/lab/oracles.hpp"
#include "irrlab/lab/stats.hpp"
#include "irrlab/measures.hpp"
#include "irrlab/pspace.hpp"
#include "irrlab/sieve.hpp"
#include "support/oracles.hpp"

using namespace irrlab;
using nlohmann::json;

namespace {

struct Check {
  bool pass = false;
  std::string detail;
};

json run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != 0) throw std::runtime_error("irrlab exited with " + std::to_string(code) + ": " + err.str());
  return json::parse(out.str());
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// 1
Check constants_reproduction() {
  const json half = run_cli({"constants", "--C", "0.5"})["result"];
  const json small = run_cli({"constants", "--C", "0.01"})["result"];
  const double e12 = half["exponent"].get<double>();
  const double f12 = half["f_P"].get<double>();
  const double e4 = small["exponent"].get<double>();
  const bool ok = half["r"] == 12 && half["P"] == 7420738134810ULL && e12 >= 0.56 && e12 <= 0.57 && f12 <= 1e8 &&
                  small["r"] == 4 && e4 > 0.01;
  return {ok, fmt("exponent(12)=%.9f f(P)=%.3f exponent(4)=%.9f", e12, f12, e4)};
}

// 2
Check unifq_audit() {
  const UnifQAudit a = audit_unifQ(64, 60, 1000);
  return {a.pass() && a.cases_checked == 63ull * 59ull * 1000ull,
          fmt("cases=%.0f violations=%.0f worst excess=%.9f", static_cast<double>(a.cases_checked),
              static_cast<double>(a.violations), a.worst.excess())};
}

// 3
Check pi_m_audit() {
  std::uint64_t checks = 0, bad = 0;
  for (const char* set : {"2", "2,3", "2,3,5", "2,3,5,7"}) {
    const auto ctx = PrimeTuple::parse(set);
    const double r = static_cast<double>(ctx.size());
    for (std::size_t m = 2; m <= 200; ++m) {
      const double lm = std::log(static_cast<double>(m));
      const double sig = sigma_m(ctx, m);
      const double lpi = log_pi_m(ctx, m);
      checks += 3;
      bad += !(r * (lm - 2.0) <= sig) + !(sig <= r * (lm + 1.0)) + !(lpi <= 2.0 * r - r * lm);
    }
  }
  return {bad == 0, fmt("checks=%.0f failures=%.0f", static_cast<double>(checks), static_cast<double>(bad))};
}

// 4
Check uniform_delta_zero() {
  const auto ctx = PrimeTuple::parse("2,3");
  std::uint64_t cases = 0, nonzero = 0;
  for (std::size_t d0 = 0; d0 <= 4; ++d0) {
    for (std::size_t d1 = 0; d1 <= 3; ++d1) {
      const auto dist = Distribution::uniform(ctx, DegreeVec{d0, d1});
      for (std::size_t m = 0; m <= std::min(d0, d1); ++m) {
        ++cases;
        if (delta_spread(dist, m) != 0) ++nonzero;
      }
    }
  }
  return {nonzero == 0, fmt("cases=%.0f nonzero=%.0f", static_cast<double>(cases), static_cast<double>(nonzero))};
}

// 5
Check sieve_sandwich() {
  std::uint64_t instances = 0, failures = 0;
  auto check = [&](const Distribution& dist, const PTuple& d, std::size_t m) {
    ++instances;
    if (!verify_sieve_truncation(dist, d, m).holds()) ++failures;
  };
  oracle::Rng rng(5);
  for (const char* set : {"2", "3", "2,3"}) {
    const auto ctx = PrimeTuple::parse(set);
    std::vector<DegreeVec> degs;
    if (ctx.size() == 1) {
      for (std::size_t a = 1; a <= 8; ++a) degs.push_back({a});
    } else {
      for (std::size_t a = 1; a <= 5; ++a) {
        for (std::size_t b = 1; a + b <= 8 && b <= 4; ++b) degs.push_back({a, b});
      }
    }
    // Divisors: the unit and every X-free linear tuple in one slot.
    std::vector<PTuple> divisors{PTuple::unit(ctx)};
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      for (std::uint32_t c = 1; c < ctx[i].value(); ++c) {
        divisors.push_back(PTuple::embed(ctx, i, MonicPoly::from_residues(ctx[i], {c, 1})));
      }
    }
    for (const auto& d : degs) {
      const auto space = enumerate_space(ctx, d);
      const auto uniform = Distribution::uniform(ctx, d);
      // A skewed law on the same class: random integer weights on a random subset.
      std::vector<WeightedTuple> atoms;
      std::uint64_t total = 0;
      std::vector<std::uint64_t> w;
      for (std::size_t k = 0; k < std::min<std::size_t>(space.size(), 40); ++k) total += w.emplace_back(1 + rng.below(5));
      for (std::size_t k = 0; k < w.size(); ++k) atoms.push_back({space[rng.below(space.size())], Rational(w[k], total)});
      const Distribution skewed(atoms);
      for (std::size_t m : {1, 2}) {
        for (const auto& dv : divisors) {
          check(uniform, dv, m);
          check(skewed, dv, m);
        }
      }
    }
  }
  return {failures == 0 && instances >= 50,
          fmt("instances=%.0f failures=%.0f", static_cast<double>(instances), static_cast<double>(failures))};
}

// 6. Frozen from the exact values 0.770690, 0.790927, 0.796135, 0.797446.
constexpr double kRateWindowLo = 0.770;
constexpr double kRateWindowHi = 0.798;

Check root_rate() {
  bool ok = kRateWindowHi / kRateWindowLo <= 1.25;
  std::string detail;
  for (std::size_t n : {64, 256, 1024, 4096}) {
    const Rational p = lab::exact_root_prob(-1, lab::SamplerConfig{.n = n, .a = 0, .N = 2});
    // A(-1) = 0 needs one more 1 at odd positions than at even ones: C(n, n/2 + 1) vectors.
    BigInt binom = 1;
    for (std::size_t i = 0; i < n / 2 - 1; ++i) binom = binom * (n - i) / (i + 1);
    const bool exact_ok = p == Rational(binom, BigInt(1) << n);
    const double v = std::sqrt(static_cast<double>(n)) * to_double(p);
    ok = ok && exact_ok && v >= kRateWindowLo && v <= kRateWindowHi;
    detail += fmt("n=%.0f:%.6f ", static_cast<double>(n), v);
  }
  return {ok, detail + fmt("window=[%.3f, %.3f]", kRateWindowLo, kRateWindowHi)};
}

// 7
Check mc_vs_exact() {
  const json r = run_cli({"mc-cyclotomic", "--n", "2", "--a", "0", "--N", "2", "--d", "2", "--trials", "1000000",
                          "--seed", "1", "--jobs", "0"})["result"];
  const auto hits = r["successes"].get<std::uint64_t>();
  const auto ci = lab::wilson_interval(hits, 1000000, lab::kZ99);
  return {ci.contains(0.25), fmt("estimate=%.6f ci99=[%.6f, %.6f]", r["estimate"].get<double>(), ci.lo, ci.hi)};
}

// 8
Check soundness() {
  const std::size_t n = 10;
  std::uint64_t certified = 0, witnesses = 0, unknown = 0, bad = 0;
  const auto primes = PrimeTuple::first(4);
  for (std::uint64_t idx = 0; idx < (1u << n); ++idx) {
    std::vector<std::int64_t> c(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) c[j] = static_cast<std::int64_t>((idx >> j) & 1u);
    c[n] = 1;
    const auto cert = lab::certify(std::span<const std::int64_t>(c), primes);
    if (cert.verdict == lab::Verdict::CertifiedIrreducible) {
      ++certified;
      if (oracle::smallest_factor_degree(c, n / 2)) ++bad;
    } else if (cert.verdict == lab::Verdict::ReducibleWitness) {
      ++witnesses;
      oracle::Poly divisor;
      const IntPoly w = cert.witness->divisor();
      for (const auto& v : w.coeffs()) divisor.push_back(v.convert_to<std::int64_t>());
      if (!oracle::divides_int(divisor, c)) ++bad;
    } else {
      ++unknown;
    }
  }
  return {bad == 0, fmt("certified=%.0f witnesses=%.0f unknown=%.0f", static_cast<double>(certified),
                        static_cast<double>(witnesses), static_cast<double>(unknown)) +
                        fmt(" violations=%.0f", static_cast<double>(bad))};
}

// 9
Check reproducibility() {
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> runs{
      {{"mc-cyclotomic", "--n", "40", "--a", "-1", "--N", "3", "--d", "2", "--trials", "20000", "--seed", "3"},
       {"successes"}},
      {{"mc-factor-range", "--n", "30", "--primes", "2,3,5", "--n1", "1", "--n2", "15", "--trials", "5000", "--seed",
        "4"},
       {"successes"}},
      {{"em-stats", "--n", "40", "--primes", "2,3,5,7", "--m", "1,3,6", "--trials", "3000", "--seed", "5"}, {}},
      {{"sweep-irreducibility", "--ns", "30,60", "--trials", "2000", "--seed", "6"}, {}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [args, keys] : runs) {
    auto a1 = args, a4 = args;
    a1.insert(a1.end(), {"--jobs", "1"});
    a4.insert(a4.end(), {"--jobs", "4"});
    json r1 = run_cli(a1)["result"], r4 = run_cli(a4)["result"];
    bool same = true;
    for (const auto& k : keys) same = same && r1[k] == r4[k];
    // Every count in the report, wall time aside.
    for (json* r : {&r1, &r4}) {
      r->erase("wall_time");
      if (r->contains("reports")) {
        for (auto& e : (*r)["reports"]) e.erase("wall_time");
      }
    }
    same = same && r1 == r4;
    ok = ok && same;
    detail += args.front() + (same ? ":same " : ":DIFFERENT ");
  }
  return {ok, detail};
}

// 10
Check irreducibility_trend() {
  const auto rep = lab::sweep_irreducibility(lab::SamplerConfig{.a = 0, .N = 2, .seed = 2026}, {50, 100, 200, 400},
                                             PrimeTuple::first(4), 100000, 16, lab::RunOptions{0});
  bool monotone = true, tracks = true;
  std::string detail;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    if (i > 0) {
      const auto& prev = rep.rows[i - 1];
      if (row.estimate > prev.estimate && !row.ci_95.overlaps(prev.ci_95)) monotone = false;
    }
    const auto ci1 = lab::wilson_interval(row.phi1_divides, row.trials, lab::kZ99);
    const auto ci2 = lab::wilson_interval(row.phi2_divides, row.trials, lab::kZ99);
    tracks = tracks && ci1.contains(to_double(row.exact_phi1)) && ci2.contains(to_double(row.exact_phi2));
    detail += fmt("n=%.0f residual=%.5f ", static_cast<double>(row.n), row.estimate) +
              fmt("[%.5f,%.5f] ", row.ci_95.lo, row.ci_95.hi) +
              fmt("phi2=%.5f exact=%.5f; ", static_cast<double>(row.phi2_divides) / row.trials,
                  to_double(row.exact_phi2));
  }
  return {monotone && tracks, detail + (monotone ? "monotone up to CI" : "NOT monotone") +
                                  (tracks ? ", witnesses track DP" : ", witnesses off DP")};
}

}  // namespace

// Arguments, if any, select criteria by number.
int main(int argc, char** argv) {
  std::vector<bool> selected(11, argc == 1);
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k >= 1 && k <= 10) selected[static_cast<std::size_t>(k)] = true;
  }
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"constants reproduction", constants_reproduction},
      {"unif-Q bound audit", unifq_audit},
      {"Sigma_m and Pi_m bounds", pi_m_audit},
      {"uniform delta vanishes", uniform_delta_zero},
      {"sieve sandwich", sieve_sandwich},
      {"1/sqrt(n) root rate", root_rate},
      {"Monte Carlo vs exact 1/4", mc_vs_exact},
      {"certification soundness n=10", soundness},
      {"reproducibility across --jobs", reproducibility},
      {"irreducibility fraction trend", irreducibility_trend},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i + 1]) continue;
    const auto start = std::chrono::steady_clock::now();
    Check o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-32s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
