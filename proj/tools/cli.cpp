#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "irrlab/constants.hpp"
#include "irrlab/cyclotomic.hpp"
#include "irrlab/errors.hpp"
#include "irrlab/int_poly.hpp"
#include "irrlab/irreducibles.hpp"
#include "irrlab/lab/certify.hpp"
#include "irrlab/lab/experiments.hpp"
#include "irrlab/lab/oracles.hpp"
#include "irrlab/measures.hpp"
#include "irrlab/pspace.hpp"
#include "irrlab/sieve.hpp"

namespace irrlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CsvRow {
  std::size_t n;
  double estimate;
  double ci_lo;
  double ci_hi;
  std::uint64_t trials;
  std::uint64_t seed;
};

struct Output {
  Json result;
  std::string summary;
  std::optional<std::uint64_t> seed;
  std::vector<CsvRow> csv;
  double wall_time = 0.0;
};

Json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

Json exact(const Rational& q) { return Json{{"fraction", q.str()}, {"value", to_double(q)}}; }

Json interval(const lab::Interval& i) { return Json::array({i.lo, i.hi}); }

Json sampler_json(const lab::SamplerConfig& c) {
  return Json{{"n", c.n}, {"a", c.a}, {"N", c.N}, {"seed", c.seed}};
}

Json report_json(const lab::ExperimentReport& r) {
  Json j{{"experiment", r.experiment}, {"config", sampler_json(r.config)}};
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["estimate"] = r.estimate;
  j["estimate_is_upper_bound"] = r.estimate_is_upper_bound;
  j["wilson_ci_95"] = interval(r.wilson_ci_95);
  j["exact"] = r.exact ? exact(*r.exact) : Json();
  Json diag = Json::object();
  for (const auto& [k, v] : r.diagnostics) diag[k] = v;
  j["diagnostics"] = diag;
  j["version"] = r.version;
  return j;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size() || tok.front() == '-') {
      throw InvalidInput(std::string("bad ") + what + " list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput(std::string("empty ") + what + " list");
  return out;
}

std::vector<std::uint32_t> prime_values(const PrimeTuple& primes) {
  std::vector<std::uint32_t> v;
  for (const auto& p : primes.primes()) v.push_back(static_cast<std::uint32_t>(p.value()));
  return v;
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// Flags shared by the sampling subcommands.
void add_sampler(CLI::App* sub, lab::SamplerConfig& cfg, bool with_seed, bool with_n = true) {
  if (with_n) sub->add_option("--n", cfg.n, "Polynomial degree")->required();
  sub->add_option("--a", cfg.a, "Segment start")->capture_default_str();
  sub->add_option("--N", cfg.N, "Segment length")->capture_default_str();
  if (with_seed) sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
}

struct Flags {
  lab::SamplerConfig cfg;
  unsigned jobs = 1;
  std::string format = "json";
  std::string primes;
  std::uint64_t trials = 0;
  std::uint64_t budget = 0;

  double c = 0.0;

  std::string measure;
  std::vector<std::int64_t> uniform;
  unsigned s = 1;
  std::uint64_t n_param = 0;
  double gamma = 0.5;
  std::uint64_t max_r = kDefaultMaxR;
  unsigned s_max = 0;

  std::uint64_t n_max = 64;
  std::uint64_t q_max = 60;
  std::uint64_t grid = 1000;

  std::uint64_t p = 0;
  std::size_t k = 0;
  bool exclude_x = false;
  bool list = false;

  std::string poly;
  std::uint64_t cyclotomic_bound = 16;
  bool stop_early = false;

  std::uint64_t d = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::string m_list;
  std::size_t m = 0;
  std::string deg;
  std::vector<std::string> divisors;
  std::string ns = "50,100,200,400";
};

void add_jobs(CLI::App* sub, Flags& f) {
  sub->add_option("--jobs", f.jobs, "Worker threads (0: one per hardware thread)")->capture_default_str();
}

void add_format(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

lab::RunOptions run_opts(const Flags& f) { return lab::RunOptions{f.jobs}; }

Output cmd_constants(const Flags& f) {
  const ConstantsReport rep = N0_for(f.c);
  Output o;
  o.result = Json{{"C", rep.c_target},
                  {"r", rep.r},
                  {"exponent", rep.exponent},
                  {"P", big(rep.p)},
                  {"f_P", rep.f_p},
                  {"N0", big(rep.n0)},
                  {"stated_N0", rep.stated_n0 ? Json(*rep.stated_n0) : Json()},
                  {"s", rep.s_hint ? Json(*rep.s_hint) : Json()},
                  {"rankin_tau_lower", rankin_t(RankinKind::TauLower, rep.r)},
                  {"rankin_tau_upper", rankin_t(RankinKind::TauUpper, rep.r)}};
  o.summary = "r = " + std::to_string(rep.r) + ", exponent = " + fixed(rep.exponent, 8) + ", P = " + rep.p.str() +
              ", f(P) = " + fixed(rep.f_p, 10);
  return o;
}

std::vector<Measure> measure_list(const Flags& f) {
  if (!f.uniform.empty()) {
    if (f.uniform[1] < 1) throw InvalidInput("--uniform needs N >= 1");
    return {Measure::uniform(f.uniform[0], static_cast<std::uint64_t>(f.uniform[1]))};
  }
  if (f.measure.empty()) throw InvalidInput("give --measure or --uniform");
  return {Measure::parse(f.measure)};
}

Json case_json(const ConditionCase& c) {
  return Json{{"Q", c.q}, {"R", c.r}, {"ell", c.ell}, {"j", c.j}, {"sum", c.sum}, {"bound", c.bound}, {"margin", c.margin()}};
}

Output cmd_check_measure(const Flags& f) {
  const auto mus = measure_list(f);
  const PrimeTuple primes = PrimeTuple::parse(f.primes);
  const ConditionReport rep = check_master_condition(mus, primes, f.s, f.n_param, f.gamma, f.max_r);
  Output o;
  o.result = Json{{"measure", mus.front().to_string()},
                  {"primes", rep.primes},
                  {"s", rep.s},
                  {"gamma", rep.gamma},
                  {"n", rep.n},
                  {"outcome", to_string(rep.outcome)},
                  {"worst", case_json(rep.worst)},
                  {"max_sum", case_json(rep.max_sum)},
                  {"cases_checked", rep.cases_checked}};
  if (f.s_max > 0) {
    const auto s = min_s_for_condition(mus.front(), primes, f.n_param, f.gamma, f.s_max, f.max_r);
    o.result["s_max"] = f.s_max;
    o.result["min_s"] = s ? Json(*s) : Json();
  }
  o.summary = std::string("condition ") + to_string(rep.outcome) + " at s = " + std::to_string(rep.s) +
              ", worst margin " + fixed(rep.worst.margin(), 8) + " at Q = " + std::to_string(rep.worst.q);
  return o;
}

Output cmd_unifq_audit(const Flags& f) {
  const UnifQAudit a = audit_unifQ(f.n_max, f.q_max, f.grid);
  Output o;
  o.result = Json{{"N_max", f.n_max},
                  {"Q_max", f.q_max},
                  {"grid", f.grid},
                  {"slack", kConditionSlack},
                  {"cases_checked", a.cases_checked},
                  {"violations", a.violations},
                  {"pass", a.pass()},
                  {"worst",
                   {{"N", a.worst.n_length},
                    {"Q", a.worst.q},
                    {"theta0", a.worst.theta0},
                    {"sum", a.worst.sum},
                    {"bound", a.worst.bound},
                    {"excess", a.worst.excess()}}}};
  o.summary = std::to_string(a.cases_checked) + " cases, " + std::to_string(a.violations) +
              " violations, worst excess " + fixed(a.worst.excess(), 8);
  return o;
}

Output cmd_count_irreducibles(const Flags& f) {
  const Prime p(f.p);
  if (f.k == 0) throw InvalidInput("k must be >= 1");
  const BigInt count = count_irreducibles(p, f.k, f.exclude_x);
  Output o;
  o.result = Json{{"p", f.p}, {"k", f.k}, {"exclude_x", f.exclude_x}, {"count", big(count)}};
  if (f.list) {
    Json polys = Json::array();
    for (const auto& g : enumerate_irreducibles(p, f.k, f.exclude_x, f.budget)) {
      if (g.degree() == f.k) polys.push_back(g.to_string());
    }
    o.result["irreducibles"] = polys;
  }
  o.summary = count.str() + " monic irreducibles of degree " + std::to_string(f.k) + " over F_" + std::to_string(f.p);
  return o;
}

Output cmd_certify(const Flags& f) {
  const IntPoly a = IntPoly::parse(f.poly);
  const PrimeTuple primes = PrimeTuple::parse(f.primes);
  lab::CertifyOptions opts;
  opts.cyclotomic_bound = f.cyclotomic_bound;
  opts.stop_early = f.stop_early;
  const lab::Certificate cert = lab::certify(a, primes, opts);
  Output o;
  o.result = Json{{"poly", a.to_string()}, {"verdict", lab::to_string(cert.verdict)}};
  if (cert.witness) {
    o.result["witness"] = Json{{"divisor", cert.witness->description()},
                               {"coefficients", cert.witness->divisor().to_string()},
                               {"verified", lab::witness_divides(a, *cert.witness)}};
  } else {
    o.result["witness"] = Json();
  }
  o.result["primes_used"] = cert.primes_used;
  o.result["attainable_sets"] = cert.attainable_sets;
  o.result["common_degrees"] = cert.common_degrees;
  o.summary = std::string(lab::to_string(cert.verdict)) +
              (cert.witness ? " (" + cert.witness->description() + " divides A)" : std::string());
  return o;
}

Output cmd_mc_cyclotomic(const Flags& f) {
  const auto r = lab::mc_cyclotomic(f.cfg, f.d, f.trials, run_opts(f));
  Output o;
  o.result = report_json(r);
  o.seed = f.cfg.seed;
  o.wall_time = r.wall_time;
  o.csv.push_back({r.config.n, r.estimate, r.wilson_ci_95.lo, r.wilson_ci_95.hi, r.trials, r.config.seed});
  o.summary = "Phi_" + std::to_string(f.d) + " | A in " + std::to_string(r.successes) + " of " +
              std::to_string(r.trials) + " trials, estimate " + fixed(r.estimate, 6) +
              (r.exact ? ", exact " + fixed(to_double(*r.exact), 6) : std::string());
  return o;
}

Output cmd_mc_factor_range(const Flags& f) {
  const auto r = lab::mc_factor_in_range(f.cfg, PrimeTuple::parse(f.primes), f.n1, f.n2, f.trials, run_opts(f));
  Output o;
  o.result = report_json(r);
  o.seed = f.cfg.seed;
  o.wall_time = r.wall_time;
  o.csv.push_back({r.config.n, r.estimate, r.wilson_ci_95.lo, r.wilson_ci_95.hi, r.trials, r.config.seed});
  o.summary = "common attainable degree in [" + std::to_string(f.n1) + ", " + std::to_string(f.n2) + "] in " +
              std::to_string(r.successes) + " of " + std::to_string(r.trials) + " trials (upper bound " +
              fixed(r.estimate, 6) + ")";
  return o;
}

template <class K>
Json histogram(const std::map<K, std::uint64_t>& h) {
  Json arr = Json::array();
  for (const auto& [k, v] : h) {
    if constexpr (std::is_same_v<K, BigInt>) {
      arr.push_back(Json::array({big(k), v}));
    } else {
      arr.push_back(Json::array({k, v}));
    }
  }
  return arr;
}

Output cmd_em_stats(const Flags& f) {
  const PrimeTuple primes = PrimeTuple::parse(f.primes);
  Output o;
  o.seed = f.cfg.seed;
  Json reports = Json::array();
  for (auto m : parse_list(f.m_list, "m")) {
    const auto r = lab::em_statistics(f.cfg, primes, m, f.trials, run_opts(f));
    o.wall_time += r.wall_time;
    reports.push_back(Json{{"m", r.m},
                           {"sigma_m", r.sigma_m},
                           {"degree_threshold", r.degree_threshold},
                           {"log_tau_threshold", r.log_tau_threshold},
                           {"em_failures", r.em_failures},
                           {"em_failure_frequency", r.em_failure_frequency},
                           {"em_failure_ci_95", interval(r.em_failure_ci_95)},
                           {"median_log2_tau", r.median_log2_tau},
                           {"deg_friable", histogram(r.deg_friable)},
                           {"omega_friable", histogram(r.omega_friable)},
                           {"tau_friable", histogram(r.tau_friable)},
                           {"x_power_counts", r.x_power_counts}});
    o.summary += "m = " + std::to_string(m) + ": E_m fails in " + std::to_string(r.em_failures) + " of " +
                 std::to_string(r.trials) + ", median log2 tau " + fixed(r.median_log2_tau, 4) + " vs Sigma_m " +
                 fixed(r.sigma_m, 4) + "\n";
  }
  o.result = Json{{"config", sampler_json(f.cfg)},
                  {"primes", prime_values(primes)},
                  {"trials", f.trials},
                  {"version", lab::version()},
                  {"reports", reports}};
  if (!o.summary.empty()) o.summary.pop_back();
  return o;
}

Output cmd_delta_bruteforce(const Flags& f) {
  const PrimeTuple primes = PrimeTuple::parse(f.primes);
  const Rational delta = lab::delta_A_bruteforce(f.cfg, primes, f.m, f.budget);
  Output o;
  o.result = Json{{"config", sampler_json(f.cfg)}, {"primes", prime_values(primes)}, {"m", f.m}, {"delta", exact(delta)}};
  o.summary = "Delta_A(" + std::to_string(f.m) + ") = " + delta.str() + " ~ " + fixed(to_double(delta), 10);
  return o;
}

Output cmd_sieve_verify(const Flags& f) {
  const PrimeTuple primes = PrimeTuple::parse(f.primes);
  const auto deg = parse_list(f.deg, "degree");
  if (deg.size() != primes.size()) throw InvalidInput("--deg needs one degree per prime");
  const DegreeVec d(deg.begin(), deg.end());
  const Distribution dist = Distribution::uniform(primes, d, f.budget);
  std::vector<PTuple> targets;
  for (const auto& text : f.divisors) {
    PTuple t = PTuple::parse(text);
    if (t.ctx() != primes) throw InvalidInput("divisor '" + text + "' uses other primes");
    targets.push_back(std::move(t));
  }
  if (targets.empty()) {
    targets.push_back(PTuple::unit(primes));
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (d[i] == 0) continue;
      std::vector<PTuple> more;
      for (const auto& t : targets) {
        for (const auto& g : all_monic_of_degree(primes[i], 1)) {
          std::vector<MonicPoly> comps = t.components();
          comps[i] = g;
          more.emplace_back(primes, std::move(comps));
        }
      }
      targets.insert(targets.end(), more.begin(), more.end());
    }
  }
  Output o;
  Json rows = Json::array();
  std::size_t held = 0;
  for (const auto& t : targets) {
    const SieveReport r = verify_sieve_truncation(dist, t, f.m, f.budget);
    held += r.holds() ? 1 : 0;
    rows.push_back(Json{{"divisor", t.to_string()},
                        {"exact", exact(r.exact)},
                        {"lower", exact(r.lower)},
                        {"upper", exact(r.upper)},
                        {"benchmark_lower", exact(r.benchmark_lower)},
                        {"benchmark_upper", exact(r.benchmark_upper)},
                        {"error_sum", exact(r.error_sum)},
                        {"bound", r.bound},
                        {"ell0", r.ell0},
                        {"error_cutoff", r.error_cutoff},
                        {"sandwich_holds", r.sandwich_holds},
                        {"benchmark_sandwich_holds", r.benchmark_sandwich_holds},
                        {"bound_holds", r.bound_holds}});
  }
  o.result = Json{{"primes", prime_values(primes)},
                  {"deg", deg},
                  {"m", f.m},
                  {"instances", rows.size()},
                  {"all_hold", held == rows.size()},
                  {"rows", rows}};
  o.summary = std::to_string(held) + " of " + std::to_string(rows.size()) + " instances hold";
  return o;
}

Output cmd_sweep(const Flags& f) {
  const auto ns = parse_list(f.ns, "degree");
  const std::vector<std::size_t> degrees(ns.begin(), ns.end());
  const PrimeTuple primes = PrimeTuple::parse(f.primes);
  const auto rep = lab::sweep_irreducibility(f.cfg, degrees, primes, f.trials, f.cyclotomic_bound, run_opts(f));
  Output o;
  o.seed = f.cfg.seed;
  o.wall_time = rep.wall_time;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json witnesses = Json::object();
    for (const auto& [d, c] : r.witness_cyclotomic) witnesses["Phi_" + std::to_string(d)] = c;
    rows.push_back(Json{{"n", r.n},
                        {"trials", r.trials},
                        {"certified", r.certified},
                        {"unknown", r.unknown},
                        {"witness_x", r.witness_x},
                        {"witness_cyclotomic", witnesses},
                        {"phi1_divides", r.phi1_divides},
                        {"phi2_divides", r.phi2_divides},
                        {"exact_a0_zero", exact(r.exact_a0_zero)},
                        {"exact_phi1", exact(r.exact_phi1)},
                        {"exact_phi2", exact(r.exact_phi2)},
                        {"residual", r.residual},
                        {"estimate", r.estimate},
                        {"ci_95", interval(r.ci_95)},
                        {"ci_99", interval(r.ci_99)}});
    o.csv.push_back({r.n, r.estimate, r.ci_95.lo, r.ci_95.hi, r.trials, f.cfg.seed});
    o.summary += "n = " + std::to_string(r.n) + ": certified " + std::to_string(r.certified) + ", unknown " +
                 std::to_string(r.unknown) + ", non-certified minus P(a0 = 0) " + fixed(r.estimate, 5) + "\n";
  }
  o.result = Json{{"config", {{"a", rep.config.a}, {"N", rep.config.N}, {"seed", rep.config.seed}}},
                  {"primes", rep.primes},
                  {"cyclotomic_bound", rep.cyclotomic_bound},
                  {"version", rep.version},
                  {"rows", rows}};
  if (!o.summary.empty()) o.summary.pop_back();
  return o;
}

std::string join_command(const std::vector<std::string>& args) {
  std::string s = "irrlab";
  for (const auto& a : args) s += " " + a;
  return s;
}

void emit(const std::string& command, const Output& o, const Flags& f, const std::vector<std::string>& args,
          std::ostream& out, std::ostream& err) {
  Json payload{{"schema_version", kSchemaVersion}, {"command", command}, {"result", o.result}};
  const std::string digest = fnv1a_hex(payload.dump());
  if (f.format == "csv") {
    out << "n,estimate,ci_lo,ci_hi,trials,seed\n";
    out << std::setprecision(17);
    for (const auto& r : o.csv) {
      out << r.n << ',' << r.estimate << ',' << r.ci_lo << ',' << r.ci_hi << ',' << r.trials << ',' << r.seed << '\n';
    }
  } else {
    payload["manifest"] = Json{{"command_line", join_command(args)},
                               {"version", lab::version()},
                               {"seed", o.seed ? Json(*o.seed) : Json()},
                               {"timestamp", timestamp_utc()},
                               {"digest", digest}};
    payload["wall_time"] = o.wall_time;
    out << payload.dump(2) << '\n';
  }
  err << o.summary << '\n' << "digest " << digest << '\n';
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Random integer polynomials: factorization mod p, product-space anatomy, Fourier conditions and "
               "irreducibility experiments.",
               "irrlab"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", lab::version());
  std::map<std::string, std::function<Output(const Flags&)>> actions;

  auto* constants = app.add_subcommand("constants", "Explicit constants r, P, f(P) and N0 for a target exponent C");
  constants->add_option("--C", f.c, "Target exponent C > 0")->required();
  actions["constants"] = cmd_constants;

  auto* check = app.add_subcommand("check-measure", "Check the Fourier near-uniformity condition for a measure");
  check->add_option("--measure", f.measure, "Measure as v1:p1,v2:p2,...");
  check->add_option("--uniform", f.uniform, "Uniform measure on a, ..., a + N - 1")->expected(2)->type_name("A N");
  check->add_option("--primes", f.primes, "Comma-separated primes")->required();
  check->add_option("--s", f.s, "Exponent s")->capture_default_str();
  check->add_option("--n", f.n_param, "Polynomial degree n >= 3")->required();
  check->add_option("--gamma", f.gamma, "Exponent gamma in [1/2, 1]")->capture_default_str();
  check->add_option("--max-r", f.max_r, "Largest R to enumerate")->capture_default_str();
  check->add_option("--s-max", f.s_max, "Also search the smallest passing s up to this value");
  actions["check-measure"] = cmd_check_measure;

  auto* unifq = app.add_subcommand("unifq-audit", "Grid audit of the uniform-segment Fourier sum bound");
  unifq->add_option("--N-max", f.n_max, "Largest segment length")->capture_default_str();
  unifq->add_option("--Q-max", f.q_max, "Largest modulus Q")->capture_default_str();
  unifq->add_option("--grid", f.grid, "theta0 points per period 1/Q")->capture_default_str();
  actions["unifq-audit"] = cmd_unifq_audit;

  auto* count = app.add_subcommand("count-irreducibles", "Count monic irreducibles of degree k over F_p");
  count->add_option("--p", f.p, "Prime")->required();
  count->add_option("--k", f.k, "Degree")->required();
  count->add_flag("--exclude-x", f.exclude_x, "Do not count X");
  count->add_flag("--list", f.list, "Also list the irreducibles");
  f.budget = kDefaultEnumerationBudget;
  count->add_option("--budget", f.budget, "Enumeration budget for --list")->capture_default_str();
  actions["count-irreducibles"] = cmd_count_irreducibles;

  auto* cert = app.add_subcommand("certify", "Certify irreducibility of a monic integer polynomial");
  cert->add_option("--poly", f.poly, "Coefficients c0,c1,...,cn")->required();
  cert->add_option("--primes", f.primes, "Comma-separated primes")->required();
  cert->add_option("--cyclotomic-bound", f.cyclotomic_bound, "Try Phi_d for phi(d) up to this bound")
      ->capture_default_str();
  cert->add_flag("--stop-early", f.stop_early, "Stop factoring once the verdict is settled");
  actions["certify"] = cmd_certify;

  auto* mcc = app.add_subcommand("mc-cyclotomic", "Monte Carlo frequency of Phi_d | A");
  add_sampler(mcc, f.cfg, true);
  mcc->add_option("--d", f.d, "Cyclotomic index")->required();
  mcc->add_option("--trials", f.trials, "Number of samples")->required();
  add_jobs(mcc, f);
  add_format(mcc, f);
  actions["mc-cyclotomic"] = cmd_mc_cyclotomic;

  auto* mcf = app.add_subcommand("mc-factor-range", "Monte Carlo frequency of a common attainable degree in [n1, n2]");
  add_sampler(mcf, f.cfg, true);
  mcf->add_option("--primes", f.primes, "Comma-separated primes")->required();
  mcf->add_option("--n1", f.n1, "Smallest degree")->required();
  mcf->add_option("--n2", f.n2, "Largest degree")->required();
  mcf->add_option("--trials", f.trials, "Number of samples")->required();
  add_jobs(mcf, f);
  add_format(mcf, f);
  actions["mc-factor-range"] = cmd_mc_factor_range;

  auto* em = app.add_subcommand("em-stats", "Friable-part statistics of A mod the primes");
  add_sampler(em, f.cfg, true);
  em->add_option("--primes", f.primes, "Comma-separated primes")->required();
  em->add_option("--m", f.m_list, "Friability degree, or a comma-separated list")->required();
  em->add_option("--trials", f.trials, "Number of samples")->required();
  add_jobs(em, f);
  actions["em-stats"] = cmd_em_stats;

  auto* delta = app.add_subcommand("delta-bruteforce", "Exact Delta_A(m) over all coefficient vectors");
  add_sampler(delta, f.cfg, false);
  delta->add_option("--primes", f.primes, "Comma-separated primes")->required();
  delta->add_option("--m", f.m, "Degree bound m")->required();
  delta->add_option("--budget", f.budget, "Enumeration budget")->capture_default_str();
  actions["delta-bruteforce"] = cmd_delta_bruteforce;

  auto* sieve = app.add_subcommand("sieve-verify", "Truncated inclusion-exclusion check for the uniform law on P_d");
  sieve->add_option("--primes", f.primes, "Comma-separated primes")->required();
  sieve->add_option("--deg", f.deg, "Degree vector, one entry per prime")->required();
  sieve->add_option("--m", f.m, "Friability degree m >= 1")->required();
  sieve->add_option("--divisor", f.divisors, "Divisor tuple p=...|c;c (repeatable; default: all of degree <= 1)");
  sieve->add_option("--budget", f.budget, "Enumeration budget")->capture_default_str();
  actions["sieve-verify"] = cmd_sieve_verify;

  auto* sweep = app.add_subcommand("sweep-irreducibility", "Certified-irreducible fractions across degrees");
  add_sampler(sweep, f.cfg, true, false);
  sweep->add_option("--ns", f.ns, "Comma-separated degrees")->capture_default_str();
  f.primes = "2,3,5,7";
  sweep->add_option("--primes", f.primes, "Comma-separated primes")->capture_default_str();
  sweep->add_option("--trials", f.trials, "Samples per degree")->required();
  sweep->add_option("--cyclotomic-bound", f.cyclotomic_bound, "Try Phi_d for phi(d) up to this bound")
      ->capture_default_str();
  add_jobs(sweep, f);
  add_format(sweep, f);
  actions["sweep-irreducibility"] = cmd_sweep;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    err << app.help();
    return kInvalidInput;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    emit(name, actions.at(name)(f), f, args, out, err);
    return kOk;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace irrlab::cli
