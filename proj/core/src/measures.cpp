#include "irrlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>

#include "irrlab/errors.hpp"

namespace irrlab {

namespace {

using cd = std::complex<double>;

cd pairwise_sum(const cd* v, std::size_t n) {
  if (n <= 8) {
    cd s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

// Up to this length n t is accurate to about 1e-13 in double precision.
constexpr std::uint64_t kShortSegment = 4096;

double frac(double x) { return x - std::floor(x); }

double uniform_abs(std::uint64_t n, double theta) {
  if (n <= kShortSegment) {
    const double t = theta - std::nearbyint(theta);
    if (t == 0.0) return 1.0;
    const double num = std::sin(std::numbers::pi * std::fmod(static_cast<double>(n) * t, 2.0));
    const double den = static_cast<double>(n) * std::sin(std::numbers::pi * t);
    return std::min(1.0, std::fabs(num / den));
  }
  const long double t = static_cast<long double>(theta) - std::nearbyint(static_cast<long double>(theta));
  if (t == 0.0L) return 1.0;
  const long double nt = std::fmod(static_cast<long double>(n) * t, 2.0L);
  const long double num = std::sin(std::numbers::pi_v<long double> * nt);
  const long double den = static_cast<long double>(n) * std::sin(std::numbers::pi_v<long double> * t);
  return static_cast<double>(std::min(1.0L, std::fabs(num / den)));
}

Rational parse_mass(std::string_view tok) {
  const auto slash = tok.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InvalidInput("bad mass '" + std::string(s) + "'");
    }
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(tok));
  const BigInt den = parse_int(tok.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in mass");
  return Rational(parse_int(tok.substr(0, slash)), den);
}

struct CaseValues {
  ConditionCase c;
  std::vector<double> abs_values;
};

std::vector<CaseValues> build_cases(std::span<const Measure> mus, const PrimeTuple& primes, std::uint64_t n,
                                    double gamma, std::uint64_t max_r) {
  if (mus.empty()) throw InvalidInput("no measures given");
  if (n < 3) throw InvalidInput("n must be >= 3");
  if (!(gamma >= 0.5 && gamma <= 1.0)) throw InvalidInput("gamma must lie in [1/2, 1]");
  const std::size_t r = primes.size();
  if (r > 20) throw BudgetExceeded("too many primes for divisor enumeration");
  constexpr std::uint64_t kMaxEvaluations = std::uint64_t{1} << 27;
  std::vector<std::uint64_t> qs;
  const BigInt big_p = primes.product();
  if (big_p > BigInt(std::numeric_limits<std::uint64_t>::max() / 2)) throw BudgetExceeded("prime product too large");
  const auto p_total = big_p.convert_to<std::uint64_t>();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1u) q *= primes[i].value();
    }
    qs.push_back(q);
  }
  std::sort(qs.begin(), qs.end());
  std::uint64_t evaluations = 0;
  for (auto q : qs) {
    const std::uint64_t rr = p_total / q;
    if (rr > max_r) {
      throw BudgetExceeded("R = " + std::to_string(rr) + " exceeds the enumeration bound " + std::to_string(max_r));
    }
    evaluations += q * rr * mus.size();
    if (evaluations > kMaxEvaluations) throw BudgetExceeded("condition check needs too many Fourier evaluations");
  }
  const double log_factor = 1.0 - 1.0 / std::log(static_cast<double>(n));
  std::vector<CaseValues> cases;
  for (auto q : qs) {
    const std::uint64_t rr = p_total / q;
    const double bound = log_factor * std::pow(static_cast<double>(q), 1.0 - gamma);
    for (std::uint64_t ell = 0; ell < rr; ++ell) {
      const double theta0 = static_cast<double>(ell) / static_cast<double>(rr);
      for (std::size_t j = 0; j < mus.size(); ++j) {
        CaseValues cv;
        cv.c = ConditionCase{q, rr, ell, j, 0.0, bound};
        cv.abs_values.reserve(q);
        for (std::uint64_t k = 0; k < q; ++k) {
          cv.abs_values.push_back(fourier_abs(mus[j], frac(static_cast<double>(k) / static_cast<double>(q) + theta0)));
        }
        cases.push_back(std::move(cv));
      }
    }
  }
  return cases;
}

ConditionReport evaluate_cases(const std::vector<CaseValues>& cases, const PrimeTuple& primes, unsigned s,
                               std::uint64_t n, double gamma) {
  ConditionReport rep;
  for (const auto& p : primes.primes()) rep.primes.push_back(p.value());
  rep.s = s;
  rep.gamma = gamma;
  rep.n = n;
  bool first = true;
  for (const auto& cv : cases) {
    double sum = 0.0;
    for (double v : cv.abs_values) sum += std::pow(v, static_cast<double>(s));
    ConditionCase c = cv.c;
    c.sum = sum;
    if (first || c.margin() > rep.worst.margin()) rep.worst = c;
    if (first || c.sum > rep.max_sum.sum) rep.max_sum = c;
    first = false;
    ++rep.cases_checked;
  }
  const double m = rep.worst.margin();
  rep.outcome = m <= -kConditionSlack ? Outcome::Pass : m >= kConditionSlack ? Outcome::Fail : Outcome::Indeterminate;
  return rep;
}

}  // namespace

Measure Measure::from_masses(std::vector<std::pair<std::int64_t, Rational>> masses) {
  std::map<std::int64_t, Rational> merged;
  for (auto& [v, w] : masses) {
    if (w < 0) throw InvalidInput("negative mass");
    merged[v] += w;
  }
  Measure mu;
  Rational total = 0;
  for (auto& [v, w] : merged) {
    if (w == 0) continue;
    total += w;
    mu.support_.emplace_back(v, w);
    mu.masses_.push_back(to_double(w));
  }
  if (mu.support_.empty()) throw InvalidInput("measure has empty support");
  if (std::abs(to_double(total - 1)) > 1e-12) throw InvalidInput("masses do not sum to 1");
  return mu;
}

Measure Measure::uniform(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw InvalidInput("segment length must be >= 1");
  if (n > (std::uint64_t{1} << 24)) throw BudgetExceeded("segment too long to store explicitly");
  std::vector<std::pair<std::int64_t, Rational>> masses;
  masses.reserve(n);
  const Rational w(BigInt(1), BigInt(n));
  for (std::uint64_t i = 0; i < n; ++i) masses.emplace_back(a + static_cast<std::int64_t>(i), w);
  Measure mu = from_masses(std::move(masses));
  mu.segment_start_ = a;
  mu.segment_length_ = n;
  return mu;
}

Measure Measure::parse(std::string_view text) {
  std::vector<std::pair<std::int64_t, Rational>> masses;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    const auto colon = tok.find(':');
    if (colon == std::string_view::npos) throw InvalidInput("measure entry needs 'value:mass'");
    std::int64_t v = 0;
    try {
      std::size_t used = 0;
      const std::string vs(tok.substr(0, colon));
      v = std::stoll(vs, &used);
      if (used != vs.size()) throw InvalidInput("bad support point '" + vs + "'");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad support point '" + std::string(tok.substr(0, colon)) + "'");
    }
    masses.emplace_back(v, parse_mass(tok.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_masses(std::move(masses));
}

std::string Measure::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(support_[i].first) + ":" + numerator(support_[i].second).str() + "/" +
           denominator(support_[i].second).str();
  }
  return out;
}

double fourier_abs(const Measure& mu, double theta) {
  if (mu.segment_length_ != 0) return uniform_abs(mu.segment_length_, theta);
  // Shifting the support does not change the modulus, so measure phases from
  // the smallest point to keep the arguments small.
  const std::int64_t base = mu.support_.front().first;
  std::vector<cd> terms(mu.support_.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto offset = static_cast<long double>(mu.support_[i].first - base);
    const long double phase = std::fmod(static_cast<long double>(theta) * offset, 1.0L);
    const double angle = static_cast<double>(2.0L * std::numbers::pi_v<long double> * phase);
    terms[i] = std::polar(mu.masses_[i], angle);
  }
  return std::min(1.0, std::abs(pairwise_sum(terms.data(), terms.size())));
}

double fourier_power_sum(const Measure& mu, std::uint64_t q, double theta0, unsigned s) {
  if (q == 0) throw InvalidInput("Q must be >= 1");
  double sum = 0.0;
  for (std::uint64_t k = 0; k < q; ++k) {
    const double v = fourier_abs(mu, frac(static_cast<double>(k) / static_cast<double>(q) + theta0));
    sum += std::pow(v, static_cast<double>(s));
  }
  return sum;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Indeterminate: return "indeterminate";
  }
  return "?";
}

ConditionReport check_master_condition(std::span<const Measure> mus, const PrimeTuple& primes, unsigned s,
                                       std::uint64_t n, double gamma, std::uint64_t max_r) {
  if (s == 0) throw InvalidInput("s must be >= 1");
  return evaluate_cases(build_cases(mus, primes, n, gamma, max_r), primes, s, n, gamma);
}

UnifQCertificate check_unifQ_certificate(std::uint64_t n_length, std::uint64_t q) {
  if (q < 2) throw InvalidInput("Q must be >= 2");
  if (n_length == 0) throw InvalidInput("N must be >= 1");
  UnifQCertificate c;
  const double qd = static_cast<double>(q);
  c.bound = 1.0 + qd * (std::log(qd - 1.0) + 2.0) / static_cast<double>(n_length);
  c.threshold = 0.99 * std::sqrt(qd);
  c.certified = c.bound <= c.threshold;
  return c;
}

UnifQAudit audit_unifQ(std::uint64_t n_max, std::uint64_t q_max, std::uint64_t grid, double slack) {
  if (n_max < 2 || q_max < 2 || grid == 0) throw InvalidInput("audit needs N, Q >= 2 and a nonempty grid");
  UnifQAudit audit;
  bool first = true;
  for (std::uint64_t len = 2; len <= n_max; ++len) {
    const Measure mu = Measure::uniform(0, len);
    for (std::uint64_t q = 2; q <= q_max; ++q) {
      const double bound = check_unifQ_certificate(len, q).bound;
      for (std::uint64_t g = 0; g < grid; ++g) {
        const double theta0 = static_cast<double>(g) / (static_cast<double>(grid) * static_cast<double>(q));
        const double sum = fourier_power_sum(mu, q, theta0, 1);
        ++audit.cases_checked;
        if (sum > bound + slack) ++audit.violations;
        if (first || sum - bound > audit.worst.excess()) {
          audit.worst = {len, q, theta0, sum, bound};
          first = false;
        }
      }
    }
  }
  return audit;
}

std::optional<unsigned> min_s_for_condition(const Measure& mu, const PrimeTuple& primes, std::uint64_t n, double gamma,
                                            unsigned s_max, std::uint64_t max_r) {
  const auto cases = build_cases(std::span<const Measure>(&mu, 1), primes, n, gamma, max_r);
  for (unsigned s = 1; s <= s_max; ++s) {
    if (evaluate_cases(cases, primes, s, n, gamma).pass()) return s;
  }
  return std::nullopt;
}

}  // namespace irrlab
