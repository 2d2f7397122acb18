#include "irrlab/ptuple.hpp"

#include <algorithm>
#include <string>

#include "irrlab/errors.hpp"
#include "irrlab/factor.hpp"
#include "irrlab/irreducibles.hpp"

namespace irrlab {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    text.remove_prefix(pos + 1);
  }
}

void require_same_ctx(const PTuple& a, const PTuple& b) {
  if (a.ctx() != b.ctx()) throw InvalidInput("tuples over different prime lists");
}

}  // namespace

PrimeTuple::PrimeTuple(std::vector<Prime> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw InvalidInput("prime list is empty");
  std::sort(primes_.begin(), primes_.end());
  if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end()) {
    throw InvalidInput("prime list has repeated entries");
  }
}

PrimeTuple PrimeTuple::parse(std::string_view text) {
  std::vector<Prime> primes;
  for (auto tok : split(text, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos || tok.size() > 12) {
      throw InvalidInput("bad prime '" + std::string(tok) + "'");
    }
    primes.emplace_back(std::stoull(std::string(tok)));
  }
  return PrimeTuple(std::move(primes));
}

PrimeTuple PrimeTuple::first(std::size_t r) {
  if (r == 0) throw InvalidInput("need at least one prime");
  std::vector<Prime> primes;
  for (std::uint64_t q = 2; primes.size() < r; ++q) {
    if (is_prime(q)) primes.emplace_back(q);
  }
  return PrimeTuple(std::move(primes));
}

BigInt PrimeTuple::product() const {
  BigInt out = 1;
  for (const auto& p : primes_) out *= p.value();
  return out;
}

std::string PrimeTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(primes_[i].value());
  }
  return out;
}

PTuple::PTuple(PrimeTuple ctx, std::vector<MonicPoly> components) : ctx_(std::move(ctx)), components_(std::move(components)) {
  if (components_.size() != ctx_.size()) throw InvalidInput("component count does not match prime count");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].modulus() != ctx_[i]) throw InvalidInput("component " + std::to_string(i) + " has the wrong modulus");
  }
}

PTuple PTuple::unit(const PrimeTuple& ctx) {
  std::vector<MonicPoly> comps;
  for (const auto& p : ctx.primes()) comps.emplace_back(p);
  return PTuple(ctx, std::move(comps));
}

PTuple PTuple::embed(const PrimeTuple& ctx, std::size_t slot, const MonicPoly& poly) {
  if (slot >= ctx.size()) throw InvalidInput("slot out of range");
  std::vector<MonicPoly> comps = unit(ctx).components_;
  comps[slot] = poly;
  return PTuple(ctx, std::move(comps));
}

PTuple PTuple::parse(std::string_view text) {
  if (text.substr(0, 2) != "p=") throw InvalidInput("tuple text must start with 'p='");
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw InvalidInput("tuple text needs '|'");
  PrimeTuple ctx = PrimeTuple::parse(text.substr(2, bar - 2));
  const auto parts = split(text.substr(bar + 1), ';');
  if (parts.size() != ctx.size()) throw InvalidInput("tuple text has the wrong number of components");
  std::vector<MonicPoly> comps;
  for (std::size_t i = 0; i < parts.size(); ++i) comps.push_back(MonicPoly::parse(ctx[i], parts[i]));
  return PTuple(std::move(ctx), std::move(comps));
}

bool PTuple::is_unit() const {
  return std::all_of(components_.begin(), components_.end(), [](const MonicPoly& c) { return c.is_one(); });
}

std::string PTuple::to_string() const {
  std::string out = "p=" + ctx_.to_string() + "|";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ';';
    out += components_[i].to_string();
  }
  return out;
}

PTuple operator*(const PTuple& a, const PTuple& b) {
  require_same_ctx(a, b);
  std::vector<MonicPoly> comps;
  comps.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) comps.push_back(a[i] * b[i]);
  return PTuple(a.ctx_, std::move(comps));
}

std::strong_ordering operator<=>(const PTuple& a, const PTuple& b) {
  return std::lexicographical_compare_three_way(a.components_.begin(), a.components_.end(), b.components_.begin(),
                                                b.components_.end());
}

DegreeVec deg_vec(const PTuple& a) {
  DegreeVec d;
  for (const auto& c : a.components()) d.push_back(c.degree());
  return d;
}

std::size_t total_deg(const PTuple& a) {
  std::size_t s = 0;
  for (const auto& c : a.components()) s += c.degree();
  return s;
}

BigInt norm(const PTuple& a) {
  BigInt out = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out *= boost::multiprecision::pow(BigInt(a.ctx()[i].value()), static_cast<unsigned>(a[i].degree()));
  }
  return out;
}

Rational inverse_norm(const PTuple& a) { return Rational(BigInt(1), norm(a)); }

bool divides(const PTuple& d, const PTuple& a) {
  require_same_ctx(d, a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!divides(d[i], a[i])) return false;
  }
  return true;
}

PTuple quotient(const PTuple& a, const PTuple& d) {
  require_same_ctx(d, a);
  std::vector<MonicPoly> comps;
  for (std::size_t i = 0; i < a.size(); ++i) comps.push_back(quotient(a[i], d[i]));
  return PTuple(a.ctx(), std::move(comps));
}

std::vector<PFactor> factorize_P(const PTuple& a) {
  std::vector<PFactor> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& fp : factor(a[i])) out.push_back({{i, fp.factor}, fp.multiplicity});
  }
  return out;
}

BigInt tau(const PTuple& a) {
  BigInt t = 1;
  for (const auto& f : factorize_P(a)) t *= f.multiplicity + 1;
  return t;
}

std::size_t omega(const PTuple& a) { return factorize_P(a).size(); }

unsigned nu(const PIrreducible& irreducible, const PTuple& a) {
  if (irreducible.slot >= a.size()) throw InvalidInput("slot out of range");
  const MonicPoly& c = a[irreducible.slot];
  if (irreducible.poly.modulus() != c.modulus()) throw InvalidInput("irreducible over the wrong field");
  if (irreducible.poly.is_one()) throw InvalidInput("the unit is not irreducible");
  unsigned v = 0;
  MonicPoly rest = c;
  while (divides(irreducible.poly, rest)) {
    rest = quotient(rest, irreducible.poly);
    ++v;
  }
  return v;
}

double sigma_m(const PrimeTuple& ctx, std::size_t m) {
  double s = 0.0;
  for (const auto& p : ctx.primes()) {
    for (std::size_t k = 1; k <= m; ++k) s += irreducible_density(p, k, true);
  }
  return s;
}

double log_pi_m(const PrimeTuple& ctx, std::size_t m) {
  // count * log(1 - x) with count = density / x and x = p^-k.
  double s = 0.0;
  for (const auto& p : ctx.primes()) {
    for (std::size_t k = 1; k <= m; ++k) {
      const double x = std::pow(static_cast<double>(p.value()), -static_cast<double>(k));
      const double ratio = x < 1e-8 ? -1.0 - x / 2.0 : std::log1p(-x) / x;
      s += irreducible_density(p, k, true) * ratio;
    }
  }
  return s;
}

FriableProfile friable_profile(const PTuple& a, std::size_t m) {
  if (m == 0) throw InvalidInput("m must be >= 1");
  const PrimeTuple& ctx = a.ctx();
  std::vector<MonicPoly> friable, rest;
  FriableProfile prof{m, PTuple::unit(ctx), PTuple::unit(ctx), 0.0, 0.0, 0.0, BigInt(1)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Prime p = ctx[i];
    auto split = factor_up_to_degree(a[i], m);
    MonicPoly f(p);
    MonicPoly nf = split.cofactor;
    const MonicPoly x = MonicPoly::x(p);
    for (const auto& fp : split.small) {
      if (fp.factor == x) {
        nf *= pow(x, fp.multiplicity);
        continue;
      }
      f *= pow(fp.factor, fp.multiplicity);
      prof.tau_friable *= fp.multiplicity + 1;
      prof.log_tau_friable += std::log(static_cast<double>(fp.multiplicity) + 1.0);
      ++prof.omega_friable;
    }
    prof.total_deg_friable += f.degree();
    friable.push_back(std::move(f));
    rest.push_back(std::move(nf));
  }
  prof.friable_part = PTuple(ctx, std::move(friable));
  prof.nonfriable_part = PTuple(ctx, std::move(rest));
  prof.sigma_m = sigma_m(ctx, m);
  prof.log_pi_m = log_pi_m(ctx, m);
  prof.pi_m = std::exp(prof.log_pi_m);
  return prof;
}

EmEvaluation event_Em(const PTuple& a, std::size_t m) {
  EmEvaluation ev{friable_profile(a, m)};
  const double r = static_cast<double>(a.size());
  ev.degree_threshold = static_cast<double>(m) * (ev.profile.sigma_m - 2.0);
  ev.log_tau_threshold = (1.0 - 1.0 / r) * ev.profile.sigma_m;
  ev.degree_ok = static_cast<double>(ev.profile.total_deg_friable) <= ev.degree_threshold;
  ev.tau_ok = ev.profile.log_tau_friable <= ev.log_tau_threshold;
  ev.holds = ev.degree_ok && ev.tau_ok;
  return ev;
}

}  // namespace irrlab
