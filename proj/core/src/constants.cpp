#include "irrlab/constants.hpp"

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "irrlab/errors.hpp"
#include "irrlab/irreducibles.hpp"

namespace irrlab {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// Positive part of t, used to bound ratios of consecutive (nu + 1)^t terms.
double tplus(double t) { return t > 0.0 ? t : 0.0; }

/// sum_{nu >= 2} (nu + 1)^t y^(nu - 1), bounded above with a geometric tail
/// once the ratio is below 1/2.
double nu_series_upper(double t, double y) {
  double sum = 0.0;
  for (std::size_t nu = 2;; ++nu) {
    const double term = std::pow(static_cast<double>(nu + 1), t) * std::pow(y, static_cast<double>(nu - 1));
    const double ratio = std::pow(static_cast<double>(nu + 2) / static_cast<double>(nu + 1), tplus(t)) * y;
    if (ratio < 0.5) return sum + term / (1.0 - ratio);
    sum += term;
    if (nu > 100000) return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

double Q_of(double t) {
  if (!(t > 0.0)) throw InvalidInput("Q(t) needs t > 0");
  return t * std::log(t) - t + 1.0;
}

double exponent_for_r(unsigned r) {
  if (r < 2) throw InvalidInput("r must be >= 2");
  const double rd = static_cast<double>(r);
  return rd * Q_of((1.0 - 1.0 / rd) / std::log(2.0));
}

unsigned min_r(double c) {
  if (!(c > 0.0)) throw InvalidInput("C must be > 0");
  unsigned r = 4;
  while (!(exponent_for_r(r) > c)) ++r;
  return r;
}

BigInt primorial(unsigned r) {
  if (r == 0) throw InvalidInput("r must be >= 1");
  return PrimeTuple::first(r).product();
}

double f_of(const BigInt& p) {
  if (p < 2) throw InvalidInput("f(P) needs P >= 2");
  const Float50 pf(p);
  const Float50 num = pf * (log(pf - 1) + 2);
  const Float50 den = Float50("0.99") * sqrt(pf) - 1;
  return static_cast<double>(num / den);
}

std::optional<std::uint64_t> stated_N0(unsigned r) {
  if (r == 12) return 100000000;
  if (r == 4) return 35;
  return std::nullopt;
}

ConstantsReport N0_for(double c) {
  ConstantsReport rep;
  rep.c_target = c;
  rep.r = min_r(c);
  rep.exponent = exponent_for_r(rep.r);
  rep.p = primorial(rep.r);
  const Float50 pf(rep.p);
  const Float50 f = pf * (log(pf - 1) + 2) / (Float50("0.99") * sqrt(pf) - 1);
  rep.f_p = static_cast<double>(f);
  rep.n0 = static_cast<BigInt>(ceil(f));
  rep.stated_n0 = stated_N0(rep.r);
  rep.s_hint = 1;
  return rep;
}

double rankin_t(RankinKind kind, double param) {
  switch (kind) {
    case RankinKind::Omega:
      if (!(param > 1.0)) throw InvalidInput("omega kind needs u > 1");
      return std::log(param);
    case RankinKind::TauLower:
    case RankinKind::TauUpper: {
      if (!(param >= 4.0)) throw InvalidInput("tau kinds need r >= 4");
      const double lower = std::log((1.0 - 1.0 / param) / std::log(2.0)) / std::log(2.0);
      const double t = kind == RankinKind::TauLower ? lower : 1.0 - lower;
      if (!(t > 0.0)) throw InvalidInput("optimal t is not positive");
      return t;
    }
  }
  throw InvalidInput("unknown kind");
}

SeriesValue S_series_truncated(double t, const PrimeTuple& ctx, std::size_t max_degree, std::size_t max_nu) {
  if (max_degree == 0 || max_nu < 2) throw InvalidInput("need max_degree >= 1 and max_nu >= 2");
  SeriesValue out;
  out.max_degree = max_degree;
  out.max_nu = max_nu;
  const double vplus = static_cast<double>(max_nu);
  for (const auto& prime : ctx.primes()) {
    const double p = prime.value();
    for (std::size_t j = 1; j <= max_degree; ++j) {
      // count(p, j) p^(-j nu) = density * p^(-j (nu - 1))
      const double density = irreducible_density(prime, j, false);
      const double x = std::pow(p, -static_cast<double>(j));
      double xpow = x;
      for (std::size_t nu = 2; nu <= max_nu; ++nu) {
        out.value += density * std::pow(static_cast<double>(nu + 1), t) * xpow;
        xpow *= x;
      }
      // nu > max_nu: count <= p^j / j, then a geometric bound in nu.
      const double ratio = std::pow((vplus + 3.0) / (vplus + 2.0), tplus(t)) * x;
      const double first = std::pow(vplus + 2.0, t) * std::pow(x, vplus) / static_cast<double>(j);
      out.error_bound += ratio < 1.0 ? first / (1.0 - ratio) : std::numeric_limits<double>::infinity();
    }
    // Degrees above max_degree: sum_{j > J} p^(-j (nu - 1)) / j <= 2 p^(-(J + 1)(nu - 1)) / (J + 1).
    const double y = std::pow(p, -static_cast<double>(max_degree + 1));
    out.error_bound += 2.0 / static_cast<double>(max_degree + 1) * nu_series_upper(t, y);
  }
  return out;
}

SeriesValue S_series(double t, const PrimeTuple& ctx, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be > 0");
  std::size_t j = 8, v = 8;
  for (;;) {
    SeriesValue s = S_series_truncated(t, ctx, j, v);
    if (s.error_bound <= tol) return s;
    if (j > 4096 || v > 1u << 20) throw InvalidInput("cannot certify S_t to the requested tolerance");
    j *= 2;
    v *= 2;
  }
}

}  // namespace irrlab
