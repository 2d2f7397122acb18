#include "irrlab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "irrlab/errors.hpp"
#include "irrlab/irreducibles.hpp"

namespace irrlab {

namespace {

struct Atom {
  std::uint64_t mask;  // bit k set when irreducible k divides A / D
  Rational weight;
};

}  // namespace

SieveReport verify_sieve_truncation(const Distribution& dist, const PTuple& d, std::size_t m, std::uint64_t budget) {
  if (m == 0) throw InvalidInput("m must be >= 1");
  const PrimeTuple& ctx = dist.ctx();
  if (d.ctx() != ctx) throw InvalidInput("D is over a different prime list");

  std::vector<PTuple> irr;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    for (const auto& f : enumerate_irreducibles(ctx[i], m, true, budget)) irr.push_back(PTuple::embed(ctx, i, f));
  }
  if (irr.size() > 64) {
    throw BudgetExceeded("sieve over " + std::to_string(irr.size()) + " irreducibles exceeds the 64-irreducible limit");
  }

  SieveReport rep;
  rep.m = m;
  rep.irreducible_count = irr.size();
  rep.sigma_m = sigma_m(ctx, m);
  rep.pi_m = pi_m(ctx, m);
  rep.ell0 = static_cast<std::size_t>(std::ceil(2.0 * rep.sigma_m));
  rep.error_cutoff = static_cast<std::size_t>(std::floor(4.0 * rep.sigma_m + 2.0));

  std::vector<Atom> atoms;
  rep.exact = 0;
  for (const auto& a : dist.atoms()) {
    if (!divides(d, a.tuple)) continue;
    const PTuple rest = quotient(a.tuple, d);
    if (friable_profile(rest, m).friable_part.is_unit()) rep.exact += a.weight;
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < irr.size(); ++k) {
      if (divides(irr[k], rest)) mask |= std::uint64_t{1} << k;
    }
    atoms.push_back({mask, a.weight});
  }

  const BigInt norm_d = norm(d);
  Rational pi_exact = 1;
  for (const auto& g : irr) pi_exact *= Rational(1) - inverse_norm(g);

  const std::size_t upper_len = 2 * rep.ell0;
  const std::size_t max_len = std::min(irr.size(), std::max(upper_len, rep.error_cutoff));
  rep.lower = rep.upper = rep.benchmark_lower = rep.benchmark_upper = rep.error_sum = 0;

  // Depth-first over increasing index sets J, carrying the norm of prod J.
  struct Frame {
    std::size_t next;
    std::size_t len;
    std::uint64_t mask;
    BigInt norm;
  };
  std::vector<Frame> stack{{0, 0, 0, BigInt(1)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (++rep.products_enumerated > budget) {
      throw BudgetExceeded("sieve product enumeration exceeds budget " + std::to_string(budget));
    }
    Rational prob = 0;
    for (const auto& a : atoms) {
      if ((a.mask & f.mask) == f.mask) prob += a.weight;
    }
    const Rational bench(BigInt(1), f.norm * norm_d);
    const int sign = f.len % 2 == 0 ? 1 : -1;
    if (f.len + 1 <= upper_len) {
      rep.lower += sign * prob;
      rep.benchmark_lower += sign * bench;
    }
    if (f.len <= upper_len) {
      rep.upper += sign * prob;
      rep.benchmark_upper += sign * bench;
    }
    if (f.len <= rep.error_cutoff) rep.error_sum += abs(prob - bench);
    if (f.len == max_len) continue;
    for (std::size_t k = irr.size(); k-- > f.next;) {
      stack.push_back({k + 1, f.len + 1, f.mask | (std::uint64_t{1} << k), f.norm * norm(irr[k])});
    }
  }

  const Rational pi_over_d = pi_exact / Rational(norm_d);
  rep.bound = 2.0 * rep.pi_m / norm_d.convert_to<double>() + to_double(rep.error_sum);
  rep.sandwich_holds = rep.lower <= rep.exact && rep.exact <= rep.upper;
  rep.benchmark_sandwich_holds = rep.benchmark_lower <= pi_over_d && pi_over_d <= rep.benchmark_upper;
  rep.bound_holds = to_double(rep.exact) <= rep.bound;
  return rep;
}

}  // namespace irrlab
