#include "irrlab/pspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "irrlab/errors.hpp"
#include "irrlab/factor.hpp"

namespace irrlab {

namespace {

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InvalidInput("weight is not finite");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an integer for every double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  if (exp >= 0) r *= Rational(BigInt(1) << exp);
  else r /= Rational(BigInt(1) << -exp);
  return r;
}

/// Divisors of one component, optionally X-free and capped in degree.
std::vector<MonicPoly> component_divisors(const MonicPoly& f, bool exclude_x, std::size_t max_degree) {
  const Prime p = f.modulus();
  const MonicPoly x = MonicPoly::x(p);
  std::vector<MonicPoly> out{MonicPoly(p)};
  for (const auto& fp : factor(f)) {
    if (exclude_x && fp.factor == x) continue;
    if (fp.factor.degree() > max_degree) continue;
    const std::size_t prev = out.size();
    MonicPoly power = fp.factor;
    for (unsigned e = 1; e <= fp.multiplicity; ++e) {
      bool any = false;
      for (std::size_t i = 0; i < prev; ++i) {
        if (out[i].degree() + power.degree() > max_degree) continue;
        out.push_back(out[i] * power);
        any = true;
      }
      if (!any) break;
      power *= fp.factor;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cartesian product of per-component lists, component 0 outermost.
template <class Visit>
void for_each_product(const PrimeTuple& ctx, const std::vector<std::vector<MonicPoly>>& lists, Visit&& visit) {
  for (const auto& l : lists) {
    if (l.empty()) return;
  }
  std::vector<std::size_t> idx(lists.size(), 0);
  std::vector<MonicPoly> comps;
  for (;;) {
    comps.clear();
    for (std::size_t i = 0; i < lists.size(); ++i) comps.push_back(lists[i][idx[i]]);
    visit(PTuple(ctx, comps));
    std::size_t pos = lists.size();
    while (pos-- > 0) {
      if (++idx[pos] < lists[pos].size()) break;
      idx[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) return;
  }
}

std::uint64_t checked_product(const std::vector<std::vector<MonicPoly>>& lists, std::uint64_t budget, const char* what) {
  std::uint64_t n = 1;
  for (const auto& l : lists) {
    if (l.empty()) return 0;
    if (n > budget / l.size()) throw BudgetExceeded(std::string(what) + " exceeds budget " + std::to_string(budget));
    n *= l.size();
  }
  return n;
}

}  // namespace

void for_each_in_space(const PrimeTuple& ctx, const DegreeVec& d, const std::function<void(const PTuple&)>& visit,
                       std::uint64_t budget) {
  if (d.size() != ctx.size()) throw InvalidInput("degree vector length does not match prime count");
  BigInt size = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    size *= boost::multiprecision::pow(BigInt(ctx[i].value()), static_cast<unsigned>(d[i]));
    if (size > budget) {
      throw BudgetExceeded("degree class of size > " + std::to_string(budget) + " exceeds the enumeration budget");
    }
  }
  std::vector<std::vector<MonicPoly>> lists;
  for (std::size_t i = 0; i < d.size(); ++i) lists.push_back(all_monic_of_degree(ctx[i], d[i], budget));
  for_each_product(ctx, lists, visit);
}

std::vector<PTuple> enumerate_space(const PrimeTuple& ctx, const DegreeVec& d, std::uint64_t budget) {
  std::vector<PTuple> out;
  for_each_in_space(ctx, d, [&](const PTuple& t) { out.push_back(t); }, budget);
  return out;
}

std::vector<PTuple> divisors(const PTuple& a, std::uint64_t budget) {
  std::vector<std::vector<MonicPoly>> lists;
  for (const auto& c : a.components()) lists.push_back(component_divisors(c, false, c.degree()));
  checked_product(lists, budget, "divisor enumeration");
  std::vector<PTuple> out;
  for_each_product(a.ctx(), lists, [&](const PTuple& t) { out.push_back(t); });
  return out;
}

Distribution::Distribution(std::vector<WeightedTuple> atoms, double tolerance) {
  if (atoms.empty()) throw InvalidInput("distribution has no atoms");
  std::map<PTuple, Rational> merged;
  const PrimeTuple& ctx = atoms.front().tuple.ctx();
  for (auto& a : atoms) {
    if (a.tuple.ctx() != ctx) throw InvalidInput("distribution mixes prime lists");
    if (a.weight < 0) throw InvalidInput("negative weight");
    merged[a.tuple] += a.weight;
  }
  total_ = 0;
  for (auto& [t, w] : merged) {
    total_ += w;
    atoms_.push_back({t, w});
  }
  if (std::abs(to_double(total_ - 1)) > tolerance) {
    throw InvalidInput("weights sum to " + std::to_string(to_double(total_)) + ", not 1");
  }
}

Distribution Distribution::from_doubles(const std::vector<std::pair<PTuple, double>>& atoms, double tolerance) {
  std::vector<WeightedTuple> w;
  for (const auto& [t, x] : atoms) w.push_back({t, exact_rational(x)});
  return Distribution(std::move(w), tolerance);
}

Distribution Distribution::uniform(const PrimeTuple& ctx, const DegreeVec& d, std::uint64_t budget) {
  auto tuples = enumerate_space(ctx, d, budget);
  const Rational w(BigInt(1), BigInt(tuples.size()));
  std::vector<WeightedTuple> atoms;
  atoms.reserve(tuples.size());
  for (auto& t : tuples) atoms.push_back({std::move(t), w});
  return Distribution(std::move(atoms));
}

Distribution Distribution::point(const PTuple& a) { return Distribution({{a, Rational(1)}}); }

Rational Distribution::probability_divisible(const PTuple& b) const {
  Rational s = 0;
  for (const auto& a : atoms_) {
    if (divides(b, a.tuple)) s += a.weight;
  }
  return s;
}

Rational delta_spread(const Distribution& dist, std::size_t m, std::uint64_t budget) {
  const PrimeTuple& ctx = dist.ctx();
  // Every X-free B of degree <= m contributes 1/norm(B) when P(B|A) = 0; the
  // sum of those benchmarks factors over the components.
  Rational total = 1;
  for (const auto& p : ctx.primes()) total *= Rational(1) + Rational(BigInt(m) * (p.value() - 1), BigInt(p.value()));

  std::map<PTuple, Rational> prob;
  std::uint64_t visited = 0;
  for (const auto& atom : dist.atoms()) {
    if (atom.weight == 0) continue;
    std::vector<std::vector<MonicPoly>> lists;
    for (const auto& c : atom.tuple.components()) lists.push_back(component_divisors(c, true, m));
    visited += checked_product(lists, budget, "delta_spread divisor enumeration");
    if (visited > budget) throw BudgetExceeded("delta_spread exceeds budget " + std::to_string(budget));
    for_each_product(ctx, lists, [&](const PTuple& b) { prob[b] += atom.weight; });
  }
  Rational delta = total;
  for (const auto& [b, pb] : prob) {
    const Rational bench = inverse_norm(b);
    delta += abs(pb - bench) - bench;
  }
  return delta;
}

}  // namespace irrlab
