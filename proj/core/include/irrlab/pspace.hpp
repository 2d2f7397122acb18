#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "irrlab/bigint.hpp"
#include "irrlab/ptuple.hpp"

namespace irrlab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// Visits every tuple with degree vector `d`, component 0 outermost, each
/// component in canonical order. Throws BudgetExceeded when the class has
/// more than `budget` elements.
void for_each_in_space(const PrimeTuple& ctx, const DegreeVec& d, const std::function<void(const PTuple&)>& visit,
                       std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<PTuple> enumerate_space(const PrimeTuple& ctx, const DegreeVec& d,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// All divisors of `a`, in the same component-major canonical order.
std::vector<PTuple> divisors(const PTuple& a, std::uint64_t budget = kDefaultEnumerationBudget);

struct WeightedTuple {
  PTuple tuple;
  Rational weight;
};

/// A finitely supported law on tuples over one prime list. Weights are exact
/// rationals; repeated tuples are merged.
class Distribution {
 public:
  /// Throws InvalidInput on an empty list, mixed contexts, negative weights,
  /// or a total weight farther than `tolerance` from 1.
  explicit Distribution(std::vector<WeightedTuple> atoms, double tolerance = 1e-12);

  /// Double weights are converted exactly (every double is a dyadic rational).
  static Distribution from_doubles(const std::vector<std::pair<PTuple, double>>& atoms, double tolerance = 1e-12);
  static Distribution uniform(const PrimeTuple& ctx, const DegreeVec& d, std::uint64_t budget = kDefaultEnumerationBudget);
  static Distribution point(const PTuple& a);

  const PrimeTuple& ctx() const noexcept { return atoms_.front().tuple.ctx(); }
  const std::vector<WeightedTuple>& atoms() const noexcept { return atoms_; }
  const Rational& total_weight() const noexcept { return total_; }

  /// P(B | A): the weight of tuples that `b` divides.
  Rational probability_divisible(const PTuple& b) const;

 private:
  std::vector<WeightedTuple> atoms_;
  Rational total_;
};

/// Sum over X_i-free tuples B with every component degree <= m of
/// |P(B | A) - 1 / norm(B)|, exactly. Throws BudgetExceeded when the number of
/// (atom, divisor) pairs to visit exceeds `budget`.
Rational delta_spread(const Distribution& dist, std::size_t m, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace irrlab
