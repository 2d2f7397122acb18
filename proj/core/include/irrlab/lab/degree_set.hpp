#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "irrlab/monic_poly.hpp"

namespace irrlab::lab {

/// Subset of [0, max_value] stored as a bitset.
class DegreeSet {
 public:
  explicit DegreeSet(std::size_t max_value);

  std::size_t max_value() const noexcept { return max_; }
  void insert(std::size_t v);
  bool contains(std::size_t v) const noexcept;
  /// this |= this << k, dropping values above max_value.
  void add_shifted(std::size_t k);
  /// this |= this + [lo, hi], dropping values above max_value.
  void add_shift_range(std::size_t lo, std::size_t hi);
  void intersect_with(const DegreeSet& other);
  /// Keeps only values in [lo, hi].
  void restrict_to(std::size_t lo, std::size_t hi);
  bool empty() const noexcept;
  std::size_t count() const noexcept;
  std::vector<std::size_t> to_vector() const;

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

 private:
  std::size_t max_;
  std::vector<std::uint64_t> words_;
};

/// Sums of sub-multisets of `degrees`, within [0, total].
DegreeSet attainable_from_degrees(std::span<const std::size_t> degrees, std::size_t total);

/// Degrees of all monic divisors of f: subset sums of its irreducible factor
/// degrees counted with multiplicity.
DegreeSet attainable_degrees(const MonicPoly& f);

}  // namespace irrlab::lab
