#pragma once

#include <cstddef>
#include <memory>

#include "irrlab/lab/degree_set.hpp"
#include "irrlab/monic_poly.hpp"

namespace irrlab::lab {

/// Distinct-degree factorization of f run one degree at a time. After k
/// steps every irreducible factor of degree <= k is known, and the divisor
/// degrees of f are enclosed between lower() and upper().
class DegreeRefiner {
 public:
  virtual ~DegreeRefiner() = default;

  /// Whether the factor degrees are fully known (lower() == upper()).
  virtual bool settled() const = 0;
  /// Settles the next degree; no-op once settled.
  virtual void step() = 0;
  std::size_t steps() const noexcept { return k_; }
  /// Degree at which the refiner is expected to settle.
  virtual std::size_t expected_finish() const = 0;

  /// Divisor degrees known to be attainable.
  DegreeSet lower() const;
  /// Every attainable divisor degree is in here.
  DegreeSet upper() const;

 protected:
  explicit DegreeRefiner(std::size_t n) : known_(n) { known_.insert(0); }

  struct Rest {
    std::size_t degree;
    unsigned multiplicity;
  };
  void record_factor(std::size_t degree, unsigned multiplicity);

  std::size_t k_ = 0;
  DegreeSet known_;
  std::vector<Rest> rests_;
};

std::unique_ptr<DegreeRefiner> make_degree_refiner(const MonicPoly& f);

}  // namespace irrlab::lab
