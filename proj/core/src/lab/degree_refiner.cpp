#include "degree_refiner.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "../ddf.hpp"
#include "../monic_access.hpp"

namespace irrlab::lab {

namespace {

using detail::Coeffs;

template <class M>
class RefinerImpl final : public DegreeRefiner {
 public:
  RefinerImpl(const M& m, const Coeffs& f) : DegreeRefiner(f.size() - 1) {
    for (auto& part : detail::squarefree_decomposition(m, f)) {
      parts_.push_back({detail::DdfCursor<M>(m, part.poly, true), part.multiplicity, false});
    }
    collect();
  }

  bool settled() const override { return rests_.empty(); }

  std::size_t expected_finish() const override {
    std::size_t e = k_;
    for (const auto& s : parts_) {
      if (!s.closed) e = std::max(e, s.cursor.expected_finish());
    }
    return e;
  }

  void step() override {
    if (settled()) return;
    std::vector<detail::DegreePart> found;
    for (auto& s : parts_) {
      if (s.closed) continue;
      found.clear();
      s.cursor.advance(std::numeric_limits<std::size_t>::max(), found);
      for (const auto& dp : found) {
        for (std::size_t i = 0; i < (dp.product.size() - 1) / dp.degree; ++i) record_factor(dp.degree, s.multiplicity);
      }
      k_ = s.cursor.settled();
    }
    collect();
  }

 private:
  struct Part {
    detail::DdfCursor<M> cursor;
    unsigned multiplicity;
    bool closed;
  };

  // A finished rest is 1 or irreducible and becomes a known factor.
  void collect() {
    rests_.clear();
    for (auto& s : parts_) {
      if (s.closed) continue;
      const std::size_t d = s.cursor.rest_degree();
      if (s.cursor.finished()) {
        if (d > 0) record_factor(d, s.multiplicity);
        s.closed = true;
      } else {
        rests_.push_back({d, s.multiplicity});
      }
    }
  }

  std::vector<Part> parts_;
};

}  // namespace

void DegreeRefiner::record_factor(std::size_t degree, unsigned multiplicity) {
  for (unsigned i = 0; i < multiplicity; ++i) known_.add_shifted(degree);
}

DegreeSet DegreeRefiner::lower() const {
  DegreeSet s = known_;
  for (const auto& r : rests_) {
    for (unsigned i = 0; i < r.multiplicity; ++i) s.add_shifted(r.degree);
  }
  return s;
}

DegreeSet DegreeRefiner::upper() const {
  DegreeSet s = known_;
  for (const auto& r : rests_) {
    // Proper sub-products of the rest have degree in [k + 1, total - k - 1].
    const std::size_t total = r.degree * r.multiplicity;
    DegreeSet next = s;
    next.add_shifted(total);
    if (total >= 2 * (k_ + 1)) {
      DegreeSet mid = s;
      mid.add_shift_range(k_ + 1, total - k_ - 1);
      for (auto v : mid.to_vector()) next.insert(v);
    }
    s = std::move(next);
  }
  return s;
}

std::unique_ptr<DegreeRefiner> make_degree_refiner(const MonicPoly& f) {
  const Coeffs& c = MonicPolyAccess::raw(f);
  return detail::with_modulus(f.modulus().value(), [&](const auto& m) -> std::unique_ptr<DegreeRefiner> {
    return std::make_unique<RefinerImpl<std::decay_t<decltype(m)>>>(m, c);
  });
}

}  // namespace irrlab::lab
