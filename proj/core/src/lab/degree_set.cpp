#include "irrlab/lab/degree_set.hpp"

#include <bit>

#include "irrlab/errors.hpp"
#include "irrlab/factor.hpp"

namespace irrlab::lab {

DegreeSet::DegreeSet(std::size_t max_value) : max_(max_value), words_(max_value / 64 + 1, 0) {}

void DegreeSet::insert(std::size_t v) {
  if (v > max_) throw InvalidInput("value above the set's range");
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

bool DegreeSet::contains(std::size_t v) const noexcept { return v <= max_ && (words_[v / 64] >> (v % 64) & 1u); }

void DegreeSet::add_shifted(std::size_t k) {
  if (k == 0) return;
  const std::size_t ws = k / 64, bs = k % 64;
  for (std::size_t i = words_.size(); i-- > ws;) {
    std::uint64_t w = words_[i - ws] << bs;
    if (bs != 0 && i > ws) w |= words_[i - ws - 1] >> (64 - bs);
    words_[i] |= w;
  }
  restrict_to(0, max_);
}

void DegreeSet::add_shift_range(std::size_t lo, std::size_t hi) {
  if (lo > hi || lo > max_) return;
  // v is reached when some member lies in [v - hi, v - lo].
  std::vector<std::size_t> prefix(max_ + 2, 0);
  for (std::size_t v = 0; v <= max_; ++v) prefix[v + 1] = prefix[v] + (contains(v) ? 1 : 0);
  for (std::size_t v = lo; v <= max_; ++v) {
    const std::size_t a = v >= hi ? v - hi : 0;
    const std::size_t b = v - lo;
    if (prefix[b + 1] > prefix[a]) words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

void DegreeSet::intersect_with(const DegreeSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
}

void DegreeSet::restrict_to(std::size_t lo, std::size_t hi) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::size_t base = i * 64;
    std::uint64_t keep = ~std::uint64_t{0};
    if (lo > base) keep &= lo - base >= 64 ? 0 : ~std::uint64_t{0} << (lo - base);
    if (hi < base + 63) keep &= hi < base ? 0 : ~std::uint64_t{0} >> (63 - (hi - base));
    words_[i] &= keep;
  }
}

bool DegreeSet::empty() const noexcept {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

std::size_t DegreeSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> DegreeSet::to_vector() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w; w &= w - 1) out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

DegreeSet attainable_from_degrees(std::span<const std::size_t> degrees, std::size_t total) {
  DegreeSet s(total);
  s.insert(0);
  for (auto d : degrees) s.add_shifted(d);
  return s;
}

DegreeSet attainable_degrees(const MonicPoly& f) {
  const auto degrees = factor_degrees(f);
  return attainable_from_degrees(degrees, f.degree());
}

}  // namespace irrlab::lab
