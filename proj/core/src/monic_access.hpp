#pragma once

#include <utility>

#include "fp_engine.hpp"
#include "irrlab/monic_poly.hpp"

namespace irrlab {

/// Bridge between MonicPoly and the raw engine. Callers guarantee `c` is
/// canonical and monic.
struct MonicPolyAccess {
  static MonicPoly make(Prime p, detail::Coeffs c) { return MonicPoly(p, std::move(c)); }
  static const detail::Coeffs& raw(const MonicPoly& f) { return f.coeffs_; }
};

}  // namespace irrlab
