#include "irrlab/monic_poly.hpp"

#include <charconv>
#include <string>

#include "irrlab/errors.hpp"
#include "monic_access.hpp"

namespace irrlab {

namespace {

void require_same_field(const MonicPoly& a, const MonicPoly& b) {
  if (a.modulus() != b.modulus()) throw InvalidInput("polynomials over different fields");
}

}  // namespace

MonicPoly::MonicPoly(Prime p) : p_(p), coeffs_{1} {}

MonicPoly MonicPoly::x(Prime p) { return MonicPoly(p, {0, 1}); }

MonicPoly MonicPoly::from_residues(Prime p, std::vector<std::uint32_t> coeffs) {
  for (auto c : coeffs) {
    if (c >= p.value()) throw InvalidInput("residue out of range for modulus " + std::to_string(p.value()));
  }
  detail::trim(coeffs);
  if (coeffs.empty() || coeffs.back() != 1) throw InvalidInput("polynomial is not monic");
  return MonicPoly(p, std::move(coeffs));
}

MonicPoly MonicPoly::from_integers(Prime p, std::span<const std::int64_t> coeffs) {
  std::vector<std::uint32_t> residues(coeffs.size());
  const std::int64_t q = p.value();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t r = coeffs[i] % q;
    if (r < 0) r += q;
    residues[i] = static_cast<std::uint32_t>(r);
  }
  return from_residues(p, std::move(residues));
}

MonicPoly MonicPoly::parse(Prime p, std::string_view text) {
  std::vector<std::int64_t> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidInput("bad coefficient '" + std::string(tok) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (values.empty()) throw InvalidInput("empty polynomial text");
  return from_integers(p, values);
}

std::string MonicPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

MonicPoly operator*(const MonicPoly& a, const MonicPoly& b) {
  require_same_field(a, b);
  return detail::with_modulus(a.p_.value(), [&](const auto& m) {
    return MonicPoly(a.p_, detail::mul(m, a.coeffs_, b.coeffs_));
  });
}

std::strong_ordering operator<=>(const MonicPoly& a, const MonicPoly& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  return a.coeffs_ <=> b.coeffs_;
}

bool divides(const MonicPoly& d, const MonicPoly& f) {
  require_same_field(d, f);
  if (d.degree() > f.degree()) return false;
  if (d.is_one()) return true;
  return detail::with_modulus(f.modulus().value(), [&](const auto& m) {
    detail::Coeffs r = MonicPolyAccess::raw(f);
    detail::rem_monic_inplace(m, r, MonicPolyAccess::raw(d));
    return r.empty();
  });
}

MonicPoly quotient(const MonicPoly& f, const MonicPoly& d) {
  require_same_field(d, f);
  if (d.degree() > f.degree()) throw InvalidInput("divisor does not divide");
  if (d.is_one()) return f;
  return detail::with_modulus(f.modulus().value(), [&](const auto& m) {
    detail::Coeffs r = MonicPolyAccess::raw(f);
    detail::Coeffs q;
    detail::rem_monic_inplace(m, r, MonicPolyAccess::raw(d), &q);
    if (!r.empty()) throw InvalidInput("divisor does not divide");
    return MonicPolyAccess::make(f.modulus(), std::move(q));
  });
}

MonicPoly gcd(const MonicPoly& a, const MonicPoly& b) {
  require_same_field(a, b);
  return detail::with_modulus(a.modulus().value(), [&](const auto& m) {
    return MonicPolyAccess::make(a.modulus(), detail::gcd(m, MonicPolyAccess::raw(a), MonicPolyAccess::raw(b)));
  });
}

MonicPoly pow(const MonicPoly& f, unsigned e) {
  MonicPoly result(f.modulus());
  MonicPoly base = f;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::vector<MonicPoly> all_monic_of_degree(Prime p, std::size_t k, std::uint64_t budget) {
  const std::uint64_t q = p.value();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > budget / q) {
      throw BudgetExceeded("enumerating monic polynomials of degree " + std::to_string(k) + " over F_" +
                           std::to_string(q) + " exceeds budget " + std::to_string(budget));
    }
    count *= q;
  }
  std::vector<MonicPoly> out;
  out.reserve(count);
  // Odometer with c0 most significant gives canonical order directly.
  detail::Coeffs c(k + 1, 0);
  c[k] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    out.push_back(MonicPolyAccess::make(p, c));
    for (std::size_t pos = k; pos-- > 0;) {
      if (++c[pos] < q) break;
      c[pos] = 0;
    }
  }
  return out;
}

}  // namespace irrlab
