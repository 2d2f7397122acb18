#include "irrlab/int_poly.hpp"

#include <algorithm>
#include <string>

#include "irrlab/errors.hpp"
#include "monic_access.hpp"

namespace irrlab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(std::size_t n) {
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<BigInt> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string tok(text.substr(0, comma));
    const auto first = tok.find_first_not_of(' ');
    const auto last = tok.find_last_not_of(' ');
    tok = first == std::string::npos ? std::string() : tok.substr(first, last - first + 1);
    const std::size_t digits_from = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (tok.size() == digits_from || tok.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      throw InvalidInput("bad coefficient '" + tok + "'");
    }
    if (tok[0] == '+') tok.erase(0, 1);
    values.emplace_back(tok);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (values.empty()) throw InvalidInput("empty polynomial text");
  return IntPoly(std::move(values));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntDivision int_poly_divrem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero() || b.degree() == 0 || !b.is_monic()) throw InvalidInput("divisor must be monic of degree >= 1");
  const auto& bc = b.coeffs();
  const std::size_t db = b.degree();
  std::vector<BigInt> r = a.coeffs();
  if (r.size() <= db) return {IntPoly{}, a};
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t i = r.size() - 1;; --i) {
    const BigInt c = r[i];
    if (c != 0) {
      q[i - db] = c;
      for (std::size_t j = 0; j < db; ++j) {
        if (bc[j] != 0) r[i - db + j] -= c * bc[j];
      }
    }
    if (i == db) break;
  }
  r.resize(db);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly int_poly_rem(const IntPoly& a, const IntPoly& b) { return int_poly_divrem(a, b).remainder; }

MonicPoly reduce_mod(const IntPoly& a, Prime p) {
  if (!a.is_monic()) throw InvalidInput("reduce_mod needs a monic polynomial");
  const BigInt q = p.value();
  detail::Coeffs c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    BigInt r = a.coeffs()[i] % q;
    if (r < 0) r += q;
    c[i] = r.convert_to<std::uint32_t>();
  }
  return MonicPolyAccess::make(p, std::move(c));
}

}  // namespace irrlab
