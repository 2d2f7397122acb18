#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irrlab/int_poly.hpp"
#include "irrlab/ptuple.hpp"

namespace irrlab::lab {

enum class Verdict { CertifiedIrreducible, ReducibleWitness, Unknown };
const char* to_string(Verdict v);

struct Witness {
  enum class Kind { X, Cyclotomic };
  Kind kind = Kind::X;
  /// Cyclotomic index; 0 for X.
  std::uint64_t d = 0;

  IntPoly divisor() const;
  std::string description() const;
};

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::optional<Witness> witness;
  std::vector<std::uint32_t> primes_used;
  /// Attainable factor degrees of A mod p for each prime examined, in order.
  /// With stop_early these are supersets: degrees not yet ruled out when the
  /// verdict settled.
  std::vector<std::vector<std::size_t>> attainable_sets;
  /// Degrees in [1, n/2] attainable modulo every examined prime. With
  /// stop_early, a nonempty subset of them for Unknown.
  std::vector<std::size_t> common_degrees;
};

struct CertifyOptions {
  /// Cyclotomic witnesses Phi_d are tried for every d with phi(d) <= bound.
  std::uint64_t cyclotomic_bound = 16;
  /// Factor modulo all primes together one degree at a time and stop as
  /// soon as the common degrees are provably empty or provably nonempty.
  /// The verdict is the same either way.
  bool stop_early = false;
};

/// Exact reducibility witnesses first (X, then Phi_d with phi(d) < n), then
/// the multi-prime attainable-degree filter over [1, n/2]. Throws
/// InvalidInput unless A is monic of degree >= 2.
Certificate certify(const IntPoly& a, const PrimeTuple& primes, const CertifyOptions& opts = {});
Certificate certify(std::span<const std::int64_t> coeffs, const PrimeTuple& primes, const CertifyOptions& opts = {});

/// Whether Phi_d divides A over Z.
bool cyclotomic_divides(std::span<const std::int64_t> coeffs, std::uint64_t d);
bool cyclotomic_divides(const IntPoly& a, std::uint64_t d);

/// Recomputes the witness's divisor and checks the remainder is zero.
bool witness_divides(const IntPoly& a, const Witness& w);

}  // namespace irrlab::lab
