#include <doctest.h>

#include <set>
#include <vector>

#include "irrlab/cyclotomic.hpp"
#include "irrlab/errors.hpp"
#include "irrlab/factor.hpp"
#include "irrlab/int_poly.hpp"
#include "irrlab/irreducibles.hpp"
#include "irrlab/monic_poly.hpp"
#include "irrlab/prime.hpp"
#include "support/oracles.hpp"

using namespace irrlab;

namespace {

MonicPoly mp(std::uint64_t p, const char* text) { return MonicPoly::parse(Prime(p), text); }

oracle::Poly dense(const MonicPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

MonicPoly random_monic(oracle::Rng& rng, std::uint64_t p, std::size_t deg) {
  std::vector<std::uint32_t> c(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) c[i] = static_cast<std::uint32_t>(rng.below(p));
  c[deg] = 1;
  return MonicPoly::from_residues(Prime(p), c);
}

}  // namespace

TEST_CASE("prime rejects composites and accepts primes") {
  CHECK_THROWS_AS(Prime(1), InvalidInput);
  CHECK_THROWS_AS(Prime(9), InvalidInput);
  CHECK_THROWS_AS(Prime(4294967291ULL), InvalidInput);
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(2147483647).value() == 2147483647u);
}

TEST_CASE("monic poly canonical form") {
  const auto f = mp(5, "7,-1,1");
  CHECK(f.to_string() == "2,4,1");
  CHECK(MonicPoly::one(Prime(3)).degree() == 0);
  CHECK_THROWS_AS(MonicPoly::from_residues(Prime(3), {1, 2}), InvalidInput);
  CHECK_THROWS_AS(MonicPoly::from_residues(Prime(3), {3, 1}), InvalidInput);
  CHECK(MonicPoly::from_residues(Prime(3), {1, 1, 0}).degree() == 1);
}

TEST_CASE("reduce_mod examples") {
  const IntPoly a = IntPoly::parse("6,5,1");
  CHECK(reduce_mod(a, Prime(2)).to_string() == "0,1,1");
  CHECK(reduce_mod(a, Prime(5)).to_string() == "1,0,1");
  for (std::size_t n : {1, 4, 9}) {
    CHECK(reduce_mod(IntPoly::monomial(n), Prime(3)) == pow(MonicPoly::x(Prime(3)), static_cast<unsigned>(n)));
  }
  CHECK_THROWS_AS(reduce_mod(IntPoly::parse("1,2"), Prime(3)), InvalidInput);
  CHECK(reduce_mod(IntPoly::parse("-1,-4,1"), Prime(3)).to_string() == "2,2,1");
}

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(mp(2, "1,1,1")));
  CHECK_FALSE(is_irreducible(mp(2, "1,0,1")));
  for (std::uint64_t p : {2, 3, 7, 101}) CHECK(is_irreducible(mp(p, "1,1")));
  CHECK_THROWS_AS(is_irreducible(MonicPoly::one(Prime(5))), InvalidInput);
}

TEST_CASE("factor examples") {
  const auto f1 = factor(mp(2, "0,1,1"));
  REQUIRE(f1.size() == 2);
  CHECK(f1.factors()[0] == FactorPower{mp(2, "0,1"), 1});
  CHECK(f1.factors()[1] == FactorPower{mp(2, "1,1"), 1});

  const auto f2 = factor(mp(2, "1,0,1,0,1"));
  REQUIRE(f2.size() == 1);
  CHECK(f2.factors()[0] == FactorPower{mp(2, "1,1,1"), 2});

  CHECK(factor(MonicPoly::one(Prime(7))).empty());
}

TEST_CASE("factor is seed independent and canonical") {
  oracle::Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto f = random_monic(rng, 1009, 20 + rng.below(30));
    const auto a = factor(f, 1);
    CHECK(a == factor(f, 2));
    CHECK(a.reconstruct(Prime(1009)) == f);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a.factors()[i - 1].factor < a.factors()[i].factor);
    for (const auto& fp : a) CHECK(is_irreducible(fp.factor));
  }
}

TEST_CASE("property: factor(f g) reconstructs and multiplicities add") {
  oracle::Rng rng(2024);
  for (std::uint64_t p : {2, 3, 5, 7, 31}) {
    for (int t = 0; t < 25; ++t) {
      const auto f = random_monic(rng, p, 1 + rng.below(12));
      const auto g = random_monic(rng, p, 1 + rng.below(12));
      const auto ff = factor(f), fg = factor(g), fp = factor(f * g);
      CHECK(fp.reconstruct(Prime(p)) == f * g);
      std::set<MonicPoly> all;
      for (const auto& x : ff) all.insert(x.factor);
      for (const auto& x : fg) all.insert(x.factor);
      for (const auto& x : fp) all.insert(x.factor);
      for (const auto& irr : all) {
        CHECK(fp.multiplicity_of(irr) == ff.multiplicity_of(irr) + fg.multiplicity_of(irr));
      }
    }
  }
}

TEST_CASE("property: is_irreducible agrees with trial division over F_2 and F_3 up to degree 8") {
  for (std::uint64_t p : {2, 3}) {
    for (std::size_t k = 1; k <= 8; ++k) {
      if (p == 3 && k == 8) {
        // 3^8 polynomials: sample a deterministic third of them.
        oracle::Rng rng(k);
        for (int t = 0; t < 2200; ++t) {
          const auto f = random_monic(rng, p, k);
          CHECK(is_irreducible(f) == oracle::irreducible_by_trial_division(dense(f), p));
        }
        continue;
      }
      for (const auto& g : oracle::monics(static_cast<std::int64_t>(p), k)) {
        std::vector<std::uint32_t> c(g.begin(), g.end());
        const auto f = MonicPoly::from_residues(Prime(p), c);
        CHECK(is_irreducible(f) == oracle::irreducible_by_trial_division(g, p));
      }
    }
  }
}

TEST_CASE("property: factor_degrees agrees with trial division") {
  oracle::Rng rng(5);
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    for (int t = 0; t < 60; ++t) {
      const auto f = random_monic(rng, p, 1 + rng.below(p == 2 ? 16 : 10));
      CHECK(factor_degrees(f) == oracle::factor_degrees_by_trial_division(dense(f), p));
    }
  }
}

TEST_CASE("factor_degrees on large degrees matches factor") {
  oracle::Rng rng(99);
  for (std::uint64_t p : {2, 3, 5, 7, 65537}) {
    for (int t = 0; t < 6; ++t) {
      const auto f = random_monic(rng, p, 60 + rng.below(80));
      std::vector<std::size_t> expect;
      for (const auto& fp : factor(f)) expect.insert(expect.end(), fp.multiplicity, fp.factor.degree());
      std::sort(expect.begin(), expect.end());
      CHECK(factor_degrees(f) == expect);
    }
  }
}

TEST_CASE("factor_up_to_degree splits off the small factors") {
  const auto f = mp(2, "1,1") * mp(2, "1,1") * mp(2, "1,1,1") * mp(2, "1,1,0,1");
  const auto pf = factor_up_to_degree(f, 2);
  CHECK(pf.small.multiplicity_of(mp(2, "1,1")) == 2);
  CHECK(pf.small.multiplicity_of(mp(2, "1,1,1")) == 1);
  CHECK(pf.cofactor == mp(2, "1,1,0,1"));
}

TEST_CASE("count_irreducibles examples") {
  CHECK(count_irreducibles(Prime(2), 2, false) == 1);
  CHECK(count_irreducibles(Prime(2), 1, true) == 1);
  CHECK(count_irreducibles(Prime(3), 2, false) == 3);
  CHECK(count_irreducibles(Prime(2), 64, false) == ((BigInt(1) << 64) - (BigInt(1) << 32)) / 64);
  CHECK(count_irreducibles(Prime(1000003), 10, false) > 0);
}

TEST_CASE("property: counts match enumeration and the prime polynomial estimate") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::size_t k = 1; k <= 8; ++k) {
      BigInt pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk *= p;
      if (pk > (std::uint64_t{1} << 24)) break;
      for (bool ex : {false, true}) {
        const auto list = enumerate_irreducibles(Prime(p), k, ex);
        std::size_t of_k = 0;
        for (const auto& g : list) of_k += g.degree() == k ? 1 : 0;
        CHECK(count_irreducibles(Prime(p), k, ex) == of_k);
      }
      const BigInt c = count_irreducibles(Prime(p), k, false);
      const double pkd = pk.convert_to<double>();
      const double kd = static_cast<double>(k);
      CHECK(c.convert_to<double>() <= pkd / kd);
      CHECK(c.convert_to<double>() >= pkd / kd - 2.0 * std::sqrt(pkd) / kd);
    }
  }
}

TEST_CASE("enumerate_irreducibles examples") {
  auto texts = [](const std::vector<MonicPoly>& v) {
    std::vector<std::string> out;
    for (const auto& f : v) out.push_back(f.to_string());
    return out;
  };
  CHECK(texts(enumerate_irreducibles(Prime(2), 2, true)) == std::vector<std::string>{"1,1", "1,1,1"});
  CHECK(texts(enumerate_irreducibles(Prime(2), 1, false)) == std::vector<std::string>{"0,1", "1,1"});
  CHECK(texts(enumerate_irreducibles(Prime(3), 1, true)) == std::vector<std::string>{"1,1", "2,1"});
  CHECK_THROWS_AS(enumerate_irreducibles(Prime(2), 30, false, 1u << 20), BudgetExceeded);
}

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic(1).to_string() == "-1,1");
  CHECK(cyclotomic(2).to_string() == "1,1");
  CHECK(cyclotomic(6).to_string() == "1,-1,1");
  CHECK(cyclotomic(105).coeff(7) == -2);
  CHECK_THROWS_AS(cyclotomic(0), InvalidInput);
}

TEST_CASE("property: sum of deg Phi_e over e | d is d") {
  for (std::uint64_t d = 1; d <= 200; ++d) {
    std::uint64_t total = 0;
    for (std::uint64_t e = 1; e <= d; ++e) {
      if (d % e == 0) total += cyclotomic(e).degree();
    }
    CHECK(total == d);
    CHECK(cyclotomic(d).degree() == euler_phi(d));
  }
}

TEST_CASE("cyclotomic_indices lists every d with phi(d) <= bound") {
  const auto idx = cyclotomic_indices(4);
  CHECK(idx == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 10, 12});
}

TEST_CASE("int_poly_rem examples") {
  CHECK(int_poly_rem(IntPoly::parse("1,1,1"), IntPoly::parse("1,1")).to_string() == "1");
  CHECK(int_poly_rem(IntPoly::parse("-1,0,0,1"), IntPoly::parse("-1,1")).is_zero());
  for (std::uint64_t d = 1; d <= 60; ++d) {
    const IntPoly xd_minus_1 = IntPoly::monomial(d) - IntPoly::parse("1");
    CHECK(int_poly_rem(xd_minus_1, cyclotomic(d)).is_zero());
  }
  CHECK_THROWS_AS(int_poly_rem(IntPoly::parse("1,1"), IntPoly::parse("1,2")), InvalidInput);
}

TEST_CASE("property: reduce_mod is a ring homomorphism on monic inputs") {
  oracle::Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    auto random_int = [&](std::size_t deg) {
      std::vector<BigInt> c(deg + 1);
      for (std::size_t i = 0; i < deg; ++i) c[i] = rng.range(-1000000, 1000000);
      c[deg] = 1;
      return IntPoly(std::move(c));
    };
    const IntPoly a = random_int(rng.below(10)), b = random_int(rng.below(10));
    for (std::uint64_t p : {2, 3, 97}) {
      CHECK(reduce_mod(a * b, Prime(p)) == reduce_mod(a, Prime(p)) * reduce_mod(b, Prime(p)));
    }
  }
}

TEST_CASE("gcd, divides and quotient") {
  const auto a = mp(7, "1,1") * mp(7, "1,0,1");
  const auto b = mp(7, "1,1") * mp(7, "2,1");
  CHECK(gcd(a, b) == mp(7, "1,1"));
  CHECK(divides(mp(7, "1,0,1"), a));
  CHECK(quotient(a, mp(7, "1,1")) == mp(7, "1,0,1"));
  CHECK_THROWS_AS(quotient(a, mp(7, "2,1")), InvalidInput);
}
