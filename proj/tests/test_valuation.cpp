#include <gtest/gtest.h>

#include <random>

#include "hypint/criterion.hpp"
#include "hypint/valuation.hpp"
#include "oracles.hpp"

using namespace hypint;
using oracle::fact;

namespace {

std::int64_t slow_factorial_valuation(std::int64_t n, std::int64_t p) {
  std::int64_t v = 0;
  for (std::int64_t k = 2; k <= n; ++k)
    for (std::int64_t x = k; x % p == 0; x /= p) ++v;
  return v;
}

}  // namespace

TEST(Legendre, SmallValues) {
  EXPECT_EQ(legendre_valuation(4, 2), 3);
  EXPECT_EQ(legendre_valuation(30, 5), 7);
  EXPECT_EQ(legendre_valuation(0, 3), 0);
  EXPECT_THROW(legendre_valuation(10, 4), DomainError);
  for (std::int64_t p : {2, 3, 5, 7, 11})
    for (std::int64_t n = 0; n <= 200; ++n) EXPECT_EQ(legendre_valuation(n, p), slow_factorial_valuation(n, p));
}

TEST(Legendre, RatioFamilyAtOne) {
  // E(1) = 30! 1! / (15! 10! 6!) has 7-adic valuation 4 - 2 - 1 - 0.
  const Rat e = oracle::ratio(fact(30), fact(15) * fact(10) * fact(6));
  EXPECT_EQ(e.get_den(), 1);
  EXPECT_EQ(exact_valuation(e, 7), 1);
  EXPECT_EQ(coeff_valuation({1, 30, 1, 15, 10, 6, 1}, 3, 7), 1);
}

TEST(Legendre, CubicCoefficientNine) {
  const Vec l{3, 3, 1, 2, 2, 1};
  EXPECT_EQ(series_coefficient(l, 2), Rat(9));
  EXPECT_EQ(coeff_valuation(l, 2, 2), 0);
  EXPECT_EQ(coeff_valuation(l, 2, 3), 2);
}

TEST(Legendre, AgreesWithExactValuation) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::size_t N = 1 + rng() % 5, M = rng() % (N + 1);
    Vec l(N);
    for (auto& x : l) x = static_cast<std::int64_t>(rng() % 40);
    const Rat c = series_coefficient(l, M);
    for (std::int64_t p : {2, 3, 5, 7, 13}) EXPECT_EQ(coeff_valuation(l, M, p), exact_valuation(c, p));
  }
}

TEST(Integrality, CubicParametersPass) {
  LatticeConfig cfg = oracle::cubic();
  for (const Vec& u : {Vec{-1, -2, -2, -1, -2}, Vec{-2, -1, -1, -2, -2}})
    EXPECT_TRUE(verify_p_integrality(cfg, u, 12).all_pass()) << join(u);
}

TEST(Integrality, NegativeControlWitnessAtMOne) {
  RatioFamily fam({{1}, {1}}, {{2}});
  LatticeConfig cfg = build_config(fam);
  VerificationReport rep = verify_p_integrality(cfg, negate(cfg.beta()), 6, {2}, false);
  bool found = false;
  for (const auto& r : rep.records())
    if (r.tag == "p-integral" && r.status == Status::Fail) {
      found = true;
      EXPECT_NE(r.witness.find("l=(1,1,1,2,1)"), std::string::npos) << r.witness;
    }
  EXPECT_TRUE(found);
}
