#include <gtest/gtest.h>

#include <random>

#include "hypint/criterion.hpp"
#include "oracles.hpp"

using namespace hypint;
using oracle::fact;

namespace {

RatioFamily family_30() { return RatioFamily({{30}, {1}}, {{15}, {10}, {6}}); }
RatioFamily negative_control() { return RatioFamily({{1}, {1}}, {{2}}); }
RatioFamily central_binomial() { return RatioFamily({{2}}, {{1}, {1}}); }

}  // namespace

TEST(RatioFamily, RejectsInvalidFamilies) {
  try {
    RatioFamily({{2}}, {{1}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("balance"), std::string::npos);
  }
  EXPECT_THROW(RatioFamily({{0}, {1}}, {{1}}), InputError);
  EXPECT_THROW(RatioFamily({{1, 0}}, {{1, 0}}), InputError);
}

TEST(StepFunction, ValuesAtPaperPoints) {
  EXPECT_EQ(landau_phi(family_30(), {Rat(1, 30)}), 1);
  EXPECT_EQ(landau_phi(negative_control(), {Rat(1, 2)}), -1);
  EXPECT_EQ(landau_phi(central_binomial(), {Rat(1, 2)}), 1);
}

TEST(StepFunction, MatchesDirectFloorSum) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    RatioFamily fam = random_family(rng);
    for (int s = 0; s < 20; ++s) {
      RatVec x(fam.r());
      for (auto& v : x) v = oracle::ratio(static_cast<long>(rng() % 97), 97);
      std::int64_t want = 0;
      for (int side : {1, -1})
        for (const auto& row : side == 1 ? fam.C() : fam.D()) {
          Rat dot = 0;
          for (std::size_t i = 0; i < x.size(); ++i) dot += Rat(static_cast<long>(row[i])) * x[i];
          Int fl;
          mpz_fdiv_q(fl.get_mpz_t(), dot.get_num_mpz_t(), dot.get_den_mpz_t());
          want += side * fl.get_si();
        }
      EXPECT_EQ(landau_phi(fam, x), want);
    }
  }
}

TEST(LandauMin, KnownFamilies) {
  EXPECT_EQ(landau_min(family_30()).value, 0);
  EXPECT_EQ(landau_min(central_binomial()).value, 0);
  LandauMin neg = landau_min(negative_control());
  EXPECT_EQ(neg.value, -1);
  EXPECT_EQ(landau_phi(negative_control(), neg.witness), -1);
}

TEST(LandauMin, MatchesGridOracle) {
  // In one variable every breakpoint is a multiple of 1/lcm(coefficients), so
  // a grid with denominator 840 sees every value; in two variables a grid
  // only bounds the minimum from above.
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    RatioFamily fam = random_family(rng, 2, 3, 4);
    const LandauMin lm = landau_min(fam);
    EXPECT_EQ(landau_phi(fam, lm.witness), lm.value);
    for (const auto& x : lm.witness) {
      EXPECT_GE(x, 0);
      EXPECT_LT(x, 1);
    }
    std::int64_t best = 1 << 30;
    if (fam.r() == 1) {
      for (std::int64_t a = 0; a < 840; ++a) best = std::min(best, landau_phi(fam, {Rat(a, 840)}));
      EXPECT_EQ(lm.value, best) << fam.describe();
    } else {
      for (std::int64_t a = 0; a < 120; ++a)
        for (std::int64_t b = 0; b < 120; ++b) best = std::min(best, landau_phi(fam, {Rat(a, 120), Rat(b, 120)}));
      EXPECT_LE(lm.value, best) << fam.describe();
    }
  }
}

TEST(BuildConfig, RatioFamilyConfiguration) {
  LatticeConfig cfg = build_config(family_30());
  EXPECT_EQ(cfg.N(), 7u);
  EXPECT_EQ(cfg.M(), 3u);
  EXPECT_EQ(cfg.point(6), (Vec{1, 30, 1, -15, -10, -6}));
  EXPECT_EQ(cfg.height(), Vec(6, 1));
}

TEST(MinHeight, PaperValues) {
  EXPECT_EQ(*min_height(build_config(family_30()), 8).height, 3);
  EXPECT_EQ(*min_height(oracle::cubic(), 6).height, 2);
  MinHeight neg = min_height(build_config(negative_control()), 8);
  ASSERT_TRUE(neg.certified());
  EXPECT_LT(*neg.height, 3);
}

TEST(Hypothesis, HoldsExactlyForIntegralFamilies) {
  EXPECT_TRUE(hypothesis_check(build_config(family_30()), 3).holds);
  EXPECT_TRUE(hypothesis_check(oracle::cubic(), 2).holds);
  EXPECT_FALSE(hypothesis_check(build_config(negative_control()), 3).holds);
  HypothesisResult sab = hypothesis_check(LatticeConfig(oracle::cubic_points(), {0, 1, 2}), 3);
  EXPECT_FALSE(sab.holds);
  EXPECT_FALSE(sab.minimal);
}

TEST(BruteForce, FirstNonIntegralPoint) {
  EXPECT_EQ(*brute_force_nonintegral(negative_control(), 10), (Vec{1}));
  EXPECT_FALSE(brute_force_nonintegral(family_30(), 20));
  EXPECT_EQ(ratio_E(family_30(), {1}), oracle::ratio(fact(30), fact(15) * fact(10) * fact(6)));
}

TEST(Agreement, SeededRandomFamilies) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    RatioFamily fam = random_family(rng);
    VerificationReport rep = landau_theorem_check(fam, default_m_bound(fam));
    for (const auto& r : rep.records())
      if (r.tag == "step-function-iff-min-height") EXPECT_EQ(r.status, Status::Pass) << fam.describe();
  }
}
