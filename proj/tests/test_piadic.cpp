#include <gtest/gtest.h>

#include <random>

#include "hypint/piadic.hpp"

using namespace hypint;

namespace {

PiAdic random_element(const std::shared_ptr<const PiRing>& ring, std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 2001) - 1000;
  long den = static_cast<long>(rng() % 50) + 1;
  if (den % ring->p == 0) ++den;
  return PiAdic::from_rat(ring, Rat(num, den)) * PiAdic::pi_power(ring, static_cast<std::int64_t>(rng() % 4));
}

}  // namespace

TEST(PiAdic, DefiningRelationIsExact) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto ring = PiRing::make(p, 30);
    PiAdic x = PiAdic::pi_power(ring, 1).pow(p - 1) + PiAdic::from_int(ring, p);
    EXPECT_TRUE(x.is_zero());
    EXPECT_GE(x.abs_precision(), 30);
  }
}

TEST(PiAdic, PrimeTwoIsTwoAdic) {
  auto ring = PiRing::make(2, 20);
  EXPECT_EQ(PiAdic::pi_power(ring, 1).compare(PiAdic::from_int(ring, -2), 20), Compare::Equal);
  EXPECT_EQ(PiAdic::from_int(ring, 48).ord(), 4);
}

TEST(PiAdic, OrdOfIntegersAndRationals) {
  for (std::int64_t p : {2, 3, 5}) {
    auto ring = PiRing::make(p, 20);
    EXPECT_EQ(PiAdic::from_int(ring, Int(p * p * p * 7 + (p == 7))).ord(), 3 * (p - 1));
    EXPECT_EQ(PiAdic::from_rat(ring, Rat(1, p * p)).ord(), -2 * (p - 1));
  }
}

TEST(PiAdic, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(8);
  for (std::int64_t p : {2, 3, 5}) {
    auto ring = PiRing::make(p, 24);
    for (int t = 0; t < 200; ++t) {
      PiAdic a = random_element(ring, rng), b = random_element(ring, rng), c = random_element(ring, rng);
      const std::int64_t K = 16;
      EXPECT_EQ(((a * b) * c).compare(a * (b * c), K), Compare::Equal);
      EXPECT_EQ(((a + b) + c).compare(a + (b + c), K), Compare::Equal);
      EXPECT_EQ((a * (b + c)).compare(a * b + a * c, K), Compare::Equal);
      EXPECT_EQ((a - a).compare(PiAdic::zero(ring, 100), K), Compare::Equal);
      if (!a.is_zero()) EXPECT_EQ((a * a.inverse()).compare(PiAdic::from_int(ring, 1), K), Compare::Equal);
    }
  }
}

TEST(PiAdic, RationalArithmeticMatchesExact) {
  std::mt19937_64 rng(9);
  for (std::int64_t p : {2, 3, 5}) {
    auto ring = PiRing::make(p, 30);
    for (int t = 0; t < 100; ++t) {
      Rat x(static_cast<long>(rng() % 500) - 250, static_cast<long>(rng() % 30) + 1);
      Rat y(static_cast<long>(rng() % 500) - 250, static_cast<long>(rng() % 30) + 1);
      x.canonicalize();
      y.canonicalize();
      auto X = PiAdic::from_rat(ring, x), Y = PiAdic::from_rat(ring, y);
      EXPECT_EQ((X * Y).compare(PiAdic::from_rat(ring, x * y), 12), Compare::Equal);
      EXPECT_EQ((X + Y).compare(PiAdic::from_rat(ring, x + y), 12), Compare::Equal);
    }
  }
}

TEST(PiAdic, ComparisonHonoursPrecision) {
  auto ring = PiRing::make(3, 20);
  PiAdic one = PiAdic::from_int(ring, 1);
  PiAdic near = one + PiAdic::pi_power(ring, 5);
  EXPECT_EQ(one.compare(near, 5), Compare::Equal);
  EXPECT_EQ(one.compare(near, 6), Compare::Unequal);
  PiAdic vague = one.truncated(3);
  EXPECT_EQ(vague.compare(near, 6), Compare::Inconclusive);
  EXPECT_EQ(vague.compare(near, 3), Compare::Equal);
  EXPECT_EQ(PiAdic::zero(ring, 4).ord_at_least(10, 12), Compare::Inconclusive);
  EXPECT_EQ(PiAdic::pi_power(ring, 2).ord_at_least(3, 12), Compare::Unequal);
  EXPECT_THROW(PiAdic::zero(ring, 4).inverse(), DomainError);
}

TEST(PiAdic, PrecisionTracksDivisionByPi) {
  auto ring = PiRing::make(5, 20);
  PiAdic x = PiAdic::from_int(ring, 7);
  PiAdic y = x * PiAdic::pi_power(ring, -6);
  EXPECT_EQ(y.ord(), -6);
  EXPECT_EQ(y.rel_precision(), 20);
  EXPECT_EQ(y.abs_precision(), 14);
}
