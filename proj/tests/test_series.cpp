#include <gtest/gtest.h>

#include "hypint/criterion.hpp"
#include "hypint/series.hpp"
#include "oracles.hpp"

using namespace hypint;
using oracle::fact;

namespace {

Rat sign(std::int64_t k) { return k % 2 ? Rat(-1) : Rat(1); }

Rat at_l(const SparseSeries& s, const Vec& l) { return s.at(exponent_of(l, s.M)); }

LatticeConfig family_config() { return build_config(RatioFamily({{30}, {1}}, {{15}, {10}, {6}})); }

}  // namespace

TEST(Coefficient, FactorialRatioWithSign) {
  EXPECT_EQ(series_coefficient({3, 0, 1, 1, 1, 0}, 2), Rat(-6));
  EXPECT_EQ(series_coefficient({0, 0, 0}, 1), Rat(1));
  EXPECT_EQ(series_coefficient({2, 1, 1}, 1), Rat(2));
  EXPECT_EQ(series_coefficient({1, 2}, 1), Rat(-1, 2));
}

TEST(Expand, CubicMinusBetaMatchesClosedForm) {
  LatticeConfig cfg = oracle::cubic();
  const std::int64_t S = 8;
  Expansion ex = expand_Fu(cfg, {-1, -2, -2, -1, -2}, 3 * S);
  ASSERT_TRUE(ex.diagnostic.empty());
  std::size_t expected_terms = 0;
  for (std::int64_t s = 0; s <= S; ++s)
    for (std::int64_t t = 0; s + t <= S; ++t) {
      ++expected_terms;
      Rat want = sign(s + t) * oracle::ratio(fact(3 * s) * fact(3 * t), fact(s) * fact(t) * fact(s + t) * fact(s + t));
      EXPECT_EQ(at_l(ex.series, {3 * s, 3 * t, s, s + t, s + t, t}), want) << s << "," << t;
      EXPECT_EQ(want.get_den(), 1);
    }
  EXPECT_EQ(ex.series.terms.size(), expected_terms);
  EXPECT_EQ(at_l(ex.series, {3, 3, 1, 2, 2, 1}), Rat(9));
}

TEST(Expand, CubicSecondParameterMatchesClosedForm) {
  LatticeConfig cfg = oracle::cubic();
  Expansion ex = expand_Fu(cfg, {-2, -1, -1, -2, -2}, 3 * 6 + 2);
  ASSERT_TRUE(ex.diagnostic.empty());
  for (std::int64_t s = 0; s <= 3; ++s)
    for (std::int64_t t = 0; t <= 3; ++t) {
      Vec l{3 * s + 1, 3 * t + 1, s, s + t + 1, s + t + 1, t};
      Rat want = sign(l[0] + l[1]) * oracle::ratio(fact(3 * s + 1) * fact(3 * t + 1),
                                         fact(s) * fact(t) * fact(s + t + 1) * fact(s + t + 1));
      EXPECT_EQ(at_l(ex.series, l), want);
    }
}

TEST(Expand, RatioFamilyParametersGiveShiftedFamilies) {
  LatticeConfig cfg = family_config();
  struct Shift {
    Vec u;
    std::int64_t c, a, b, d;  // l = (m, 30m+c, m, 15m+a, 10m+b, 6m+d, m)
  };
  for (const Shift& sh : {Shift{{-1, -1, -1, 0, 0, 0}, 0, 0, 0, 0}, Shift{{-1, -7, -1, 3, 2, 1}, 6, 3, 2, 1},
                          Shift{{-1, -29, -1, 14, 9, 5}, 28, 14, 9, 5}}) {
    ASSERT_TRUE(in_m_beta(cfg, sh.u));
    Expansion ex = expand_Fu(cfg, sh.u, 32 * 3 + sh.c);
    ASSERT_TRUE(ex.diagnostic.empty());
    EXPECT_EQ(ex.series.terms.size(), 4u);
    for (std::int64_t m = 0; m <= 3; ++m) {
      Vec l{m, 30 * m + sh.c, m, 15 * m + sh.a, 10 * m + sh.b, 6 * m + sh.d, m};
      Rat want = oracle::ratio(fact(30 * m + sh.c) * fact(m), fact(15 * m + sh.a) * fact(10 * m + sh.b) * fact(6 * m + sh.d));
      EXPECT_EQ(at_l(ex.series, l), want) << m;
      EXPECT_EQ(want.get_den(), 1);
    }
  }
}

TEST(Expand, DegreeZeroIsSingleUnitTerm) {
  Expansion ex = expand_Fu(oracle::cubic(), {-1, -2, -2, -1, -2}, 0);
  ASSERT_EQ(ex.series.terms.size(), 1u);
  EXPECT_EQ(ex.series.terms.begin()->second, 1);
}

TEST(Expand, OutsideMBetaIsDiagnosed) {
  Expansion ex = expand_Fu(oracle::cubic(), {1, 2, 2, 1, 2}, 3);
  EXPECT_FALSE(ex.diagnostic.empty());
}

TEST(Expand, CentralBinomialLine) {
  Expansion ex = expand_Fu(oracle::binomial_line(), {-1, -1}, 10);
  for (std::int64_t k = 0; 2 * k <= 10; ++k) EXPECT_EQ(at_l(ex.series, {2 * k, k, k}), oracle::ratio(fact(2 * k), fact(k) * fact(k)));
}

TEST(Operators, ContiguityEulerBoxOnCubic) {
  LatticeConfig cfg = oracle::cubic();
  const Vec u{-1, -2, -2, -1, -2};
  for (std::size_t k = 0; k < cfg.N(); ++k) EXPECT_TRUE(contiguity(cfg, u, k, 6).all_pass()) << k;
  for (std::size_t i = 0; i < cfg.n(); ++i) EXPECT_TRUE(euler_check(cfg, u, i, 6).all_pass()) << i;
  for (const auto& rel : relation_basis(cfg)) EXPECT_TRUE(box_annihilates(cfg, u, rel, 6).all_pass());
}

TEST(Operators, ContiguityWithEmptySidesBelowFrontier) {
  LatticeConfig cfg = family_config();
  const Vec u{-1, -1, -1, 0, 0, 0};
  VerificationReport low = contiguity(cfg, u, 3, 6);
  ASSERT_TRUE(low.all_pass());
  EXPECT_NE(low.records()[0].witness.find("vanish"), std::string::npos);
  VerificationReport high = contiguity(cfg, u, 3, 40);
  ASSERT_TRUE(high.all_pass());
  EXPECT_EQ(high.records()[0].witness.rfind("compared=", 0), 0u);
}

TEST(Operators, RelationsAreRelations) {
  LatticeConfig cfg = family_config();
  auto rels = relation_basis(cfg);
  EXPECT_EQ(rels.size(), cfg.N() - cfg.za().rank);
  for (const auto& r : rels) {
    Vec s(cfg.n(), 0);
    for (std::size_t j = 0; j < cfg.N(); ++j) s = add(s, scale(cfg.point(j), r.l[j]));
    EXPECT_EQ(s, Vec(cfg.n(), 0));
  }
}

TEST(Operators, MixedPartialsCommute) {
  LatticeConfig cfg = oracle::cubic();
  SparseSeries s = expand_Fu(cfg, {-1, -2, -2, -1, -2}, 12).series;
  for (std::size_t a = 0; a < cfg.N(); ++a)
    for (std::size_t b = a + 1; b < cfg.N(); ++b) {
      SparseSeries x = differentiate(cfg, differentiate(cfg, s, a), b);
      SparseSeries y = differentiate(cfg, differentiate(cfg, s, b), a);
      EXPECT_EQ(x.u, y.u);
      const std::int64_t f = std::min(x.frontier, y.frontier);
      auto cut = [&](const SparseSeries& z) {
        std::map<Vec, Rat> m;
        for (const auto& [e, c] : z.terms)
          if (negative_degree(index_of(e, z.M), z.M) <= f) m[e] = c;
        return m;
      };
      EXPECT_EQ(cut(x), cut(y)) << a << "," << b;
    }
}

TEST(Nonzero, TriState) {
  LatticeConfig cfg = oracle::cubic();
  NonzeroAnswer yes = is_nonzero(cfg, {-1, -2, -2, -1, -2});
  ASSERT_EQ(yes.answer, Tri::Yes);
  Vec s(cfg.n(), 0);
  for (std::size_t j = 0; j < cfg.N(); ++j) s = add(s, scale(cfg.point(j), exponent_of(*yes.witness, cfg.M())[j]));
  EXPECT_EQ(s, (Vec{-1, -2, -2, -1, -2}));
  // A height-one parameter: the two negative exponents already exceed it.
  for (const auto& v : interior_points_at_height(cfg, 1)) EXPECT_EQ(is_nonzero(cfg, negate(v)).answer, Tri::No);
  LatticeConfig sabotaged(oracle::cubic_points(), {0, 1, 2});
  EXPECT_EQ(is_nonzero(sabotaged, {-1, -2, -2, -1, -2}).answer, Tri::No);
}
