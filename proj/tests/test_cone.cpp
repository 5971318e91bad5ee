#include <gtest/gtest.h>

#include <random>

#include "hypint/cone.hpp"
#include "hypint/lattice.hpp"
#include "oracles.hpp"

using namespace hypint;

namespace {

Int eval(const BigVec& f, const Vec& v) {
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += f[i] * static_cast<long>(v[i]);
  return s;
}

}  // namespace

TEST(Cone, CubicConeIsSimplicialInAHyperplane) {
  LatticeConfig cfg = oracle::cubic();
  const Cone& c = cfg.cone();
  EXPECT_EQ(c.dim(), 4u);
  EXPECT_EQ(c.facets.size(), 4u);
  EXPECT_FALSE(c.has_lineality);
  for (const auto& f : c.facets)
    for (std::size_t j = 0; j < cfg.N(); ++j) EXPECT_GE(eval(f, cfg.point(j)), 0);
  EXPECT_TRUE(cfg.beta_interior());
}

TEST(Cone, FacetsAreCanonical) {
  Cone c = make_cone({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {0, 0, 1}}, 3);
  EXPECT_EQ(c.facets.size(), 4u);
  EXPECT_TRUE(std::is_sorted(c.facets.begin(), c.facets.end()));
  Cone again = make_cone({{0, 0, 1}, {1, 1, 1}, {0, 1, 1}, {1, 0, 1}}, 3);
  EXPECT_EQ(c.facets, again.facets);
}

TEST(Cone, InteriorIsClosedUnderScaling) {
  LatticeConfig cfg = oracle::cubic();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-4, 6);
  int interior = 0;
  for (int t = 0; t < 3000; ++t) {
    Vec v(5);
    for (auto& x : v) x = d(rng);
    if (!interior_contains(cfg.cone(), v)) continue;
    ++interior;
    for (std::int64_t k = 2; k <= 5; ++k) EXPECT_TRUE(interior_contains(cfg.cone(), scale(v, k)));
  }
  EXPECT_GT(interior, 0);
}

TEST(Cone, FaceOfBetaContainsItAndFacetsSeparate) {
  for (const auto& cfg : {oracle::cubic(), oracle::smallest(), oracle::binomial_line()}) {
    const Face f = face_of(cfg.cone(), cfg.beta());
    EXPECT_TRUE(cone_contains(f.cone, cfg.beta()));
    for (const auto& facet : cfg.cone().facets) {
      bool vanishes = true;
      for (auto j : f.generator_indices) vanishes = vanishes && eval(facet, cfg.cone().generators[j]) == 0;
      EXPECT_TRUE(vanishes || eval(facet, cfg.beta()) > 0);
    }
  }
}

TEST(Cone, BoundaryPointSitsOnProperFace) {
  Cone c = make_cone({{0, 1}, {1, 1}}, 2);
  Face f = face_of(c, {0, 3});
  EXPECT_EQ(f.cone.dim(), 1u);
  EXPECT_FALSE(interior_contains(c, Vec{0, 3}));
  EXPECT_TRUE(interior_contains(c, Vec{1, 2}));
  EXPECT_THROW(face_of(c, {-1, 1}), DomainError);
}
