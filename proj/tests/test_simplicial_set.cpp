#include <gtest/gtest.h>

#include "reedy/harness.hpp"
#include "reedy/simplicial_set.hpp"

using namespace reedy;

TEST(SimplicialSet, CircleIsValid) { EXPECT_TRUE(SSets::validate(circle(4))); }

TEST(SimplicialSet, SphereSizes) {
  EXPECT_EQ(circle(4).at(2).size(), 3u);
  EXPECT_EQ(sphere(2, 4).at(2).size(), 5u);
  EXPECT_TRUE(SSets::validate(sphere(3, 4)));
  EXPECT_TRUE(SSets::validate(standard_simplex(2, 3)));
  auto s0 = sphere(0, 3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(s0.at(k).size(), 2u);
}

TEST(SimplicialSet, StandardSimplexCounts) {
  // Monotone maps [m] -> [2]: C(m+3, 2).
  auto d = standard_simplex(2, 3);
  EXPECT_EQ(d.at(0).size(), 4u);
  EXPECT_EQ(d.at(1).size(), 7u);
  EXPECT_EQ(d.at(2).size(), 11u);
  for (Index e = 1; e < d.at(2).size(); ++e) EXPECT_EQ(simplex_index(2, simplex_element(2, 2, e)), e);
}

// s_0 s_0 = s_1 s_0 broken at degree 0.
TEST(SimplicialSet, ValidateNamesBrokenIdentity) {
  auto d = standard_simplex(0, 2);
  auto degens = d.degens();
  degens[1][1] = PointedMap::zero(d.at(1), d.at(2));
  SimplicialSet bad(d.objects(), d.faces(), degens);
  auto r = SSets::validate(bad);
  ASSERT_FALSE(r);
  EXPECT_NE(r.witness->clause.find("s_i s_j = s_{j+1} s_i at (k,i,j)=(0,0,0)"), std::string::npos)
      << r.witness->clause;
}

TEST(SimplicialSet, FaceSections) {
  EXPECT_TRUE(check_face_sections(sphere(2, 4)));
  harness::Rng rng(3, 0);
  for (int i = 0; i < 30; ++i) EXPECT_TRUE(check_face_sections(harness::gen_sset(rng, 3, 8)));
}

TEST(SimplicialSet, YonedaHitsElement) {
  auto x = sphere(2, 3);
  for (Index e = 1; e < x.at(2).size(); ++e) {
    auto y = yoneda_map(x, 2, e);
    EXPECT_TRUE(SSets::validate_map(y));
    EXPECT_EQ(y.component(2)(simplex_index(2, {0, 1, 2})), e);
  }
}

TEST(SimplicialSet, GeneratedSubobjectIsClosed) {
  auto x = standard_simplex(2, 3);
  auto inc = generated_subobject(x, {{1, simplex_index(2, {0, 2})}});
  EXPECT_TRUE(SSets::validate(inc.dom()));
  EXPECT_TRUE(SSets::validate_map(inc));
  EXPECT_TRUE(SSets::is_mono(inc));
  EXPECT_EQ(inc.dom().at(0).size(), 3u);  // basepoint and the two endpoints
  auto c = collapse(inc);
  EXPECT_TRUE(SSets::validate(c.object));
  EXPECT_EQ(c.object.at(0).size(), 2u);
}

TEST(SimplicialSet, DiagonalOfConstantDirection) {
  auto x = sphere(1, 3);
  auto b = constant_bisimplicial(x, 3);
  EXPECT_TRUE(BisimplicialSets::validate(b));
  EXPECT_TRUE(SSets::same(diagonal(b), x));
}

// Oracle: the latching object of a simplicial set is the union of the degeneracy images.
TEST(SimplicialSet, LatchingMatchesDegeneracyUnion) {
  auto z = point_sset(3);
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(harness::check_oracle_agreement(z, n));
  // Constant object: every element of degree n >= 1 is degenerate.
  auto c = constant_sset(PointedSet(4), 3);
  for (int n = 1; n <= 3; ++n) {
    auto o = harness::oracle_latching_sets(c, n);
    EXPECT_TRUE(is_iso(o)) << n;
  }
  // Circle: nothing degenerate in degree 1 but the basepoint.
  EXPECT_EQ(harness::oracle_latching_sets(circle(3), 1).dom().size(), 1u);
  harness::Rng rng(9, 0);
  for (int i = 0; i < 20; ++i) {
    auto x = harness::gen_sset(rng, 3, 5);
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(harness::check_oracle_agreement(x, n));
  }
}

TEST(SimplicialSet, LatchingNaturality) {
  harness::Rng rng(11, 0);
  for (int i = 0; i < 10; ++i) {
    auto y = harness::gen_sset(rng, 3, 6);
    auto f = generated_subobject(y, {{1, 1}});
    for (int n = 0; n <= 3; ++n) {
      auto lx = simplicial_latching(f.dom(), n);
      auto ly = simplicial_latching(f.cod(), n);
      auto lf = latching_of_map(f, lx, ly);
      EXPECT_EQ(compose(lx.nu, f.component(n)), compose(lf, ly.nu));
    }
    EXPECT_TRUE(is_reedy_mono(f));
  }
}
