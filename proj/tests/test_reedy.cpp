#include <gtest/gtest.h>

#include "reedy/harness.hpp"
#include "reedy/reedy.hpp"

using namespace reedy;

namespace {
std::string why(const CheckReport& r) { return r.witness ? r.witness->describe() : r.detail; }

bool all_zero(const SymSpectrum& x) {
  for (int n = 0; n <= x.strunc(); ++n)
    for (int d = 0; d <= x.dtrunc(); ++d)
      if (x.level(n).at(d).size() != 1) return false;
  return true;
}
}  // namespace

TEST(Reedy, ConstantSphereIsGood) {
  auto x = constant_simplicial(sphere_spectrum(3, 4), 3);
  EXPECT_TRUE(SimplicialSpectra::validate(x));
  auto r = is_good(x);
  EXPECT_TRUE(r) << why(r);
  auto f = is_reedy_cofibrant(x, Model::flat);
  EXPECT_TRUE(f) << why(f);
  EXPECT_FALSE(is_positive_good(x));
}

TEST(Reedy, ConstantBarSIsNotGood) {
  auto x = constant_simplicial(bar_s(3, 4), 3);
  auto r = is_good(x);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->coordinate("level"), 2);
}

TEST(Cofibration, Certificates) {
  auto r = is_cofibrant(bar_s(3, 4), Model::flat);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->coordinate("level"), 2);
  EXPECT_TRUE(replay_flat_witness(Spectra::zero_map(zero_spectrum(3, 4), bar_s(3, 4)), *r.witness));
  EXPECT_TRUE(is_cofibrant(sphere_spectrum(3, 4), Model::flat));
  auto p = is_cofibrant(sphere_spectrum(3, 4), Model::positive_flat);
  ASSERT_FALSE(p);
  EXPECT_EQ(p.witness->coordinate("level"), 0);
  EXPECT_NE(p.witness->clause.find("f(0) is an isomorphism"), std::string::npos);
  // S-bar is positive levelwise cofibrant but not flat.
  EXPECT_TRUE(is_cofibrant(bar_s(3, 4), Model::levelwise));
}

TEST(Reedy, LatchingAtZeroIsZero) {
  auto x = harness::good_demo();
  auto l = simplicial_latching(x, 0);
  EXPECT_TRUE(all_zero(l.object));
}

TEST(Reedy, ConstantNuIsIso) {
  auto x = constant_simplicial(sphere_spectrum(2, 2), 3);
  for (int n = 1; n <= 3; ++n) {
    auto l = simplicial_latching(x, n);
    for (int m = 0; m <= 2; ++m)
      for (int d = 0; d <= 2; ++d) EXPECT_TRUE(is_iso(l.nu.component(m).component(d))) << n << m << d;
  }
}

// The spectral latching object at level m is the latching object of the bisimplicial slice.
TEST(Reedy, SliceConsistency) {
  std::vector<SimplicialSpectrum> xs = {harness::good_demo(), harness::thm14_demo().cod()};
  harness::GenConfig cfg;
  for (int i = 0; i < 3; ++i) {
    harness::Rng rng(8, static_cast<std::uint64_t>(i));
    xs.push_back(harness::gen_good_simplicial_spectrum(rng, cfg));
  }
  for (const auto& x : xs)
    for (int n = 0; n <= x.trunc(); ++n) {
      auto l = simplicial_latching(x, n);
      for (int m = 0; m <= x.at(0).strunc(); ++m) {
        auto b = level_bisimplicial(x, m);
        auto lb = simplicial_latching(b, n);
        EXPECT_TRUE(SSets::same(l.object.level(m), lb.object)) << n << " " << m;
        EXPECT_TRUE(SSets::equal(l.nu.component(m), lb.nu)) << n << " " << m;
      }
    }
}

TEST(Reedy, RealizeConstant) {
  auto s = sphere_spectrum(3, 3);
  auto x = constant_simplicial(s, 3);
  EXPECT_TRUE(Spectra::same(realize(x), s));
  EXPECT_THROW(realize(constant_simplicial(s, 2)), std::invalid_argument);
}

TEST(Reedy, CofiberOfIdentityIsZero) {
  auto x = harness::good_demo();
  auto z = pointwise_cofiber(SimplicialSpectra::identity(x));
  for (int k = 0; k <= x.trunc(); ++k) EXPECT_TRUE(all_zero(z.object.at(k))) << k;
}

TEST(Reedy, CofiberOfZeroSourceIsTarget) {
  auto x = harness::good_demo();
  auto z = pointwise_cofiber(zero_source(x));
  EXPECT_TRUE(SimplicialSpectra::same(z.object, x));
}

TEST(Reedy, CofiberCommutesWithRealize) {
  auto f = harness::thm14_demo();
  auto z = pointwise_cofiber(f);
  auto rf = realize_map(f);
  auto po = pushout<Spectra>(rf, Spectra::zero_map(rf.dom(), Spectra::zero_like(rf.dom())));
  EXPECT_TRUE(Spectra::same(realize(z.object), po.object));
  EXPECT_TRUE(is_flat_cofibration(rf));
  EXPECT_TRUE(is_cofibrant(realize(z.object), Model::flat));
}

TEST(Reedy, GoodImpliesReedyFlat) {
  auto x = harness::good_demo();
  ASSERT_TRUE(is_good(x));
  auto r = is_reedy_cofibrant(x, Model::flat);
  EXPECT_TRUE(r) << why(r);
}

TEST(Reedy, FlatArgumentFactorization) {
  auto x = harness::good_demo();
  for (int n = 1; n <= x.trunc(); ++n)
    for (int s = 0; s <= x.at(0).strunc(); ++s)
      for (int d = 0; d <= 2; ++d) {
        auto a = flat_argument(x, n, s, d);
        EXPECT_EQ(compose(a.f_double_prime, a.f_prime), a.f);
        EXPECT_TRUE(is_mono(a.f_prime));
        EXPECT_TRUE(is_epi(a.g));
      }
}

TEST(Reedy, CornerMapOfIdentityIsIso) {
  auto x = harness::good_demo();
  auto f = SimplicialSpectra::identity(x);
  for (int n = 0; n <= x.trunc(); ++n) {
    auto c = reedy_corner_map<Spectra>(f, n);
    EXPECT_TRUE(Spectra::is_mono(c.map));
    EXPECT_TRUE(Spectra::is_epi(c.map));
  }
}
