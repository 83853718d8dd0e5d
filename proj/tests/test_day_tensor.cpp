#include <gtest/gtest.h>

#include "reedy/day_tensor.hpp"
#include "reedy/harness.hpp"

using namespace reedy;

namespace {
std::string why(const CheckReport& r) { return r.witness ? r.witness->describe() : r.detail; }
}  // namespace

TEST(DayTensor, SummandCounts) {
  auto s = sphere_spectrum(3, 3);
  EXPECT_EQ(DayLevel({s, s}, 0).summands().size(), 1u);
  EXPECT_EQ(DayLevel({s, s}, 1).summands().size(), 2u);
  EXPECT_EQ(DayLevel({s, s}, 2).summands().size(), 4u);
  // sum over p of C(3, p) shuffles
  EXPECT_EQ(DayLevel({s, s}, 3).summands().size(), 8u);
}

TEST(DayTensor, EncodeDecode) {
  auto s = sphere_spectrum(3, 3);
  DayLevel l({s, s}, 2);
  for (int dim = 0; dim <= 3; ++dim) {
    PointedSet p = l.at(dim);
    std::vector<Index> parts;
    for (Index e = 1; e < p.size(); ++e) {
      std::size_t su = l.decode(dim, e, parts);
      EXPECT_EQ(l.encode(dim, su, parts), e);
    }
  }
}

TEST(DayTensor, UnitIsoOnSpheres) {
  for (int n = 0; n <= 3; ++n) {
    auto r = check_unit_iso(sphere_spectrum(3, 4), n);
    EXPECT_TRUE(r) << n << " " << why(r);
    auto r2 = check_unit_iso(bar_s(3, 4), n);
    EXPECT_TRUE(r2) << n << " " << why(r2);
  }
}

TEST(DayTensor, UnitIsoOnRandomSpectra) {
  harness::GenConfig cfg;
  for (int i = 0; i < 10; ++i) {
    harness::Rng rng(2, static_cast<std::uint64_t>(i));
    auto x = harness::gen_spectrum(rng, cfg);
    for (int n = 0; n <= x.strunc(); ++n) {
      auto r = check_unit_iso(x, n);
      EXPECT_TRUE(r) << i << " " << n << " " << why(r);
    }
  }
}

// (S-bar ^_S S)(n) = S-bar(n) through a -> [id; a, 1].
TEST(DayTensor, RightUnitOracle) {
  auto b = bar_s(3, 3);
  auto s = sphere_spectrum(3, 3);
  for (int n = 0; n <= 3; ++n) {
    SmashOverS bs(b, s, n);
    const DayLevel& pair = bs.pair();
    const std::size_t su = pair.summand_index({n, 0}, identity_perm(n));
    for (int dim = 0; dim <= 3; ++dim) {
      PointedSet a = b.level(n).at(dim);
      ASSERT_EQ(bs.at(dim).size(), a.size()) << n << " " << dim;
      PointedMap iota = PointedMap::tabulate(a, bs.at(dim), [&](Index e) {
        std::vector<Index> parts = {e, 1};
        return bs.leg(dim)(pair.encode(dim, su, parts));
      });
      EXPECT_TRUE(is_iso(iota)) << n << " " << dim;
    }
  }
}

TEST(DayTensor, BarSNuTwoNotMono) {
  SpectralLatching l(bar_s(3, 4), 2);
  bool mono = true;
  for (int d = 0; d <= 4; ++d) mono = mono && is_mono(l.nu(d));
  EXPECT_FALSE(mono);
  SpectralLatching ls(sphere_spectrum(3, 4), 2);
  for (int d = 0; d <= 4; ++d) EXPECT_TRUE(is_mono(ls.nu(d))) << d;
}

// L_n S = S-bar(n): nu_n(S) is an isomorphism for n >= 1 and L_0 S is the point.
TEST(DayTensor, SphereLatchingOracle) {
  auto s = sphere_spectrum(3, 3);
  for (int n = 0; n <= 3; ++n) {
    SpectralLatching l(s, n);
    for (int d = 0; d <= 3; ++d) {
      if (n == 0) EXPECT_EQ(l.at(d).size(), 1u);
      else EXPECT_TRUE(is_iso(l.nu(d))) << n << " " << d;
    }
  }
}

TEST(DayTensor, NuIsNatural) {
  harness::GenConfig cfg;
  std::vector<SpectrumMap> maps = {bar_s_inclusion(3, 3)};
  for (int i = 0; i < 6; ++i) {
    harness::Rng rng(4, static_cast<std::uint64_t>(i));
    auto x = harness::gen_spectrum(rng, cfg);
    const int m = rng.below(x.strunc() + 1);
    const int k = rng.below(x.dtrunc() + 1);
    const Index e = static_cast<Index>(rng.below(static_cast<int>(x.level(m).at(k).size())));
    maps.push_back(harness::spectrum_yoneda(x, m, k, e));
  }
  for (const auto& f : maps) {
    ASSERT_TRUE(Spectra::validate_map(f));
    for (int n = 0; n <= f.dom().strunc(); ++n) {
      SpectralLatching lx(f.dom(), n), ly(f.cod(), n);
      for (int d = 0; d <= f.dom().dtrunc(); ++d)
        EXPECT_EQ(compose(lx.nu(d), f.component(n).component(d)),
                  compose(latching_map_at(lx, ly, f, d), ly.nu(d)))
            << n << " " << d;
    }
  }
}

TEST(DayTensor, FreeSpectrumValid) {
  auto g = concentrated(3, 1, sphere(1, 3), {});
  auto f = free_spectrum(g);
  auto r = Spectra::validate(f);
  EXPECT_TRUE(r) << why(r);
  EXPECT_TRUE(check_full_equivariance(f));
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(check_unit_iso(f, n)) << n;
  EXPECT_TRUE(is_cofibrant(f, Model::flat));
  EXPECT_TRUE(is_cofibrant(f, Model::positive_flat));
}

TEST(Cofibration, ClassesAreNested) {
  harness::GenConfig cfg;
  for (int i = 0; i < 20; ++i) {
    harness::Rng rng(6, static_cast<std::uint64_t>(i));
    auto x = harness::gen_spectrum(rng, cfg);
    const bool pf = bool(is_cofibrant(x, Model::positive_flat));
    const bool f = bool(is_cofibrant(x, Model::flat));
    const bool pl = bool(is_cofibrant(x, Model::positive_levelwise));
    const bool l = bool(is_cofibrant(x, Model::levelwise));
    EXPECT_TRUE(!pf || f);
    EXPECT_TRUE(!f || l);
    EXPECT_TRUE(!pf || pl);
    EXPECT_TRUE(!pl || l);
  }
}
