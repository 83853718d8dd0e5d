#include <gtest/gtest.h>

#include "reedy/harness.hpp"
#include "reedy/spectrum.hpp"

using namespace reedy;

namespace {
std::string why(const CheckReport& r) { return r.witness ? r.witness->describe() : r.detail; }
}  // namespace

TEST(Spectrum, SphereValid) {
  auto s = sphere_spectrum(3, 4);
  auto r = Spectra::validate(s);
  EXPECT_TRUE(r) << why(r);
  EXPECT_TRUE(check_full_equivariance(s));
  EXPECT_TRUE(Spectra::validate(bar_s(3, 4)));
  EXPECT_TRUE(Spectra::validate_map(bar_s_inclusion(3, 4)));
}

TEST(Spectrum, BarSLevels) {
  auto b = bar_s(3, 4);
  auto s = sphere_spectrum(3, 4);
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(b.level(0).at(d).size(), 1u);
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(SSets::same(b.level(n), s.level(n)));
}

TEST(Permutation, RankUnrankAndWords) {
  for (int n = 0; n <= 5; ++n)
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      Perm p = perm_unrank(n, r);
      ASSERT_TRUE(is_permutation(p));
      EXPECT_EQ(perm_rank(p), r);
      for (bool largest : {false, true}) {
        Perm q = identity_perm(n);
        for (int i : reduced_word(p, largest)) q = compose_perm(q, transposition(n, i));
        EXPECT_EQ(q, p);
      }
      EXPECT_TRUE(is_identity(compose_perm(p, inverse(p))));
    }
}

TEST(Permutation, NormalizeRecoversSigma) {
  for (std::uint64_t r = 0; r < factorial(4); ++r) {
    Perm sigma = perm_unrank(4, r);
    for (auto blocks : compositions(4, 2)) {
      Normalized nf = normalize(sigma, blocks);
      EXPECT_EQ(compose_perm(nf.gamma, block_sum(nf.alphas)), sigma);
      auto list = shuffles(blocks);
      EXPECT_LT(shuffle_index(list, nf.gamma), list.size());
    }
  }
}

// The memoized action, both reduced words and a second call all agree.
TEST(Spectrum, ActionIsDeterministic) {
  harness::GenConfig cfg;
  std::vector<SymSpectrum> xs = {sphere_spectrum(3, 3)};
  for (int i = 0; i < 6; ++i) {
    harness::Rng rng(5, static_cast<std::uint64_t>(i));
    xs.push_back(harness::gen_spectrum(rng, cfg));
  }
  for (const auto& x : xs)
    for (int n = 0; n <= x.strunc(); ++n)
      for (std::uint64_t r = 0; r < factorial(n); ++r) {
        Perm p = perm_unrank(n, r);
        auto a = x.act(n, p);
        EXPECT_TRUE(SSets::equal(a, x.act(n, p)));
        EXPECT_TRUE(SSets::equal(a, x.act_by_word(n, p, false)));
        EXPECT_TRUE(SSets::equal(a, x.act_by_word(n, p, true)));
      }
}

TEST(Spectrum, GeneratedSpectraValid) {
  harness::GenConfig cfg;
  for (int i = 0; i < 20; ++i) {
    harness::Rng rng(1, static_cast<std::uint64_t>(i));
    auto x = harness::gen_spectrum(rng, cfg);
    auto r = Spectra::validate(x);
    EXPECT_TRUE(r) << i << " " << why(r);
  }
}

TEST(Spectrum, RejectsBrokenCoxeterRelation) {
  auto s = sphere_spectrum(3, 3);
  std::vector<std::vector<SimplicialMap>> gens;
  std::vector<SimplicialMap> sig;
  for (int n = 0; n <= 3; ++n) gens.push_back(s.generators(n));
  for (int n = 0; n < 3; ++n) sig.push_back(s.sigma(n));
  // tau_0 on level 2 replaced by a non-involution.
  gens[2][0] = SSets::zero_map(s.level(2), s.level(2));
  SymSpectrum bad(s.levels(), gens, sig);
  EXPECT_FALSE(Spectra::validate(bad));
}
