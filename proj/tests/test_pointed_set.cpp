#include <gtest/gtest.h>

#include <random>

#include "reedy/pointed_set.hpp"

using namespace reedy;

namespace {

// Every pointed map a -> b.
std::vector<PointedMap> all_maps(const PointedSet& a, const PointedSet& b) {
  std::vector<PointedMap> out;
  std::vector<Index> t(a.size(), 0);
  for (;;) {
    out.emplace_back(a, b, t);
    Index i = 1;
    while (i < a.size() && ++t[i] == b.size()) t[i++] = 0;
    if (i >= a.size()) break;
  }
  return out;
}

}  // namespace

TEST(PointedSet, ComposeInclusionThenQuotient) {
  PointedSet two(2), three(3);
  PointedMap inc(two, three, {0, 1});
  PointedMap quot(three, two, {0, 1, 0});
  EXPECT_EQ(compose(inc, quot), PointedMap::identity(two));
}

TEST(PointedSet, RejectsBadTables) {
  PointedSet two(2), three(3);
  EXPECT_THROW(PointedMap(two, three, {1, 1}), std::invalid_argument);
  EXPECT_THROW(PointedMap(two, three, {0, 3}), std::invalid_argument);
  EXPECT_THROW(PointedMap(two, three, {0}), std::invalid_argument);
  EXPECT_THROW(compose(PointedMap::identity(two), PointedMap::identity(three)), std::invalid_argument);
}

TEST(PointedSet, CategoryLaws) {
  PointedSet a(3), b(3), c(2);
  for (const auto& f : all_maps(a, b)) {
    EXPECT_EQ(compose(PointedMap::identity(a), f), f);
    EXPECT_EQ(compose(f, PointedMap::identity(b)), f);
    for (const auto& g : all_maps(b, c))
      for (const auto& h : all_maps(c, PointedSet(2))) EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}

TEST(PointedSet, MonoEpiIsoAgreeWithWitnesses) {
  for (Index n = 1; n <= 4; ++n)
    for (Index m = 1; m <= 4; ++m)
      for (const auto& f : all_maps(PointedSet(n), PointedSet(m))) {
        auto col = find_collision(f);
        auto miss = find_missed(f);
        EXPECT_EQ(is_mono(f), !col.has_value());
        EXPECT_EQ(is_epi(f), !miss.has_value());
        EXPECT_EQ(is_iso(f), is_mono(f) && is_epi(f));
        auto r = check_mono(f);
        EXPECT_EQ(bool(r), is_mono(f));
        if (!r) {
          EXPECT_NE(r.witness->first, r.witness->second);
          EXPECT_EQ(f(r.witness->first), f(r.witness->second));
        }
      }
}

TEST(PointedSet, SmashIndexing) {
  PointedSet a(3), b(4);
  PointedSet s = smash(a, b);
  EXPECT_EQ(s.size(), 1u + 2u * 3u);
  EXPECT_EQ(smash_index(a, b, 0, 2), 0u);
  EXPECT_EQ(smash_index(a, b, 1, 1), 1u);
  EXPECT_EQ(smash_index(a, b, 2, 3), 6u);
  for (Index z = 1; z < s.size(); ++z) {
    auto [x, y] = smash_unpair(a, b, z);
    EXPECT_EQ(smash_index(a, b, x, y), z);
  }
}

TEST(PointedSet, SmashIsFunctorial) {
  PointedSet a(3), b(2), c(3);
  for (const auto& f : all_maps(a, c))
    for (const auto& g : all_maps(b, b)) {
      for (const auto& f2 : all_maps(c, b)) {
        EXPECT_EQ(compose(smash(f, g), smash(f2, g)), smash(compose(f, f2), compose(g, g)));
      }
    }
  EXPECT_EQ(smash(PointedMap::identity(a), PointedMap::identity(b)), PointedMap::identity(smash(a, b)));
}

// The copairing is the unique map out of the wedge restricting to the given maps.
TEST(PointedSet, WedgeUniversalPropertyExhaustive) {
  for (Index x = 1; x <= 3; ++x)
    for (Index y = 1; y <= 3; ++y)
      for (Index t = 1; t <= 3; ++t) {
        PointedSet a(x), b(y), c(t);
        auto w = PointedSets::wedge({a, b});
        ASSERT_EQ(w.object.size(), x + y - 1);
        auto candidates = all_maps(w.object, c);
        for (const auto& f : all_maps(a, c))
          for (const auto& g : all_maps(b, c)) {
            PointedMap maps[2] = {f, g};
            PointedMap h = w.factor(maps);
            EXPECT_EQ(compose(w.legs[0], h), f);
            EXPECT_EQ(compose(w.legs[1], h), g);
            int hits = 0;
            for (const auto& k : candidates) hits += compose(w.legs[0], k) == f && compose(w.legs[1], k) == g;
            EXPECT_EQ(hits, 1);
          }
      }
}

TEST(PointedSet, CoequalizerUniversalPropertyExhaustive) {
  for (Index x = 1; x <= 3; ++x)
    for (Index y = 1; y <= 4; ++y) {
      PointedSet a(x), b(y);
      for (const auto& f : all_maps(a, b))
        for (const auto& g : all_maps(a, b)) {
          auto q = PointedSets::coequalizer(f, g);
          const PointedMap& leg = q.legs[0];
          ASSERT_TRUE(is_epi(leg));
          EXPECT_EQ(compose(f, leg), compose(g, leg));
          // Classes are numbered by least member.
          Index next = 1;
          for (Index e = 1; e < b.size(); ++e)
            if (leg(e) == next) ++next;
            else EXPECT_LT(leg(e), next);
          for (const auto& h : all_maps(b, PointedSet(3))) {
            if (compose(f, h) != compose(g, h)) {
              EXPECT_THROW(q.factor1(h), std::invalid_argument);
              continue;
            }
            PointedMap m = q.factor1(h);
            EXPECT_EQ(compose(leg, m), h);
            int hits = 0;
            for (const auto& k : all_maps(q.object, PointedSet(3))) hits += compose(leg, k) == h;
            EXPECT_EQ(hits, 1);
          }
        }
    }
}

TEST(PointedSet, PullbackIsLimit) {
  PointedSet b(3), c(4), d(3);
  for (const auto& f : all_maps(b, d))
    for (const auto& g : all_maps(c, d)) {
      auto pb = pullback(f, g);
      EXPECT_EQ(compose(pb.to_first, f), compose(pb.to_second, g));
      Index count = 0;
      for (Index i = 0; i < b.size(); ++i)
        for (Index j = 0; j < c.size(); ++j) count += f(i) == g(j);
      EXPECT_EQ(pb.object.size(), count);
    }
}

TEST(PointedSet, DescendFactorsThroughEpi) {
  PointedSet a(4), b(3);
  PointedMap epi(a, b, {0, 1, 2, 2});
  PointedMap h(a, PointedSet(3), {0, 2, 1, 1});
  EXPECT_EQ(compose(epi, PointedSets::descend(epi, h)), h);
  PointedMap bad(a, PointedSet(3), {0, 2, 1, 2});
  EXPECT_THROW(PointedSets::descend(epi, bad), std::invalid_argument);
}

TEST(Kernels, ScalarAndAvx2Agree) {
  if (!kernels::cpu_has_avx2()) GTEST_SKIP() << "no AVX2";
#ifdef REEDY_HAVE_AVX2_KERNELS
  std::mt19937 rng(7);
  for (int len : {0, 1, 7, 8, 9, 31, 64, 100, 1023}) {
    std::vector<Index> table(50), idx(len), a(len), b(len), o1(len), o2(len);
    for (auto& t : table) t = rng() % 1000;
    for (auto& i : idx) i = rng() % table.size();
    for (int i = 0; i < len; ++i) a[i] = b[i] = rng() % 5;
    kernels::scalar::gather(idx, table, o1);
    kernels::avx2::gather(idx, table, o2);
    EXPECT_EQ(o1, o2);
    EXPECT_EQ(kernels::scalar::max(a), kernels::avx2::max(a));
    EXPECT_EQ(kernels::scalar::mismatch(a, b), kernels::avx2::mismatch(a, b));
    for (int pos = 0; pos < len; pos += 1 + len / 5) {
      auto c = b;
      c[pos] += 1;
      EXPECT_EQ(kernels::scalar::mismatch(a, c), static_cast<std::size_t>(pos));
      EXPECT_EQ(kernels::avx2::mismatch(a, c), static_cast<std::size_t>(pos));
    }
  }
#endif
}

TEST(Kernels, ForcedIsaGivesSameMaps) {
  PointedSet a(4), b(3);
  auto run = [&] {
    std::vector<PointedMap> out;
    for (const auto& f : all_maps(a, b))
      for (const auto& g : all_maps(b, a)) out.push_back(compose(f, g));
    return out;
  };
  const kernels::Isa before = kernels::active_isa();
  ASSERT_TRUE(kernels::force_isa(kernels::Isa::scalar));
  auto s = run();
  if (kernels::force_isa(kernels::Isa::avx2)) EXPECT_EQ(run(), s);
  kernels::force_isa(before);
}
