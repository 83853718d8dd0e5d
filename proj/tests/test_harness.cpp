#include <gtest/gtest.h>

#include "reedy/harness.hpp"

using namespace reedy;
using namespace reedy::harness;

namespace {
std::string why(const CheckReport& r) { return r.witness ? r.witness->describe() : r.detail; }
}  // namespace

TEST(Harness, RngStreamsAreReproducible) {
  Rng a(42, 7), b(42, 7), c(42, 8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Harness, GeneratorsRespectCaps) {
  GenConfig cfg;
  for (int i = 0; i < 50; ++i) {
    Rng rng(1, static_cast<std::uint64_t>(i));
    EXPECT_LE(gen_pointed(rng, cfg).size(), 5u);
    auto z = gen_sset(rng, cfg);
    EXPECT_TRUE(SSets::validate(z));
    for (int k = 0; k <= z.trunc(); ++k) EXPECT_LE(z.at(k).size(), 5u);
    auto b = gen_bisimplicial(rng, 3, 3, 4);
    EXPECT_TRUE(BisimplicialSets::validate(b));
    for (int k = 0; k <= b.trunc(); ++k)
      for (int d = 0; d <= b.at(k).trunc(); ++d) EXPECT_LE(b.at(k).at(d).size(), 4u);
  }
}

TEST(Harness, ImpossibleCapStarves) {
  Rng rng(1, 0);
  EXPECT_THROW(gen_sset(rng, 3, 1), Starvation);
}

TEST(Harness, GoodGeneratorPostcondition) {
  GenConfig cfg;
  for (int i = 0; i < 10; ++i) {
    Rng rng(2, static_cast<std::uint64_t>(i));
    auto x = gen_good_simplicial_spectrum(rng, cfg, i % 2 == 1);
    auto r = i % 2 ? is_positive_good(x) : is_good(x);
    EXPECT_TRUE(r) << why(r);
  }
}

TEST(Harness, FlatMapInstancesHaveFlatEnds) {
  GenConfig cfg;
  for (int i = 0; i < 5; ++i) {
    Rng rng(3, static_cast<std::uint64_t>(i));
    int discards = 0;
    auto inst = gen_thm_hypothesis_instance(rng, cfg, Theorem::flat_map, false, discards);
    EXPECT_TRUE(is_reedy_cofibrant(inst.map.dom(), Model::flat));
    EXPECT_TRUE(is_reedy_cofibrant(inst.map.cod(), Model::flat));
    EXPECT_TRUE(is_pointwise_cofibration(inst.map, Model::flat));
  }
}

TEST(Harness, AdversarialStrategyProducesNonGoodCases) {
  GenConfig cfg;
  cfg.strategy = Strategy::adversarial;
  auto s = run_suite("3.2", cfg, 100);
  EXPECT_GT(s.discards, 0);
  EXPECT_TRUE(s.ok());
}

TEST(Harness, SummariesAreReproducible) {
  GenConfig cfg;
  cfg.seed = 99;
  cfg.strategy = Strategy::rejection;
  auto a = run_suite("4.1", cfg, 8), b = run_suite("4.1", cfg, 8);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.discards, b.discards);
  EXPECT_EQ(a.notes, b.notes);
  EXPECT_TRUE(a.ok());
}

TEST(Harness, MediatingMapLemma) {
  PointedSet d(4), b(3), c(3);
  for (const auto& f1 : all_monos(c, d))
    for (const auto& f2 : all_monos(b, d)) EXPECT_TRUE(check_mediating_mono(f1, f2));
  EXPECT_EQ(all_monos(PointedSet(3), PointedSet(4)).size(), 6u);
}

// A recipe shrinks to one bar piece on a base with a single non-degenerate simplex.
TEST(Harness, ShrinkRemovesPiecesAndSimplices) {
  GenConfig cfg;
  Rng rng(5, 0);
  Recipe r = gen_good_recipe(rng, cfg, false);
  Piece bar;
  bar.kind = PieceKind::bar;
  bar.w = sphere(0, cfg.D);
  bar.sub = SSets::identity(standard_simplex(2, cfg.K));
  r.pieces.insert(r.pieces.begin() + 1, bar);
  auto has_bar = [](const Recipe& c) {
    for (const auto& p : c.pieces)
      if (p.kind == PieceKind::bar) return true;
    return false;
  };
  Recipe s = shrink_recipe(r, has_bar);
  ASSERT_EQ(s.pieces.size(), 1u);
  EXPECT_EQ(s.pieces[0].kind, PieceKind::bar);
  const SimplicialSet& z = s.pieces[0].sub.cod();
  EXPECT_TRUE(SSets::validate(z));
  EXPECT_EQ(z.at(0).size(), 2u);  // a single vertex
  EXPECT_TRUE(SimplicialSpectra::validate(build_object(s)));
}

TEST(Harness, DemosSatisfyHypotheses) {
  auto g = good_demo();
  EXPECT_TRUE(is_good(g));
  auto f = thm14_demo();
  auto h = check_hypotheses(f, Theorem::composite, false);
  EXPECT_TRUE(h) << why(h);
  auto c = check_conclusion(f, Theorem::composite, false);
  EXPECT_TRUE(c) << why(c);
}

TEST(Harness, SmallSuitesPass) {
  GenConfig cfg;
  for (const auto& name : suite_names()) {
    auto s = run_suite(name, cfg, 3);
    EXPECT_TRUE(s.ok()) << name << " " << (s.counterexample ? s.counterexample->report : s.starvation);
    EXPECT_GT(s.cases, 0) << name;
  }
}
