#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "hazel/metatheory.hpp"
#include "hazel/text.hpp"

using namespace hazel;
using namespace hazel::actions;

namespace {

HExp e(std::string_view s) { return *parse_hexp(s); }
HTyp t(std::string_view s) { return *parse_htyp(s); }
ZExp z(std::string_view s) { return *parse_zexp(s); }

std::string first_failure(const FuzzReport& r) {
  return r.failures.empty() ? "" : r.failures.front().property + ": " + r.failures.front().detail;
}

}  // namespace

TEST(Generator, StatesAreWellTyped) {
  GenConfig cfg;
  cfg.seed = 3;
  Generator g(cfg);
  int analytic = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto s = g.state();
    ASSERT_TRUE(well_typed(s)) << print(s.z);
    analytic += s.analytic;
  }
  EXPECT_GT(analytic, 800);
  EXPECT_LT(analytic, 1200);
}

TEST(Generator, SameSeedSameTerms) {
  GenConfig cfg;
  cfg.seed = 11;
  Generator a(cfg), b(cfg);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(a.state(), b.state());
}

TEST(Generator, CoversEveryExpressionForm) {
  GenConfig cfg;
  cfg.max_depth = 5;
  Generator g(cfg);
  std::set<std::size_t> seen;
  std::function<void(const HExp&)> walk = [&](const HExp& x) {
    seen.insert(x.get().index());
    std::visit(overloaded{
                   [&](const ex::Lam& n) { walk(n.body); },
                   [&](const ex::Ap& n) { walk(n.fun), walk(n.arg); },
                   [&](const ex::Plus& n) { walk(n.l), walk(n.r); },
                   [&](const ex::Asc& n) { walk(n.e); },
                   [&](const ex::NonEmptyHole& n) { walk(n.e); },
                   [&](const ex::Inj& n) { walk(n.e); },
                   [&](const ex::Case& n) { walk(n.scrut), walk(n.l), walk(n.r); },
                   [](const auto&) {},
               },
               x.get());
  };
  for (int i = 0; i < 500; ++i) walk(erase(g.state().z));
  EXPECT_EQ(seen.size(), std::variant_size_v<std::decay_t<decltype(mk::ehole().get())>>);
}

TEST(Generator, HeightStaysWithinDepth) {
  std::function<int(const HExp&)> height = [&](const HExp& x) -> int {
    return 1 + std::visit(overloaded{
                              [&](const ex::Lam& n) { return height(n.body); },
                              [&](const ex::Ap& n) { return std::max(height(n.fun), height(n.arg)); },
                              [&](const ex::Plus& n) { return std::max(height(n.l), height(n.r)); },
                              [&](const ex::Asc& n) { return height(n.e); },
                              [&](const ex::NonEmptyHole& n) { return height(n.e); },
                              [&](const ex::Inj& n) { return height(n.e); },
                              [&](const ex::Case& n) {
                                return std::max({height(n.scrut), height(n.l), height(n.r)});
                              },
                              [](const auto&) { return 0; },
                          },
                          x.get());
  };
  GenConfig cfg;
  Generator g(cfg);
  for (int i = 0; i < 1000; ++i) EXPECT_LE(height(erase(g.state().z)), cfg.max_depth);
}

TEST(EnumerateTypes, Counts) {
  EXPECT_EQ(enumerate_types(1).size(), 2u);
  EXPECT_EQ(enumerate_types(2).size(), 10u);
  EXPECT_EQ(enumerate_types(3).size(), 202u);
}

TEST(ConsistencyComplement, AllPairsToDepthThree) {
  const auto types = enumerate_types(3);
  std::size_t pairs = 0;
  for (const auto& a : types) {
    EXPECT_TRUE(consistent(a, a));
    for (const auto& b : types) {
      ++pairs;
      ASSERT_EQ(inconsistent(a, b), !consistent(a, b)) << print(a) << " vs " << print(b);
      ASSERT_EQ(consistent(a, b), consistent(b, a));
    }
  }
  EXPECT_EQ(pairs, 40804u);
  EXPECT_TRUE(consistent(mk::num(), mk::thole()));
  EXPECT_TRUE(consistent(mk::thole(), t("num -> num")));
  EXPECT_FALSE(consistent(mk::num(), t("num -> num")));
}

TEST(Witness, ConstructAscribedIncrement) {
  const HExp target = e("\\x.x + 1 : num -> num");
  const auto w = construct_witness_syn({}, target);
  auto r = perform_syn_iter({}, root_cursor(mk::ehole()), mk::thole(), w);
  ASSERT_TRUE(r.ok()) << "action " << r.error().index << ": " << r.error().error.message();
  EXPECT_EQ(r->z, root_cursor(target));
  EXPECT_EQ(r->t, t("num -> num"));
}

TEST(Witness, ConstructCaseOverAscribedScrutinee) {
  const Ctx ctx{{"g", t("num -> num")}};
  const HExp target = e("case(inl(2) : num + {}; a.g(a); b.{b}) : num");
  const auto w = construct_witness_syn(ctx, target);
  auto r = perform_syn_iter(ctx, root_cursor(mk::ehole()), mk::thole(), w);
  ASSERT_TRUE(r.ok()) << "action " << r.error().index << " (" << print(w[r.error().index])
                      << "): " << r.error().error.message();
  EXPECT_EQ(r->z, root_cursor(target));
  EXPECT_EQ(r->t, mk::num());
}

TEST(Witness, ConstructAnalyticTermInsideHole) {
  const Ctx ctx{{"f", t("num -> num")}};
  const HExp target = e("f(1)");
  const auto w = construct_witness_ana(ctx, target, t("{}"));
  auto r = perform_ana_iter(ctx, root_cursor(mk::ehole()), t("{}"), w);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(*r, root_cursor(target));
}

TEST(Witness, ConstructRejectsIllTypedTargets) {
  EXPECT_THROW(construct_witness_syn({}, e("\\x.x")), std::invalid_argument);
  EXPECT_THROW(construct_witness_ana({}, e("1"), t("num -> num")), std::invalid_argument);
}

TEST(Witness, ConstructTypes) {
  for (const auto& ty : enumerate_types(3)) {
    auto r = Engine{}.perform_typ_iter(ZTyp{zt::Cursor{mk::thole()}}, construct_witness_typ(ty));
    ASSERT_TRUE(r.ok()) << print(ty);
    EXPECT_EQ(*r, ZTyp{zt::Cursor{ty}}) << print(ty);
  }
}

TEST(Witness, ReachAcrossIntoAscribedType) {
  const ZExp from = z("\\x.x + >|1|< : num -> num");
  const ZExp to = z("\\x.x + 1 : num -> >|num|<");
  const auto w = reachability_witness(from, to);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(only_movements(*w));
  EXPECT_EQ(w->size(), 5u);
  auto r = perform_syn_iter({}, from, t("num -> num"), *w);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->z, to);
}

TEST(Witness, ReachRequiresEqualErasures) {
  EXPECT_FALSE(reachability_witness(z(">|1|<"), z(">|2|<")).has_value());
}

TEST(Witness, ReachDownRejectsMissingPositions) {
  EXPECT_THROW(reach_down_witness(e("1 + 2"), CursorPath{3}), std::invalid_argument);
  EXPECT_EQ(reach_down_witness(e("1 + 2"), CursorPath{2}), (ActionList{move_child(2)}));
}

TEST(Witness, OnlyMovements) {
  EXPECT_TRUE(only_movements({}));
  EXPECT_TRUE(only_movements({move_parent(), move_child(2)}));
  EXPECT_FALSE(only_movements({move_parent(), del()}));
}

TEST(Fuzz, CorrectEngineSurvivesEverySuite) {
  GenConfig cfg;
  cfg.seed = 5;
  auto s = fuzz_sensibility(cfg, 500, 30);
  EXPECT_TRUE(s.ok()) << first_failure(s);
  EXPECT_EQ(s.cases_run, 500u);
  auto m = fuzz_move_invariance(cfg, 500, 8);
  EXPECT_TRUE(m.ok()) << first_failure(m);
  auto d = fuzz_determinism(cfg, 200);
  EXPECT_TRUE(d.ok()) << first_failure(d);
  EXPECT_GT(d.checks_run, 200u * 18u);
  auto r = check_reachability(cfg, 300);
  EXPECT_TRUE(r.ok()) << first_failure(r);
  cfg.max_depth = 5;
  auto c = check_constructability(cfg, 300);
  EXPECT_TRUE(c.ok()) << first_failure(c);
}

TEST(Fuzz, SameSeedSameReport) {
  GenConfig cfg;
  cfg.seed = 99;
  const Engine broken(Mutation::PlusSkipsConsistency);
  auto a = fuzz_sensibility(cfg, 300, 20, broken);
  auto b = fuzz_sensibility(cfg, 300, 20, broken);
  EXPECT_FALSE(a.ok());
  EXPECT_EQ(a, b);
  EXPECT_EQ(fuzz_determinism(cfg, 50), fuzz_determinism(cfg, 50));
}

TEST(Fuzz, FailuresCarryReplayableInputs) {
  GenConfig cfg;
  const Engine broken(Mutation::ApParentSwapsOperands);
  auto r = fuzz_move_invariance(cfg, 500, 8, broken);
  ASSERT_FALSE(r.ok());
  const auto& f = r.failures.front();
  EXPECT_EQ(f.property, "move-invariance");
  EXPECT_EQ(f.actions.size(), f.index + 1);
  EXPECT_TRUE(well_typed(f.initial));
  EXPECT_TRUE(only_movements(f.actions));
}

// Each deliberate defect must be caught by the suite aimed at it.
TEST(Mutations, EachIsCaught) {
  GenConfig cfg;
  cfg.seed = 2;
  for (Mutation m : all_mutations()) {
    const Engine engine(m);
    bool caught = false;
    switch (m) {
      case Mutation::PlusSkipsConsistency:
        caught = !fuzz_sensibility(cfg, 500, 30, engine).ok();
        break;
      case Mutation::SubsumeFirst:
        caught = !fuzz_determinism(cfg, 200, engine).ok();
        break;
      case Mutation::ApParentSwapsOperands:
        caught = !fuzz_move_invariance(cfg, 500, 8, engine).ok();
        break;
      case Mutation::CaseChild3SelectsLeft:
        caught = !check_reachability(cfg, 500, engine).ok();
        break;
      case Mutation::NeHoleShapeDisabled:
        caught = !check_constructability(cfg, 200, engine).ok();
        break;
      case Mutation::None:
        break;
    }
    EXPECT_TRUE(caught) << mutation_name(m);
  }
}
