#include <gtest/gtest.h>

#include "hazel/action.hpp"

using namespace hazel;
using namespace hazel::mk;
using namespace hazel::actions;

namespace {

HTyp nn() { return arrow(num(), num()); }
ZTyp tcur(HTyp t) { return zt::Cursor{std::move(t)}; }
ZExp ecur(HExp e) { return ze::Cursor{std::move(e)}; }
ZExp hole() { return ecur(ehole()); }
const Ctx kIncr{{"incr", arrow(num(), num())}};

ActionError::Kind kind_of(const ActionError& e) { return e.kind; }

}  // namespace

// --- type actions ---------------------------------------------------------

TEST(TypeActions, ConstructNumOnHole) {
  auto r = perform_typ(tcur(thole()), construct(shape::Num{}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, tcur(num()));
}

TEST(TypeActions, ParentFromArrowDomain) {
  auto r = perform_typ(ZTyp{zt::ArrowL{tcur(num()), thole()}}, move_parent());
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, tcur(arrow(num(), thole())));
}

TEST(TypeActions, ConstructNumOnNonHoleRejected) {
  auto r = perform_typ(tcur(num()), construct(shape::Num{}));
  ASSERT_FALSE(r);
  EXPECT_EQ(kind_of(r.error()), ActionError::Kind::NoRuleApplies);
}

TEST(TypeActions, ConstructArrowAndSumKeepFocusOnLeft) {
  EXPECT_EQ((*perform_typ(tcur(num()), construct(shape::Arrow{}))),
            (ZTyp{zt::ArrowR{num(), tcur(thole())}}));
  EXPECT_EQ((*perform_typ(tcur(num()), construct(shape::Sum{}))),
            (ZTyp{zt::SumR{num(), tcur(thole())}}));
}

TEST(TypeActions, MovesAndErrors) {
  ZTyp s = tcur(sum(num(), nn()));
  EXPECT_EQ(*perform_typ(s, move_child(2)), (ZTyp{zt::SumR{num(), tcur(nn())}}));
  EXPECT_EQ(perform_typ(s, move_child(3)).error().kind, ActionError::Kind::InvalidChild);
  EXPECT_EQ(perform_typ(s, move_parent()).error().kind, ActionError::Kind::AtRoot);
  EXPECT_EQ((perform_typ(s, construct(shape::Ap{})).error().kind),
            ActionError::Kind::CursorInType);
  EXPECT_EQ((*perform_typ(ZTyp{zt::SumR{num(), tcur(nn())}}, del())),
            (ZTyp{zt::SumR{num(), tcur(thole())}}));
}

TEST(TypeActions, DeepParentGoesThroughZipper) {
  ZTyp z = zt::ArrowR{num(), ZTyp{zt::SumL{tcur(num()), thole()}}};
  EXPECT_EQ(*perform_typ(z, move_parent()), (ZTyp{zt::ArrowR{num(), tcur(sum(num(), thole()))}}));
}

// --- movement ---------------------------------------------------------------

TEST(Movement, IntoLambdaBody) {
  auto r = perform_move(ecur(lam("x", ehole())), dir::Child{1});
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::LamZ{"x", hole()}}));
}

TEST(Movement, ParentFromArgument) {
  auto r = perform_move(ZExp{ze::ApR{var("incr"), ecur(lit(3))}}, dir::Parent{});
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, ecur(ap(var("incr"), lit(3))));
}

TEST(Movement, CaseThirdChild) {
  HExp e = case_of(var("s"), "a", lit(1), "b", lit(2));
  auto r = perform_move(ecur(e), dir::Child{3});
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::CaseR{var("s"), "a", lit(1), "b", ecur(lit(2))}}));
}

TEST(Movement, Errors) {
  EXPECT_EQ((perform_move(ecur(lit(1)), dir::Parent{}).error().kind), ActionError::Kind::AtRoot);
  auto bad = perform_move(ecur(lam("x", ehole())), dir::Child{2});
  EXPECT_EQ(bad.error().kind, ActionError::Kind::InvalidChild);
  EXPECT_EQ(bad.error().child, 2);
}

TEST(Movement, AscriptionChildrenAreExpressionMoves) {
  HExp e = asc(lit(1), num());
  EXPECT_EQ((*perform_move(ecur(e), dir::Child{1})), (ZExp{ze::AscL{ecur(lit(1)), num()}}));
  EXPECT_EQ((*perform_move(ecur(e), dir::Child{2})), (ZExp{ze::AscR{lit(1), tcur(num())}}));
  EXPECT_EQ((*perform_move(ZExp{ze::AscR{lit(1), tcur(num())}}, dir::Parent{})), ecur(e));
}

// --- synthetic actions --------------------------------------------------------

TEST(SynActions, ConstructLambdaAscribesHoleArrow) {
  auto r = perform_syn({}, hole(), thole(), construct(shape::Lam{"x"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, (ZExp{ze::AscR{lam("x", ehole()), ZTyp{zt::ArrowL{tcur(thole()), thole()}}}}));
  EXPECT_EQ(r->t, arrow(thole(), thole()));
}

TEST(SynActions, ConstructApOnFunction) {
  auto r = perform_syn(kIncr, ecur(var("incr")), nn(), construct(shape::Ap{}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, (ZExp{ze::ApR{var("incr"), hole()}}));
  EXPECT_EQ(r->t, num());
}

TEST(SynActions, ConstructApOnNonFunctionWrapsInHole) {
  auto r = perform_syn({}, ecur(lit(3)), num(), construct(shape::Ap{}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, (ZExp{ze::ApR{nehole(lit(3)), hole()}}));
  EXPECT_EQ(r->t, thole());
}

TEST(SynActions, Delete) {
  auto r = perform_syn({}, ecur(lit(7)), num(), del());
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, hole());
  EXPECT_EQ(r->t, thole());
}

TEST(SynActions, DeleteIsIdempotent) {
  auto once = perform_syn_iter({}, ecur(lit(7)), num(), {del()});
  auto twice = perform_syn_iter({}, ecur(lit(7)), num(), {del(), del()});
  EXPECT_EQ(*once, *twice);
}

TEST(SynActions, ConstructPlusOnNumber) {
  auto r = perform_syn({}, ecur(lit(3)), num(), construct(shape::Plus{}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, (ZExp{ze::PlusR{lit(3), hole()}}));
  EXPECT_EQ(r->t, num());
}

TEST(SynActions, ConstructPlusOnFunctionWrapsInHole) {
  auto r = perform_syn(kIncr, ecur(var("incr")), nn(), construct(shape::Plus{}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, (ZExp{ze::PlusR{nehole(var("incr")), hole()}}));
}

TEST(SynActions, UnboundVariable) {
  auto r = perform_syn({}, hole(), thole(), construct(shape::Var{"y"}));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().kind, ActionError::Kind::UnboundVariable);
  EXPECT_EQ(r.error().var, VarName("y"));
}

TEST(SynActions, LeafConstructsNeedAHole) {
  for (Shape s : {Shape{shape::Var{"incr"}}, Shape{shape::Lam{"x"}}, Shape{shape::Lit{1}},
                  Shape{shape::Inj{InjSide::L}}}) {
    auto r = perform_syn(kIncr, ecur(lit(3)), num(), construct(s));
    ASSERT_FALSE(r);
    EXPECT_EQ(r.error().kind, ActionError::Kind::NoRuleApplies);
  }
}

TEST(SynActions, FinishNeedsNonEmptyHole) {
  auto r = perform_syn({}, ecur(lit(3)), num(), finish());
  ASSERT_FALSE(r);
  auto ok = perform_syn({}, ecur(nehole(lit(3))), thole(), finish());
  ASSERT_TRUE(ok);
  EXPECT_EQ(ok->z, ecur(lit(3)));
  EXPECT_EQ(ok->t, num());
}

TEST(SynActions, ConstructInjectionAscribesHoleSum) {
  auto r = perform_syn({}, hole(), thole(), construct(shape::Inj{InjSide::R}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, (ZExp{ze::AscR{inr(ehole()), ZTyp{zt::SumL{tcur(thole()), thole()}}}}));
  EXPECT_EQ(r->t, sum(thole(), thole()));
}

TEST(SynActions, ConstructCaseOnSumScrutinee) {
  Ctx ctx{{"s", sum(num(), num())}};
  auto r = perform_syn(ctx, ecur(var("s")), sum(num(), num()),
                       construct(shape::Case{"a", "b"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, (ZExp{ze::AscL{ZExp{ze::CaseL{var("s"), "a", hole(), "b", ehole()}}, thole()}}));
  EXPECT_EQ(r->t, thole());
}

TEST(SynActions, ConstructCaseOnNonSumWrapsScrutinee) {
  auto r = perform_syn({}, ecur(lit(1)), num(), construct(shape::Case{"a", "b"}));
  ASSERT_TRUE(r);
  ZExp body = ze::CaseScrut{ZExp{ze::NonEmptyHoleZ{ecur(lit(1))}}, "a", ehole(), "b", ehole()};
  EXPECT_EQ(r->z, (ZExp{ze::AscL{body, thole()}}));
}

TEST(SynActions, ConstructAscNests) {
  auto r = perform_syn({}, ZExp{ze::AscL{ecur(asc(lit(1), num())), num()}}, num(),
                       construct(shape::Asc{}));
  ASSERT_TRUE(r);
  EXPECT_EQ(erase(r->z), asc(asc(asc(lit(1), num()), num()), num()));
}

TEST(SynActions, AscribedTypeChangeRechecksExpression) {
  // Turning `1 : num` into `1 : num + {}` must fail: 1 does not analyze against a sum.
  ZExp z = ze::AscR{lit(1), tcur(num())};
  EXPECT_FALSE(perform_syn({}, z, num(), construct(shape::Sum{})));
  // Deleting the type is fine.
  auto r = perform_syn({}, z, num(), del());
  ASSERT_TRUE(r);
  EXPECT_EQ(r->t, thole());
}

TEST(SynActions, ExpressionActionInsideTypeIsRejected) {
  ZExp z = ze::AscR{lit(1), tcur(num())};
  auto r = perform_syn({}, z, num(), construct(shape::Lit{3}));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().kind, ActionError::Kind::CursorInType);
}

TEST(SynActions, IterationIsLeftFoldAndReportsIndex) {
  auto id = perform_syn_iter({}, hole(), thole(), {});
  ASSERT_TRUE(id);
  EXPECT_EQ(id->z, hole());
  EXPECT_EQ(id->t, thole());
  auto bad = perform_syn_iter({}, hole(), thole(),
                              {construct(shape::Lit{1}), move_child(1), del()});
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.error().index, 1u);
  EXPECT_EQ(bad.error().error.kind, ActionError::Kind::InvalidChild);
}

// --- analytic actions ---------------------------------------------------------

TEST(AnaActions, InconsistentVariableGoesInHole) {
  auto r = perform_ana(kIncr, hole(), num(), construct(shape::Var{"incr"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::NonEmptyHoleZ{ecur(var("incr"))}}));
}

TEST(AnaActions, ConsistentVariableIsPlain) {
  auto r = perform_ana(kIncr, hole(), nn(), construct(shape::Var{"incr"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, ecur(var("incr")));
}

TEST(AnaActions, LambdaAgainstArrow) {
  auto r = perform_ana({}, hole(), nn(), construct(shape::Lam{"x"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::LamZ{"x", hole()}}));
}

TEST(AnaActions, LambdaAgainstNumGoesInHole) {
  auto r = perform_ana({}, hole(), num(), construct(shape::Lam{"x"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::NonEmptyHoleZ{ZExp{ze::AscR{
                    lam("x", ehole()), ZTyp{zt::ArrowL{tcur(thole()), thole()}}}}}}));
}

TEST(AnaActions, FinishAgainstExpectedType) {
  auto r = perform_ana(kIncr, ecur(nehole(ap(var("incr"), lit(3)))), num(), finish());
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, ecur(ap(var("incr"), lit(3))));
}

TEST(AnaActions, FinishInconsistentIsRejected) {
  auto r = perform_ana(kIncr, ecur(nehole(var("incr"))), num(), finish());
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().kind, ActionError::Kind::TypeInconsistentFinish);
}

TEST(AnaActions, InjectionAgainstArrowGoesInHole) {
  auto r = perform_ana({}, hole(), nn(), construct(shape::Inj{InjSide::L}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::NonEmptyHoleZ{ZExp{ze::AscR{
                    inl(ehole()), ZTyp{zt::SumL{tcur(thole()), thole()}}}}}}));
}

TEST(AnaActions, InjectionAgainstSum) {
  auto r = perform_ana({}, hole(), sum(num(), nn()), construct(shape::Inj{InjSide::R}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::InjZ{InjSide::R, hole()}}));
}

TEST(AnaActions, LiteralAgainstArrowGoesInHole) {
  auto r = perform_ana({}, hole(), nn(), construct(shape::Lit{5}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::NonEmptyHoleZ{ecur(lit(5))}}));
}

TEST(AnaActions, CaseOnHole) {
  auto r = perform_ana({}, hole(), num(), construct(shape::Case{"a", "b"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::CaseScrut{hole(), "a", ehole(), "b", ehole()}}));
}

TEST(AnaActions, ScrutineeEditMustKeepSumType) {
  Ctx ctx{{"s", sum(num(), num())}};
  ZExp z = ze::CaseScrut{ecur(var("s")), "a", var("a"), "b", lit(0)};
  EXPECT_FALSE(perform_ana(ctx, z, num(), construct(shape::Plus{})));
  auto r = perform_ana(ctx, z, num(), del());
  ASSERT_TRUE(r);
  EXPECT_EQ(erase(*r), case_of(ehole(), "a", var("a"), "b", lit(0)));
}

TEST(AnaActions, BranchSeesBinder) {
  Ctx ctx{{"s", sum(num(), nn())}};
  ZExp z = ze::CaseR{var("s"), "a", var("a"), "b", hole()};
  auto r = perform_ana(ctx, z, num(), construct(shape::Var{"b"}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::CaseR{var("s"), "a", var("a"), "b",
                               ZExp{ze::NonEmptyHoleZ{ecur(var("b"))}}}}));
}

TEST(AnaActions, SubsumptionForPlus) {
  auto r = perform_ana({}, ecur(lit(1)), num(), construct(shape::Plus{}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ZExp{ze::PlusR{lit(1), hole()}}));
  // Result type num is inconsistent with an arrow goal.
  EXPECT_FALSE(perform_ana({}, ecur(nehole(lit(1))), nn(), construct(shape::Plus{})));
}

// --- worked sessions ------------------------------------------------------------

TEST(Sessions, BuildIncrementFunction) {
  ActionList script = {
      construct(shape::Lam{"x"}), construct(shape::Num{}), move_parent(),
      move_child(2),              construct(shape::Num{}), move_parent(),
      move_parent(),              move_child(1),           move_child(1),
      construct(shape::Var{"x"}), construct(shape::Plus{}), construct(shape::Lit{1}),
  };
  auto r = perform_syn_iter({}, hole(), thole(), script);
  ASSERT_TRUE(r);
  ZExp expected = ze::AscL{
      ZExp{ze::LamZ{"x", ZExp{ze::PlusR{var("x"), ecur(lit(1))}}}}, nn()};
  EXPECT_EQ(r->z, expected);
  EXPECT_EQ(r->t, nn());
}

TEST(Sessions, ApplyIncrementTwice) {
  ActionList script = {
      construct(shape::Var{"incr"}), construct(shape::Ap{}), construct(shape::Var{"incr"}),
      construct(shape::Ap{}),        construct(shape::Lit{3}), move_parent(),
      move_parent(),                 finish(),
  };
  auto r = perform_syn_iter(kIncr, hole(), thole(), script);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->z, (ZExp{ze::ApR{var("incr"), ecur(ap(var("incr"), lit(3)))}}));
  EXPECT_EQ(r->t, num());
}

// --- palette --------------------------------------------------------------------

TEST(Palette, VariableEnabledThroughHoleInsertion) {
  ZExp z = ze::ApR{var("incr"), hole()};
  auto en = enabled_actions(kIncr, z, num(), {construct(shape::Var{"incr"})});
  ASSERT_EQ(en.size(), 1u);
  EXPECT_TRUE(en[0].second);
}

TEST(Palette, ParentDisabledAtRoot) {
  auto en = enabled_actions({}, ecur(lit(1)), num(), {move_parent(), finish()});
  EXPECT_FALSE(en[0].second);
  EXPECT_FALSE(en[1].second);
}

TEST(Palette, CandidatesIncludeBindersOnPath) {
  ZExp z = ze::AscL{ZExp{ze::LamZ{"x", hole()}}, nn()};
  auto cands = standard_candidates(kIncr, z);
  auto has = [&](const VarName& v) {
    return std::find(cands.begin(), cands.end(), construct(shape::Var{v})) != cands.end();
  };
  EXPECT_TRUE(has("x"));
  EXPECT_TRUE(has("incr"));
  auto en = enabled_actions(kIncr, z, nn(), cands);
  for (const auto& [a, on] : en) {
    if (a == construct(shape::Var{"x"})) EXPECT_TRUE(on);
    if (a == move_parent()) EXPECT_TRUE(on);
    if (a == construct(shape::Num{})) EXPECT_FALSE(on);
  }
}
