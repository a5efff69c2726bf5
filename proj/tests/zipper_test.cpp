#include <gtest/gtest.h>

#include "hazel/zipper.hpp"

using namespace hazel;
using namespace hazel::mk;

namespace {

ZTyp tcur(HTyp t) { return zt::Cursor{std::move(t)}; }
ZExp ecur(HExp e) { return ze::Cursor{std::move(e)}; }

HExp sample() {
  return asc(case_of(nehole(ap(var("f"), plus(lit(1), ehole()))), "a", inl(var("a")), "b",
                     lam("y", var("b"))),
             sum(arrow(num(), thole()), num()));
}

}  // namespace

TEST(Erase, TypeCursorAtTop) { EXPECT_EQ(erase(tcur(num())), num()); }

TEST(Erase, ArrowLeft) {
  EXPECT_EQ((erase(ZTyp{zt::ArrowL{tcur(num()), thole()}})), arrow(num(), thole()));
}

TEST(Erase, SumRight) {
  EXPECT_EQ((erase(ZTyp{zt::SumR{num(), tcur(thole())}})), sum(num(), thole()));
}

TEST(Erase, ExpressionCursorAtTop) { EXPECT_EQ(erase(ecur(ehole())), ehole()); }

TEST(Erase, LambdaWithCursorInAscribedType) {
  ZExp z = ze::AscR{lam("x", ehole()), ZTyp{zt::ArrowL{tcur(thole()), thole()}}};
  EXPECT_EQ(erase(z), asc(lam("x", ehole()), arrow(thole(), thole())));
}

TEST(Erase, ArgumentInsideNonEmptyHole) {
  ZExp z = ze::ApR{var("incr"), ecur(nehole(var("incr")))};
  EXPECT_EQ(erase(z), ap(var("incr"), nehole(var("incr"))));
}

TEST(RootCursor, Embeds) {
  EXPECT_EQ(root_cursor(ehole()), ecur(ehole()));
  EXPECT_EQ(root_cursor(lit(3)), ecur(lit(3)));
  EXPECT_EQ(erase(root_cursor(sample())), sample());
}

TEST(CursorPath, RootIsEmpty) { EXPECT_TRUE(cursor_path(ecur(lit(1))).empty()); }

TEST(PlaceCursor, SecondChildOfApplication) {
  auto z = place_cursor(ap(var("f"), lit(3)), {2});
  ASSERT_TRUE(z);
  EXPECT_EQ(*z, (ZExp{ze::ApR{var("f"), ecur(lit(3))}}));
}

TEST(PlaceCursor, LeafHasNoChildren) { EXPECT_FALSE(place_cursor(lit(3), {1})); }

TEST(PlaceCursor, OutOfArity) {
  EXPECT_FALSE(place_cursor(lam("x", ehole()), {2}));
  EXPECT_FALSE(place_cursor(case_of(ehole(), "a", ehole(), "b", ehole()), {4}));
  EXPECT_FALSE(place_cursor(asc(ehole(), num()), {2, 1}));
}

TEST(PlaceCursor, IntoAscribedType) {
  auto z = place_cursor(asc(ehole(), arrow(num(), thole())), {2, 2});
  ASSERT_TRUE(z);
  EXPECT_EQ(*z, (ZExp{ze::AscR{ehole(), ZTyp{zt::ArrowR{num(), tcur(thole())}}}}));
  EXPECT_TRUE(cursor_in_type(*z));
}

TEST(PlaceCursor, RoundTripsEveryPath) {
  HExp e = sample();
  auto paths = all_paths(e);
  EXPECT_EQ(paths.size(), size_of(e));
  for (const auto& p : paths) {
    auto z = place_cursor(e, p);
    ASSERT_TRUE(z);
    EXPECT_EQ(erase(*z), e);
    EXPECT_EQ(cursor_path(*z), p);
    EXPECT_EQ(count_cursors(*z), 1);
    EXPECT_EQ(place_cursor(erase(*z), cursor_path(*z)), z);
  }
}

TEST(Binders, EnclosingCursor) {
  HExp e = lam("f", case_of(ehole(), "a", lam("g", ehole()), "b", ehole()));
  EXPECT_EQ((binders_on_path(*place_cursor(e, {1, 2, 1}))),
            (std::vector<VarName>{"f", "a", "g"}));
  EXPECT_EQ((binders_on_path(*place_cursor(e, {1, 3}))), (std::vector<VarName>{"f", "b"}));
  EXPECT_EQ((binders_on_path(*place_cursor(e, {1, 1}))), (std::vector<VarName>{"f"}));
}
