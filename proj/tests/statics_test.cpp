#include <gtest/gtest.h>

#include <functional>

#include "hazel/statics.hpp"

using namespace hazel;
using namespace hazel::mk;

namespace {

HTyp nn() { return arrow(num(), num()); }

std::vector<HTyp> types_to_depth(int depth) {
  if (depth <= 1) return {num(), thole()};
  auto smaller = types_to_depth(depth - 1);
  std::vector<HTyp> out = {num(), thole()};
  for (const auto& a : smaller) {
    for (const auto& b : smaller) {
      out.push_back(arrow(a, b));
      out.push_back(sum(a, b));
    }
  }
  return out;
}

}  // namespace

TEST(Consistency, HoleIsConsistentWithArrow) { EXPECT_TRUE(consistent(thole(), nn())); }
TEST(Consistency, NumWithNum) { EXPECT_TRUE(consistent(num(), num())); }
TEST(Consistency, ArrowNotConsistentWithNum) { EXPECT_FALSE(consistent(nn(), num())); }

TEST(Consistency, NotTransitive) {
  EXPECT_TRUE(consistent(num(), thole()));
  EXPECT_TRUE(consistent(thole(), nn()));
  EXPECT_FALSE(consistent(num(), nn()));
}

TEST(Consistency, CoincidesWithEqualityOnCompleteTypes) {
  auto ts = types_to_depth(3);
  for (const auto& a : ts) {
    for (const auto& b : ts) {
      if (is_complete(a) && is_complete(b)) EXPECT_EQ(consistent(a, b), a == b);
    }
  }
}

TEST(Inconsistency, NumAgainstArrow) { EXPECT_TRUE(inconsistent(num(), nn())); }

TEST(Inconsistency, HoleNeverInconsistent) {
  for (const auto& t : types_to_depth(3)) {
    EXPECT_FALSE(inconsistent(thole(), t));
    EXPECT_FALSE(inconsistent(t, thole()));
  }
}

TEST(Inconsistency, HoleComponentBlocksPropagation) {
  EXPECT_FALSE(inconsistent(arrow(num(), thole()), nn()));
}

TEST(Inconsistency, SumHeadClashes) {
  EXPECT_TRUE(inconsistent(sum(num(), num()), num()));
  EXPECT_TRUE(inconsistent(sum(num(), num()), nn()));
  EXPECT_TRUE(inconsistent(sum(num(), nn()), sum(num(), num())));
}

TEST(Matched, Arrow) {
  EXPECT_EQ(matched_arrow(thole()), std::pair(thole(), thole()));
  EXPECT_EQ(matched_arrow(nn()), std::pair(num(), num()));
  EXPECT_FALSE(matched_arrow(num()));
  EXPECT_FALSE(matched_arrow(sum(num(), num())));
}

TEST(Matched, Sum) {
  EXPECT_EQ(matched_sum(thole()), std::pair(thole(), thole()));
  EXPECT_EQ(matched_sum(sum(num(), thole())), std::pair(num(), thole()));
  EXPECT_FALSE(matched_sum(nn()));
}

TEST(Synthesis, EmptyHoleSynthesizesHole) { EXPECT_EQ(synthesize({}, ehole()), thole()); }

TEST(Synthesis, BoundVariable) { EXPECT_EQ(synthesize({{"x", num()}}, var("x")), num()); }

TEST(Synthesis, UnboundVariable) { EXPECT_FALSE(synthesize({}, var("x"))); }

TEST(Synthesis, AscribedLambda) {
  EXPECT_EQ(synthesize({}, asc(lam("x", ehole()), nn())), nn());
}

TEST(Synthesis, BareLambdaDoesNotSynthesize) {
  EXPECT_FALSE(synthesize({}, lam("x", var("x"))));
  EXPECT_FALSE(synthesize({}, inl(lit(1))));
  EXPECT_FALSE(synthesize({}, case_of(ehole(), "a", ehole(), "b", ehole())));
}

TEST(Synthesis, ApplicationThroughHoleType) {
  Ctx ctx{{"f", thole()}};
  EXPECT_EQ(synthesize(ctx, ap(var("f"), lit(3))), thole());
}

TEST(Synthesis, NonEmptyHoleOfEmptyHoleIsAccepted) {
  EXPECT_EQ(synthesize({}, nehole(ehole())), thole());
}

TEST(Synthesis, NonEmptyHoleNeedsSynthesizingContents) {
  EXPECT_FALSE(synthesize({}, nehole(lam("x", ehole()))));
}

TEST(Analysis, NonEmptyHoleAroundFunction) {
  EXPECT_TRUE(analyze({{"incr", nn()}}, nehole(var("incr")), num()));
}

TEST(Analysis, IdentityAgainstNumToNum) {
  EXPECT_TRUE(analyze({}, lam("x", var("x")), nn()));
}

TEST(Analysis, LiteralAgainstArrowFails) { EXPECT_FALSE(analyze({}, lit(3), nn())); }

TEST(Analysis, Injections) {
  EXPECT_TRUE(analyze({}, inl(lit(1)), sum(num(), nn())));
  EXPECT_FALSE(analyze({}, inr(lit(1)), sum(num(), nn())));
  EXPECT_TRUE(analyze({}, inr(lit(1)), thole()));
  EXPECT_FALSE(analyze({}, inl(lit(1)), num()));
}

TEST(Analysis, CaseBranchesSeeComponentTypes) {
  Ctx ctx{{"s", sum(num(), nn())}};
  auto e = case_of(var("s"), "a", var("a"), "b", ap(var("b"), lit(1)));
  EXPECT_TRUE(analyze(ctx, e, num()));
  EXPECT_FALSE(analyze(ctx, case_of(var("s"), "a", var("a"), "b", var("b")), num()));
  EXPECT_FALSE(analyze({{"s", num()}}, case_of(var("s"), "a", ehole(), "b", ehole()), num()));
}

TEST(Analysis, ContextExtensionReplacesBinding) {
  Ctx ctx{{"x", num()}};
  EXPECT_TRUE(analyze(ctx, lam("x", var("x")), arrow(nn(), nn())));
}

TEST(Analysis, SubsumptionAdmissible) {
  Ctx ctx{{"f", nn()}, {"h", thole()}};
  std::vector<HExp> es = {lit(1), var("f"), var("h"), ehole(), nehole(var("f")),
                          ap(var("f"), lit(2)), asc(inl(lit(1)), sum(num(), thole()))};
  for (const auto& e : es) {
    auto t = synthesize(ctx, e);
    ASSERT_TRUE(t);
    for (const auto& u : types_to_depth(3)) {
      if (consistent(u, *t)) EXPECT_TRUE(analyze(ctx, e, u));
    }
  }
}

TEST(Completeness, Types) {
  EXPECT_TRUE(is_complete(nn()));
  EXPECT_FALSE(is_complete(arrow(num(), thole())));
}

TEST(Completeness, Expressions) {
  EXPECT_FALSE(is_complete(nehole(lit(3))));
  EXPECT_TRUE(is_complete(asc(lam("x", plus(var("x"), lit(1))), nn())));
  EXPECT_FALSE(is_complete(asc(lam("x", var("x")), arrow(thole(), num()))));
}
