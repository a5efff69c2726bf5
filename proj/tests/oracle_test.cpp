#include <algorithm>

#include <gtest/gtest.h>

#include "hazel/rule_oracle.hpp"
#include "hazel/text.hpp"

using namespace hazel;
using namespace hazel::actions;
using oracle::Discipline;

namespace {

ZExp z(std::string_view s) { return *parse_zexp(s); }
HTyp t(std::string_view s) { return *parse_htyp(s); }

template <class T>
bool has_rule(const std::vector<oracle::Derived<T>>& ds, const std::string& rule) {
  return std::any_of(ds.begin(), ds.end(), [&](const auto& d) { return d.rule == rule; });
}

}  // namespace

TEST(RuleOracle, LambdaAgainstArrowDivergesOnlyWithoutMinimality) {
  const auto a = construct(shape::Lam{"x"});
  const auto all = oracle::ana_results({}, z(">|{}|<"), t("num -> num"), a, Discipline::Unrestricted);
  EXPECT_TRUE(has_rule(all, "ana-construct-lam-1"));
  EXPECT_TRUE(has_rule(all, "ana-subsume"));
  EXPECT_EQ(oracle::distinct(all).size(), 2u);

  const auto minimal =
      oracle::ana_results({}, z(">|{}|<"), t("num -> num"), a, Discipline::SubsumptionMinimal);
  ASSERT_EQ(oracle::distinct(minimal).size(), 1u);
  EXPECT_EQ(oracle::distinct(minimal).front(), z("\\x.>|{}|<"));
}

TEST(RuleOracle, AscriptionAgainstTypeDivergesOnlyWithoutMinimality) {
  const auto a = construct(shape::Asc{});
  const auto all = oracle::ana_results({}, z(">|1|<"), t("{}"), a, Discipline::Unrestricted);
  const auto values = oracle::distinct(all);
  EXPECT_EQ(values.size(), 2u);

  const auto minimal =
      oracle::distinct(oracle::ana_results({}, z(">|1|<"), t("{}"), a, Discipline::SubsumptionMinimal));
  ASSERT_EQ(minimal.size(), 1u);
  EXPECT_EQ(minimal.front(), z("1 : >|{}|<"));
}

TEST(RuleOracle, SubsumptionStillAppliesWhenNothingElseDoes) {
  const auto r = oracle::ana_results({}, z(">|{}|<"), t("num"), construct(shape::Plus{}),
                                     Discipline::SubsumptionMinimal);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.front().rule, "ana-subsume");
  EXPECT_EQ(r.front().value, z("{} + >|{}|<"));
}

TEST(RuleOracle, ZipperRulesNameTheirPosition) {
  const auto r = oracle::syn_results({}, z("1 + >|{}|<"), t("num"), construct(shape::Lit{2}),
                                     Discipline::SubsumptionMinimal);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.front().rule, "syn-zip-plus-2");
  EXPECT_EQ(r.front().value.z, z("1 + >|2|<"));
}

TEST(RuleOracle, PlusWrapsInconsistentOperand) {
  Ctx ctx{{"f", t("num -> num")}};
  const auto r = oracle::syn_results(ctx, z(">|f|<"), t("num -> num"), construct(shape::Plus{}),
                                     Discipline::SubsumptionMinimal);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.front().rule, "syn-construct-plus-2");
  EXPECT_EQ(r.front().value.z, z("{f} + >|{}|<"));
  EXPECT_EQ(r.front().value.t, t("num"));
}

TEST(RuleOracle, NoRuleForMovingAboveTheRoot) {
  EXPECT_TRUE(oracle::syn_results({}, z(">|1|<"), t("num"), move_parent(),
                                  Discipline::SubsumptionMinimal)
                  .empty());
  EXPECT_TRUE(oracle::move_results(z(">|1|<"), move_child(1)).empty());
}

TEST(RuleOracle, TypeActions) {
  const auto r = oracle::type_results(ZTyp{zt::Cursor{t("num")}}, construct(shape::Arrow{}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.front().rule, "type-construct-arrow");
  EXPECT_EQ(erase(r.front().value), t("num -> {}"));
  EXPECT_EQ(cursor_path(r.front().value), (CursorPath{2}));
}

// Both worked sessions, one step at a time: the oracle derives exactly the
// engine's result at every step.
TEST(RuleOracle, AgreesWithEngineAlongWorkedSessions) {
  struct Session {
    Ctx ctx;
    std::string script;
  };
  const std::vector<Session> sessions = {
      {{},
       "construct lam x\nconstruct num\nmove parent\nmove child 2\nconstruct num\n"
       "move parent\nmove parent\nmove child 1\nmove child 1\nconstruct var x\n"
       "construct plus\nconstruct lit 1\n"},
      {{{"incr", t("num -> num")}},
       "construct var incr\nconstruct ap\nconstruct var incr\nconstruct ap\n"
       "construct lit 3\nmove parent\nmove parent\nfinish\n"},
  };
  for (const auto& s : sessions) {
    Synthesized cur{root_cursor(mk::ehole()), mk::thole()};
    const ActionList script = *parse_script(s.script);
    for (const auto& a : script) {
      auto derived = oracle::distinct(
          oracle::syn_results(s.ctx, cur.z, cur.t, a, Discipline::SubsumptionMinimal));
      auto got = perform_syn(s.ctx, cur.z, cur.t, a);
      ASSERT_TRUE(got.ok()) << print(a);
      ASSERT_EQ(derived.size(), 1u) << print(a) << " at " << print(cur.z);
      EXPECT_EQ(derived.front(), *got) << print(a) << " at " << print(cur.z);
      cur = *got;
    }
  }
}
