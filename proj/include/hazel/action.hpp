#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hazel/result.hpp"
#include "hazel/statics.hpp"
#include "hazel/syntax.hpp"
#include "hazel/zipper.hpp"

namespace hazel {

// ---------------------------------------------------------------------------
// Action language

namespace dir {
struct Child {
  int n;
  bool operator==(const Child&) const = default;
};
struct Parent {
  bool operator==(const Parent&) const = default;
};
}  // namespace dir
using Direction = std::variant<dir::Child, dir::Parent>;

namespace shape {
struct Arrow {
  bool operator==(const Arrow&) const = default;
};
struct Num {
  bool operator==(const Num&) const = default;
};
struct Sum {
  bool operator==(const Sum&) const = default;
};
struct Asc {
  bool operator==(const Asc&) const = default;
};
struct Var {
  VarName x;
  bool operator==(const Var&) const = default;
};
struct Lam {
  VarName x;
  bool operator==(const Lam&) const = default;
};
struct Ap {
  bool operator==(const Ap&) const = default;
};
struct Lit {
  std::uint64_t n;
  bool operator==(const Lit&) const = default;
};
struct Plus {
  bool operator==(const Plus&) const = default;
};
struct Inj {
  InjSide side;
  bool operator==(const Inj&) const = default;
};
struct Case {
  VarName x, y;
  bool operator==(const Case&) const = default;
};
struct NEHole {
  bool operator==(const NEHole&) const = default;
};
}  // namespace shape
using Shape = std::variant<shape::Arrow, shape::Num, shape::Sum, shape::Asc, shape::Var,
                           shape::Lam, shape::Ap, shape::Lit, shape::Plus, shape::Inj,
                           shape::Case, shape::NEHole>;

namespace act {
struct Move {
  Direction d;
  bool operator==(const Move&) const = default;
};
struct Construct {
  Shape s;
  bool operator==(const Construct&) const = default;
};
struct Del {
  bool operator==(const Del&) const = default;
};
struct Finish {
  bool operator==(const Finish&) const = default;
};
}  // namespace act
using Action = std::variant<act::Move, act::Construct, act::Del, act::Finish>;
using ActionList = std::vector<Action>;

namespace actions {
Action move_child(int n);
Action move_parent();
Action construct(Shape s);
Action del();
Action finish();
}  // namespace actions

bool is_move(const Action& a);

// ---------------------------------------------------------------------------
// Outcomes

struct ActionError {
  enum class Kind {
    NoRuleApplies,
    UnboundVariable,
    InvalidChild,
    AtRoot,
    TypeInconsistentFinish,
    CursorInType,
  };
  Kind kind;
  Action action;
  std::optional<VarName> var;  // UnboundVariable
  int child = 0;               // InvalidChild

  std::string message() const;
  bool operator==(const ActionError&) const = default;
};

const char* kind_name(ActionError::Kind kind);

struct Synthesized {
  ZExp z;
  HTyp t;
  bool operator==(const Synthesized&) const = default;
};

struct IterFailure {
  ActionError error;
  std::size_t index;
};

// ---------------------------------------------------------------------------
// Engine

/// Deliberate rule defects, used to show that the metatheory fuzzers can
/// tell a broken engine from a correct one.
enum class Mutation {
  None,
  PlusSkipsConsistency,   // construct plus never wraps an inconsistent operand
  SubsumeFirst,           // analytic subsumption tried before specific rules
  ApParentSwapsOperands,  // moving up from an argument swaps function and argument
  CaseChild3SelectsLeft,  // move child 3 on case lands in the left branch
  NeHoleShapeDisabled,    // construct nehole is rejected
};

const char* mutation_name(Mutation m);
std::vector<Mutation> all_mutations();

/// The action semantics, restricted to subsumption-minimal derivations:
/// analytic subsumption is attempted only when no specific analytic rule
/// applies.
class Engine {
 public:
  explicit Engine(Mutation mutation = Mutation::None) : mutation_(mutation) {}

  Mutation mutation() const { return mutation_; }

  Result<ZTyp> perform_typ(const ZTyp& z, const Action& a) const;

  /// Movement axioms that fire at the cursor or at its immediate parent.
  /// Deeper movement goes through the zipper rules of perform_syn/ana.
  Result<ZExp> perform_move(const ZExp& z, const Direction& d) const;

  /// Requires synthesize(ctx, erase(z)) == t (asserted in debug builds).
  Result<Synthesized> perform_syn(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                  const Action& a) const;

  /// Requires analyze(ctx, erase(z), t) (asserted in debug builds).
  Result<ZExp> perform_ana(const Ctx& ctx, const ZExp& z, const HTyp& t,
                           const Action& a) const;

  Result<ZTyp, IterFailure> perform_typ_iter(const ZTyp& z, const ActionList& as) const;
  Result<Synthesized, IterFailure> perform_syn_iter(const Ctx& ctx, const ZExp& z,
                                                    const HTyp& t,
                                                    const ActionList& as) const;
  Result<ZExp, IterFailure> perform_ana_iter(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                             const ActionList& as) const;

 private:
  Result<Synthesized> syn(const Ctx& ctx, const ZExp& z, const HTyp& t,
                          const Action& a) const;
  Result<ZExp> ana(const Ctx& ctx, const ZExp& z, const HTyp& t, const Action& a) const;
  Result<ZExp> ana_specific(const Ctx& ctx, const ZExp& z, const HTyp& t,
                            const Action& a, bool& handled) const;
  Result<ZExp> subsume(const Ctx& ctx, const ZExp& z, const HTyp& t, const Action& a) const;
  Result<ZExp> move(const ZExp& z, const Direction& d, const Action& a) const;

  Mutation mutation_;
};

Result<ZTyp> perform_typ(const ZTyp& z, const Action& a);
Result<ZExp> perform_move(const ZExp& z, const Direction& d);
Result<Synthesized> perform_syn(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                const Action& a);
Result<ZExp> perform_ana(const Ctx& ctx, const ZExp& z, const HTyp& t, const Action& a);
Result<Synthesized, IterFailure> perform_syn_iter(const Ctx& ctx, const ZExp& z,
                                                  const HTyp& t, const ActionList& as);
Result<ZExp, IterFailure> perform_ana_iter(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                           const ActionList& as);

/// True when the movement axioms (rather than zipper rules) own a move
/// of `z` in direction `d`.
bool is_local_move(const ZExp& z, const Direction& d);

// ---------------------------------------------------------------------------
// Action palette

/// For each candidate, whether perform_syn accepts it at (ctx, z, t).
std::vector<std::pair<Action, bool>> enabled_actions(const Ctx& ctx, const ZExp& z,
                                                     const HTyp& t,
                                                     const std::vector<Action>& candidates,
                                                     const Engine& engine = Engine{});

/// Every move, del, finish, and construct over the shape universe. Variable
/// candidates are the context domain plus binders enclosing the cursor.
/// Shapes with unbounded arguments use one representative (lit 0, lam x,
/// case x y); legality does not depend on the argument.
std::vector<Action> standard_candidates(const Ctx& ctx, const ZExp& z);

}  // namespace hazel
