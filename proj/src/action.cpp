#include "hazel/action.hpp"

#include <algorithm>
#include <cassert>

namespace hazel {

namespace actions {
Action move_child(int n) { return act::Move{dir::Child{n}}; }
Action move_parent() { return act::Move{dir::Parent{}}; }
Action construct(Shape s) { return act::Construct{std::move(s)}; }
Action del() { return act::Del{}; }
Action finish() { return act::Finish{}; }
}  // namespace actions

bool is_move(const Action& a) { return std::holds_alternative<act::Move>(a); }

const char* kind_name(ActionError::Kind kind) {
  switch (kind) {
    case ActionError::Kind::NoRuleApplies: return "no_rule_applies";
    case ActionError::Kind::UnboundVariable: return "unbound_variable";
    case ActionError::Kind::InvalidChild: return "invalid_child";
    case ActionError::Kind::AtRoot: return "at_root";
    case ActionError::Kind::TypeInconsistentFinish: return "type_inconsistent_finish";
    case ActionError::Kind::CursorInType: return "cursor_in_type";
  }
  return "unknown";
}

std::string ActionError::message() const {
  switch (kind) {
    case Kind::NoRuleApplies: return "no action rule applies";
    case Kind::UnboundVariable: return "unbound variable '" + (var ? var->str() : "") + "'";
    case Kind::InvalidChild: return "no child " + std::to_string(child) + " at the cursor";
    case Kind::AtRoot: return "cursor is already at the root";
    case Kind::TypeInconsistentFinish:
      return "hole contents are inconsistent with the expected type";
    case Kind::CursorInType: return "action needs an expression cursor, cursor is in a type";
  }
  return "unknown error";
}

const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::PlusSkipsConsistency: return "plus-skips-consistency";
    case Mutation::SubsumeFirst: return "subsume-first";
    case Mutation::ApParentSwapsOperands: return "ap-parent-swaps-operands";
    case Mutation::CaseChild3SelectsLeft: return "case-child3-selects-left";
    case Mutation::NeHoleShapeDisabled: return "nehole-shape-disabled";
  }
  return "unknown";
}

std::vector<Mutation> all_mutations() {
  return {Mutation::PlusSkipsConsistency, Mutation::SubsumeFirst,
          Mutation::ApParentSwapsOperands, Mutation::CaseChild3SelectsLeft,
          Mutation::NeHoleShapeDisabled};
}

namespace {

using Kind = ActionError::Kind;

ActionError fail(Kind kind, const Action& a) { return ActionError{kind, a, std::nullopt, 0}; }

const Shape* shape_of(const Action& a) {
  if (const auto* c = std::get_if<act::Construct>(&a)) return &c->s;
  return nullptr;
}

bool is_type_shape(const Shape& s) {
  return std::holds_alternative<shape::Arrow>(s) || std::holds_alternative<shape::Num>(s) ||
         std::holds_alternative<shape::Sum>(s);
}

HTyp hole_arrow() { return mk::arrow(mk::thole(), mk::thole()); }
HTyp hole_sum() { return mk::sum(mk::thole(), mk::thole()); }

// λx.⦇⦈ : ▹⦇⦈◃ → ⦇⦈
ZExp ascribed_lambda(const VarName& x) {
  return ze::AscR{mk::lam(x, mk::ehole()), ZTyp{zt::ArrowL{ZTyp{zt::Cursor{mk::thole()}}, mk::thole()}}};
}

// inj_i(⦇⦈) : ▹⦇⦈◃ + ⦇⦈
ZExp ascribed_injection(InjSide side) {
  return ze::AscR{mk::inj(side, mk::ehole()),
                  ZTyp{zt::SumL{ZTyp{zt::Cursor{mk::thole()}}, mk::thole()}}};
}

ZExp cursor(const HExp& e) { return ze::Cursor{e}; }
ZExp hole_cursor() { return cursor(mk::ehole()); }

}  // namespace

bool is_local_move(const ZExp& z, const Direction& d) {
  if (z.is<ze::Cursor>()) return true;
  if (!std::holds_alternative<dir::Parent>(d)) return false;
  return std::visit(overloaded{
                        [](const ze::Cursor&) { return true; },
                        [](const ze::AscR& n) { return n.z.is<zt::Cursor>(); },
                        [](const auto& n) { return n.z.template is<ze::Cursor>(); },
                    },
                    z.get());
}

// ---------------------------------------------------------------------------
// Type actions

Result<ZTyp> Engine::perform_typ(const ZTyp& z, const Action& a) const {
  if (const auto* c = z.as<zt::Cursor>()) {
    const HTyp& t = c->t;
    if (const auto* m = std::get_if<act::Move>(&a)) {
      if (std::holds_alternative<dir::Parent>(m->d)) return fail(Kind::AtRoot, a);
      const int n = std::get<dir::Child>(m->d).n;
      if (const auto* arr = t.as<ty::Arrow>()) {
        if (n == 1) return ZTyp{zt::ArrowL{ZTyp{zt::Cursor{arr->dom}}, arr->cod}};
        if (n == 2) return ZTyp{zt::ArrowR{arr->dom, ZTyp{zt::Cursor{arr->cod}}}};
      }
      if (const auto* s = t.as<ty::Sum>()) {
        if (n == 1) return ZTyp{zt::SumL{ZTyp{zt::Cursor{s->left}}, s->right}};
        if (n == 2) return ZTyp{zt::SumR{s->left, ZTyp{zt::Cursor{s->right}}}};
      }
      ActionError err = fail(Kind::InvalidChild, a);
      err.child = n;
      return err;
    }
    if (std::holds_alternative<act::Del>(a)) return ZTyp{zt::Cursor{mk::thole()}};
    if (const Shape* s = shape_of(a)) {
      if (std::holds_alternative<shape::Arrow>(*s)) {
        return ZTyp{zt::ArrowR{t, ZTyp{zt::Cursor{mk::thole()}}}};
      }
      if (std::holds_alternative<shape::Sum>(*s)) {
        return ZTyp{zt::SumR{t, ZTyp{zt::Cursor{mk::thole()}}}};
      }
      if (std::holds_alternative<shape::Num>(*s)) {
        if (t.is<ty::Hole>()) return ZTyp{zt::Cursor{mk::num()}};
        return fail(Kind::NoRuleApplies, a);
      }
    }
    return fail(Kind::CursorInType, a);
  }

  // Parent moves out of an immediate child.
  if (const auto* m = std::get_if<act::Move>(&a); m && std::holds_alternative<dir::Parent>(m->d)) {
    const bool child_is_cursor =
        std::visit(overloaded{
                       [](const zt::Cursor&) { return false; },
                       [](const auto& n) { return n.z.template is<zt::Cursor>(); },
                   },
                   z.get());
    if (child_is_cursor) return ZTyp{zt::Cursor{erase(z)}};
  }

  return std::visit(
      overloaded{
          [](const zt::Cursor&) -> Result<ZTyp> { std::abort(); },
          [&](const zt::ArrowL& n) -> Result<ZTyp> {
            auto r = perform_typ(n.z, a);
            if (!r) return r.error();
            return ZTyp{zt::ArrowL{*r, n.cod}};
          },
          [&](const zt::ArrowR& n) -> Result<ZTyp> {
            auto r = perform_typ(n.z, a);
            if (!r) return r.error();
            return ZTyp{zt::ArrowR{n.dom, *r}};
          },
          [&](const zt::SumL& n) -> Result<ZTyp> {
            auto r = perform_typ(n.z, a);
            if (!r) return r.error();
            return ZTyp{zt::SumL{*r, n.right}};
          },
          [&](const zt::SumR& n) -> Result<ZTyp> {
            auto r = perform_typ(n.z, a);
            if (!r) return r.error();
            return ZTyp{zt::SumR{n.left, *r}};
          },
      },
      z.get());
}

// ---------------------------------------------------------------------------
// Expression movement

Result<ZExp> Engine::perform_move(const ZExp& z, const Direction& d) const {
  return move(z, d, act::Move{d});
}

Result<ZExp> Engine::move(const ZExp& z, const Direction& d, const Action& a) const {
  if (const auto* c = z.as<ze::Cursor>()) {
    if (std::holds_alternative<dir::Parent>(d)) return fail(Kind::AtRoot, a);
    const int n = std::get<dir::Child>(d).n;
    std::optional<ZExp> out = std::visit(
        overloaded{
            [&](const ex::Asc& e) -> std::optional<ZExp> {
              if (n == 1) return ZExp{ze::AscL{cursor(e.e), e.t}};
              if (n == 2) return ZExp{ze::AscR{e.e, ZTyp{zt::Cursor{e.t}}}};
              return std::nullopt;
            },
            [&](const ex::Lam& e) -> std::optional<ZExp> {
              if (n == 1) return ZExp{ze::LamZ{e.x, cursor(e.body)}};
              return std::nullopt;
            },
            [&](const ex::Plus& e) -> std::optional<ZExp> {
              if (n == 1) return ZExp{ze::PlusL{cursor(e.l), e.r}};
              if (n == 2) return ZExp{ze::PlusR{e.l, cursor(e.r)}};
              return std::nullopt;
            },
            [&](const ex::Ap& e) -> std::optional<ZExp> {
              if (n == 1) return ZExp{ze::ApL{cursor(e.fun), e.arg}};
              if (n == 2) return ZExp{ze::ApR{e.fun, cursor(e.arg)}};
              return std::nullopt;
            },
            [&](const ex::NonEmptyHole& e) -> std::optional<ZExp> {
              if (n == 1) return ZExp{ze::NonEmptyHoleZ{cursor(e.e)}};
              return std::nullopt;
            },
            [&](const ex::Inj& e) -> std::optional<ZExp> {
              if (n == 1) return ZExp{ze::InjZ{e.side, cursor(e.e)}};
              return std::nullopt;
            },
            [&](const ex::Case& e) -> std::optional<ZExp> {
              if (n == 1) return ZExp{ze::CaseScrut{cursor(e.scrut), e.x, e.l, e.y, e.r}};
              if (n == 2) return ZExp{ze::CaseL{e.scrut, e.x, cursor(e.l), e.y, e.r}};
              if (n == 3) {
                if (mutation_ == Mutation::CaseChild3SelectsLeft) {
                  return ZExp{ze::CaseL{e.scrut, e.x, cursor(e.l), e.y, e.r}};
                }
                return ZExp{ze::CaseR{e.scrut, e.x, e.l, e.y, cursor(e.r)}};
              }
              return std::nullopt;
            },
            [](const auto&) -> std::optional<ZExp> { return std::nullopt; },
        },
        c->e.get());
    if (out) return *out;
    ActionError err = fail(Kind::InvalidChild, a);
    err.child = n;
    return err;
  }

  if (!is_local_move(z, d)) return fail(Kind::NoRuleApplies, a);

  if (mutation_ == Mutation::ApParentSwapsOperands) {
    if (const auto* r = z.as<ze::ApR>()) {
      return cursor(mk::ap(erase(r->z), r->fun));
    }
  }
  return cursor(erase(z));
}

// ---------------------------------------------------------------------------
// Synthetic actions

Result<Synthesized> Engine::perform_syn(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                        const Action& a) const {
#ifndef NDEBUG
  if (mutation_ == Mutation::None) {
    auto actual = synthesize(ctx, erase(z));
    assert(actual && *actual == t && "perform_syn: erasure must synthesize the given type");
  }
#endif
  return syn(ctx, z, t, a);
}

Result<Synthesized> Engine::syn(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                const Action& a) const {
  // Moves at or just above the cursor.
  if (const auto* m = std::get_if<act::Move>(&a); m && is_local_move(z, m->d)) {
    auto r = move(z, m->d, a);
    if (!r) return r.error();
    return Synthesized{*r, t};
  }

  if (const auto* c = z.as<ze::Cursor>()) {
    const HExp& e = c->e;
    const bool on_hole = e.is<ex::EmptyHole>();

    if (std::holds_alternative<act::Del>(a)) {
      return Synthesized{hole_cursor(), mk::thole()};
    }
    if (std::holds_alternative<act::Finish>(a)) {
      if (const auto* h = e.as<ex::NonEmptyHole>()) {
        if (auto inner = synthesize(ctx, h->e)) return Synthesized{cursor(h->e), *inner};
      }
      return fail(Kind::NoRuleApplies, a);
    }
    const Shape& s = *shape_of(a);
    if (is_type_shape(s)) return fail(Kind::NoRuleApplies, a);

    return std::visit(
        overloaded{
            [&](const shape::Asc&) -> Result<Synthesized> {
              return Synthesized{ZExp{ze::AscR{e, ZTyp{zt::Cursor{t}}}}, t};
            },
            [&](const shape::Var& v) -> Result<Synthesized> {
              if (!on_hole) return fail(Kind::NoRuleApplies, a);
              auto xt = ctx.lookup(v.x);
              if (!xt) {
                ActionError err = fail(Kind::UnboundVariable, a);
                err.var = v.x;
                return err;
              }
              return Synthesized{cursor(mk::var(v.x)), *xt};
            },
            [&](const shape::Lam& l) -> Result<Synthesized> {
              if (!on_hole) return fail(Kind::NoRuleApplies, a);
              return Synthesized{ascribed_lambda(l.x), hole_arrow()};
            },
            [&](const shape::Ap&) -> Result<Synthesized> {
              if (auto arr = matched_arrow(t)) {
                return Synthesized{ZExp{ze::ApR{e, hole_cursor()}}, arr->second};
              }
              if (inconsistent(t, hole_arrow())) {
                return Synthesized{ZExp{ze::ApR{mk::nehole(e), hole_cursor()}}, mk::thole()};
              }
              return fail(Kind::NoRuleApplies, a);
            },
            [&](const shape::Lit& lit) -> Result<Synthesized> {
              if (!on_hole) return fail(Kind::NoRuleApplies, a);
              return Synthesized{cursor(mk::lit(lit.n)), mk::num()};
            },
            [&](const shape::Plus&) -> Result<Synthesized> {
              if (consistent(t, mk::num()) || mutation_ == Mutation::PlusSkipsConsistency) {
                return Synthesized{ZExp{ze::PlusR{e, hole_cursor()}}, mk::num()};
              }
              if (inconsistent(t, mk::num())) {
                return Synthesized{ZExp{ze::PlusR{mk::nehole(e), hole_cursor()}}, mk::num()};
              }
              return fail(Kind::NoRuleApplies, a);
            },
            [&](const shape::NEHole&) -> Result<Synthesized> {
              if (mutation_ == Mutation::NeHoleShapeDisabled) return fail(Kind::NoRuleApplies, a);
              return Synthesized{ZExp{ze::NonEmptyHoleZ{cursor(e)}}, mk::thole()};
            },
            [&](const shape::Inj& inj) -> Result<Synthesized> {
              if (!on_hole) return fail(Kind::NoRuleApplies, a);
              return Synthesized{ascribed_injection(inj.side), hole_sum()};
            },
            [&](const shape::Case& cs) -> Result<Synthesized> {
              if (matched_sum(t)) {
                ZExp body = ze::CaseL{e, cs.x, hole_cursor(), cs.y, mk::ehole()};
                return Synthesized{ZExp{ze::AscL{body, mk::thole()}}, mk::thole()};
              }
              if (inconsistent(t, hole_sum())) {
                ZExp body = ze::CaseScrut{ZExp{ze::NonEmptyHoleZ{cursor(e)}}, cs.x, mk::ehole(),
                                          cs.y, mk::ehole()};
                return Synthesized{ZExp{ze::AscL{body, mk::thole()}}, mk::thole()};
              }
              return fail(Kind::NoRuleApplies, a);
            },
            [&](const auto&) -> Result<Synthesized> { return fail(Kind::NoRuleApplies, a); },
        },
        s);
  }

  // Zipper cases.
  return std::visit(
      overloaded{
          [&](const ze::AscL& n) -> Result<Synthesized> {
            auto r = ana(ctx, n.z, n.t, a);
            if (!r) return r.error();
            return Synthesized{ZExp{ze::AscL{*r, n.t}}, n.t};
          },
          [&](const ze::AscR& n) -> Result<Synthesized> {
            auto r = perform_typ(n.z, a);
            if (!r) return r.error();
            HTyp new_t = erase(*r);
            if (!analyze(ctx, n.e, new_t)) return fail(Kind::NoRuleApplies, a);
            return Synthesized{ZExp{ze::AscR{n.e, *r}}, new_t};
          },
          [&](const ze::ApL& n) -> Result<Synthesized> {
            auto fun_t = synthesize(ctx, erase(n.z));
            if (!fun_t) return fail(Kind::NoRuleApplies, a);
            auto r = syn(ctx, n.z, *fun_t, a);
            if (!r) return r.error();
            auto arr = matched_arrow(r->t);
            if (!arr || !analyze(ctx, n.arg, arr->first)) return fail(Kind::NoRuleApplies, a);
            return Synthesized{ZExp{ze::ApL{r->z, n.arg}}, arr->second};
          },
          [&](const ze::ApR& n) -> Result<Synthesized> {
            auto fun_t = synthesize(ctx, n.fun);
            if (!fun_t) return fail(Kind::NoRuleApplies, a);
            auto arr = matched_arrow(*fun_t);
            if (!arr) return fail(Kind::NoRuleApplies, a);
            auto r = ana(ctx, n.z, arr->first, a);
            if (!r) return r.error();
            return Synthesized{ZExp{ze::ApR{n.fun, *r}}, arr->second};
          },
          [&](const ze::PlusL& n) -> Result<Synthesized> {
            auto r = ana(ctx, n.z, mk::num(), a);
            if (!r) return r.error();
            return Synthesized{ZExp{ze::PlusL{*r, n.r}}, mk::num()};
          },
          [&](const ze::PlusR& n) -> Result<Synthesized> {
            auto r = ana(ctx, n.z, mk::num(), a);
            if (!r) return r.error();
            return Synthesized{ZExp{ze::PlusR{n.l, *r}}, mk::num()};
          },
          [&](const ze::NonEmptyHoleZ& n) -> Result<Synthesized> {
            auto inner_t = synthesize(ctx, erase(n.z));
            if (!inner_t) return fail(Kind::NoRuleApplies, a);
            auto r = syn(ctx, n.z, *inner_t, a);
            if (!r) return r.error();
            return Synthesized{ZExp{ze::NonEmptyHoleZ{r->z}}, mk::thole()};
          },
          // Lambdas, injections and case forms never synthesize.
          [&](const auto&) -> Result<Synthesized> { return fail(Kind::NoRuleApplies, a); },
      },
      z.get());
}

// ---------------------------------------------------------------------------
// Analytic actions

Result<ZExp> Engine::perform_ana(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                 const Action& a) const {
#ifndef NDEBUG
  if (mutation_ == Mutation::None) {
    assert(analyze(ctx, erase(z), t) && "perform_ana: erasure must analyze against the type");
  }
#endif
  return ana(ctx, z, t, a);
}

Result<ZExp> Engine::subsume(const Ctx& ctx, const ZExp& z, const HTyp& t,
                             const Action& a) const {
  auto synth = synthesize(ctx, erase(z));
  if (!synth) return fail(Kind::NoRuleApplies, a);
  auto r = syn(ctx, z, *synth, a);
  if (!r) return r.error();
  if (!consistent(t, r->t)) return fail(Kind::NoRuleApplies, a);
  return r->z;
}

Result<ZExp> Engine::ana(const Ctx& ctx, const ZExp& z, const HTyp& t, const Action& a) const {
  if (mutation_ == Mutation::SubsumeFirst) {
    auto r = subsume(ctx, z, t, a);
    if (r) return r;
  }
  bool handled = false;
  auto r = ana_specific(ctx, z, t, a, handled);
  if (handled) return r;
  return subsume(ctx, z, t, a);
}

Result<ZExp> Engine::ana_specific(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                  const Action& a, bool& handled) const {
  handled = true;

  // Moves at or just above the cursor.
  if (const auto* m = std::get_if<act::Move>(&a); m && is_local_move(z, m->d)) {
    return move(z, m->d, a);
  }

  if (const auto* c = z.as<ze::Cursor>()) {
    const HExp& e = c->e;
    const bool on_hole = e.is<ex::EmptyHole>();

    if (std::holds_alternative<act::Del>(a)) return hole_cursor();
    if (std::holds_alternative<act::Finish>(a)) {
      if (const auto* h = e.as<ex::NonEmptyHole>()) {
        if (analyze(ctx, h->e, t)) return cursor(h->e);
        return fail(Kind::TypeInconsistentFinish, a);
      }
      handled = false;
      return fail(Kind::NoRuleApplies, a);
    }
    const Shape& s = *shape_of(a);
    std::optional<Result<ZExp>> out = std::visit(
        overloaded{
            [&](const shape::Asc&) -> std::optional<Result<ZExp>> {
              return Result<ZExp>{ZExp{ze::AscR{e, ZTyp{zt::Cursor{t}}}}};
            },
            [&](const shape::Var& v) -> std::optional<Result<ZExp>> {
              if (!on_hole) return std::nullopt;
              auto xt = ctx.lookup(v.x);
              if (!xt) {
                ActionError err = fail(Kind::UnboundVariable, a);
                err.var = v.x;
                return Result<ZExp>{err};
              }
              if (inconsistent(t, *xt)) {
                return Result<ZExp>{ZExp{ze::NonEmptyHoleZ{cursor(mk::var(v.x))}}};
              }
              return std::nullopt;
            },
            [&](const shape::Lam& l) -> std::optional<Result<ZExp>> {
              if (!on_hole) return std::nullopt;
              if (matched_arrow(t)) {
                return Result<ZExp>{ZExp{ze::LamZ{l.x, hole_cursor()}}};
              }
              if (inconsistent(t, hole_arrow())) {
                return Result<ZExp>{ZExp{ze::NonEmptyHoleZ{ascribed_lambda(l.x)}}};
              }
              return std::nullopt;
            },
            [&](const shape::Lit& lit) -> std::optional<Result<ZExp>> {
              if (on_hole && inconsistent(t, mk::num())) {
                return Result<ZExp>{ZExp{ze::NonEmptyHoleZ{cursor(mk::lit(lit.n))}}};
              }
              return std::nullopt;
            },
            [&](const shape::Inj& inj) -> std::optional<Result<ZExp>> {
              if (!on_hole) return std::nullopt;
              if (matched_sum(t)) {
                return Result<ZExp>{ZExp{ze::InjZ{inj.side, hole_cursor()}}};
              }
              if (inconsistent(t, hole_sum())) {
                return Result<ZExp>{ZExp{ze::NonEmptyHoleZ{ascribed_injection(inj.side)}}};
              }
              return std::nullopt;
            },
            [&](const shape::Case& cs) -> std::optional<Result<ZExp>> {
              if (!on_hole) return std::nullopt;
              return Result<ZExp>{
                  ZExp{ze::CaseScrut{hole_cursor(), cs.x, mk::ehole(), cs.y, mk::ehole()}}};
            },
            [](const auto&) -> std::optional<Result<ZExp>> { return std::nullopt; },
        },
        s);
    if (out) return *out;
    handled = false;
    return fail(Kind::NoRuleApplies, a);
  }

  // Zipper cases owned by analytic rules.
  return std::visit(
      overloaded{
          [&](const ze::LamZ& n) -> Result<ZExp> {
            auto arr = matched_arrow(t);
            if (!arr) return fail(Kind::NoRuleApplies, a);
            auto r = ana(ctx.extend(n.x, arr->first), n.z, arr->second, a);
            if (!r) return r.error();
            return ZExp{ze::LamZ{n.x, *r}};
          },
          [&](const ze::InjZ& n) -> Result<ZExp> {
            auto s = matched_sum(t);
            if (!s) return fail(Kind::NoRuleApplies, a);
            auto r = ana(ctx, n.z, n.side == InjSide::L ? s->first : s->second, a);
            if (!r) return r.error();
            return ZExp{ze::InjZ{n.side, *r}};
          },
          [&](const ze::CaseScrut& n) -> Result<ZExp> {
            auto scrut_t = synthesize(ctx, erase(n.z));
            if (!scrut_t) return fail(Kind::NoRuleApplies, a);
            auto r = syn(ctx, n.z, *scrut_t, a);
            if (!r) return r.error();
            auto s = matched_sum(r->t);
            if (!s || !analyze(ctx.extend(n.x, s->first), n.l, t) ||
                !analyze(ctx.extend(n.y, s->second), n.r, t)) {
              return fail(Kind::NoRuleApplies, a);
            }
            return ZExp{ze::CaseScrut{r->z, n.x, n.l, n.y, n.r}};
          },
          [&](const ze::CaseL& n) -> Result<ZExp> {
            auto scrut_t = synthesize(ctx, n.scrut);
            auto s = scrut_t ? matched_sum(*scrut_t) : std::nullopt;
            if (!s) return fail(Kind::NoRuleApplies, a);
            auto r = ana(ctx.extend(n.x, s->first), n.z, t, a);
            if (!r) return r.error();
            return ZExp{ze::CaseL{n.scrut, n.x, *r, n.y, n.r}};
          },
          [&](const ze::CaseR& n) -> Result<ZExp> {
            auto scrut_t = synthesize(ctx, n.scrut);
            auto s = scrut_t ? matched_sum(*scrut_t) : std::nullopt;
            if (!s) return fail(Kind::NoRuleApplies, a);
            auto r = ana(ctx.extend(n.y, s->second), n.z, t, a);
            if (!r) return r.error();
            return ZExp{ze::CaseR{n.scrut, n.x, n.l, n.y, *r}};
          },
          [&](const auto&) -> Result<ZExp> {
            handled = false;
            return fail(Kind::NoRuleApplies, a);
          },
      },
      z.get());
}

// ---------------------------------------------------------------------------
// Iterated actions

Result<ZTyp, IterFailure> Engine::perform_typ_iter(const ZTyp& z, const ActionList& as) const {
  ZTyp cur = z;
  for (std::size_t i = 0; i < as.size(); ++i) {
    auto r = perform_typ(cur, as[i]);
    if (!r) return IterFailure{r.error(), i};
    cur = *r;
  }
  return cur;
}

Result<Synthesized, IterFailure> Engine::perform_syn_iter(const Ctx& ctx, const ZExp& z,
                                                          const HTyp& t,
                                                          const ActionList& as) const {
  Synthesized cur{z, t};
  for (std::size_t i = 0; i < as.size(); ++i) {
    auto r = perform_syn(ctx, cur.z, cur.t, as[i]);
    if (!r) return IterFailure{r.error(), i};
    cur = *r;
  }
  return cur;
}

Result<ZExp, IterFailure> Engine::perform_ana_iter(const Ctx& ctx, const ZExp& z,
                                                   const HTyp& t, const ActionList& as) const {
  ZExp cur = z;
  for (std::size_t i = 0; i < as.size(); ++i) {
    auto r = perform_ana(ctx, cur, t, as[i]);
    if (!r) return IterFailure{r.error(), i};
    cur = *r;
  }
  return cur;
}

Result<ZTyp> perform_typ(const ZTyp& z, const Action& a) { return Engine{}.perform_typ(z, a); }
Result<ZExp> perform_move(const ZExp& z, const Direction& d) {
  return Engine{}.perform_move(z, d);
}
Result<Synthesized> perform_syn(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                const Action& a) {
  return Engine{}.perform_syn(ctx, z, t, a);
}
Result<ZExp> perform_ana(const Ctx& ctx, const ZExp& z, const HTyp& t, const Action& a) {
  return Engine{}.perform_ana(ctx, z, t, a);
}
Result<Synthesized, IterFailure> perform_syn_iter(const Ctx& ctx, const ZExp& z,
                                                  const HTyp& t, const ActionList& as) {
  return Engine{}.perform_syn_iter(ctx, z, t, as);
}
Result<ZExp, IterFailure> perform_ana_iter(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                           const ActionList& as) {
  return Engine{}.perform_ana_iter(ctx, z, t, as);
}

// ---------------------------------------------------------------------------
// Palette

std::vector<std::pair<Action, bool>> enabled_actions(const Ctx& ctx, const ZExp& z,
                                                     const HTyp& t,
                                                     const std::vector<Action>& candidates,
                                                     const Engine& engine) {
  std::vector<std::pair<Action, bool>> out;
  out.reserve(candidates.size());
  for (const auto& a : candidates) {
    out.emplace_back(a, engine.perform_syn(ctx, z, t, a).ok());
  }
  return out;
}

std::vector<Action> standard_candidates(const Ctx& ctx, const ZExp& z) {
  using namespace actions;
  std::vector<Action> out = {
      move_child(1),
      move_child(2),
      move_child(3),
      move_parent(),
      del(),
      finish(),
      construct(shape::Arrow{}),
      construct(shape::Num{}),
      construct(shape::Sum{}),
      construct(shape::Asc{}),
      construct(shape::Ap{}),
      construct(shape::Plus{}),
      construct(shape::NEHole{}),
      construct(shape::Inj{InjSide::L}),
      construct(shape::Inj{InjSide::R}),
      construct(shape::Lam{"x"}),
      construct(shape::Lit{0}),
      construct(shape::Case{"x", "y"}),
  };
  std::vector<VarName> vars = ctx.domain();
  for (const auto& b : binders_on_path(z)) {
    if (std::find(vars.begin(), vars.end(), b) == vars.end()) vars.push_back(b);
  }
  for (const auto& x : vars) out.push_back(construct(shape::Var{x}));
  return out;
}

}  // namespace hazel
