#include <stdexcept>

#include "hazel/metatheory.hpp"
#include "hazel/text.hpp"

namespace hazel {

using namespace actions;

namespace {

void append(ActionList& out, const ActionList& more) {
  out.insert(out.end(), more.begin(), more.end());
}

ActionList parents(std::size_t n) { return ActionList(n, move_parent()); }

[[noreturn]] void not_constructible(const std::string& why, const HExp& e) {
  throw std::invalid_argument(why + ": " + print(e));
}

ActionList w_syn(const Ctx& ctx, const HExp& e);
ActionList w_ana(const Ctx& ctx, const HExp& e, const HTyp& t);

// Every witness starts from a cursor on an empty hole and leaves the cursor
// on the root of what it built.

ActionList w_syn(const Ctx& ctx, const HExp& e) {
  if (!synthesize(ctx, e)) not_constructible("does not synthesize", e);
  ActionList out;
  std::visit(overloaded{
                 [&](const ex::EmptyHole&) {},
                 [&](const ex::Var& n) { out.push_back(construct(shape::Var{n.x})); },
                 [&](const ex::NumLit& n) { out.push_back(construct(shape::Lit{n.n})); },
                 [&](const ex::Asc& n) {
                   out.push_back(construct(shape::Asc{}));
                   append(out, construct_witness_typ(n.t));
                   out.push_back(move_parent());
                   out.push_back(move_child(1));
                   append(out, w_ana(ctx, n.e, n.t));
                   out.push_back(move_parent());
                 },
                 [&](const ex::Ap& n) {
                   append(out, w_syn(ctx, n.fun));
                   out.push_back(construct(shape::Ap{}));
                   append(out, w_ana(ctx, n.arg, matched_arrow(*synthesize(ctx, n.fun))->first));
                   out.push_back(move_parent());
                 },
                 [&](const ex::Plus& n) {
                   out.push_back(construct(shape::Plus{}));
                   append(out, w_ana(ctx, n.r, mk::num()));
                   out.push_back(move_parent());
                   out.push_back(move_child(1));
                   append(out, w_ana(ctx, n.l, mk::num()));
                   out.push_back(move_parent());
                 },
                 [&](const ex::NonEmptyHole& n) {
                   append(out, w_syn(ctx, n.e));
                   out.push_back(construct(shape::NEHole{}));
                   out.push_back(move_parent());
                 },
                 [&](const auto&) { not_constructible("does not synthesize", e); },
             },
             e.get());
  return out;
}

/// Build `e` inside a fresh non-empty hole, then lift the hole off.
ActionList via_hole(const Ctx& ctx, const HExp& e) {
  ActionList out = {construct(shape::NEHole{})};
  append(out, w_syn(ctx, e));
  out.push_back(move_parent());
  out.push_back(finish());
  return out;
}

ActionList w_ana(const Ctx& ctx, const HExp& e, const HTyp& t) {
  if (!analyze(ctx, e, t)) not_constructible("does not analyze against " + print(t), e);
  ActionList out;
  std::visit(
      overloaded{
          [&](const ex::EmptyHole&) {},
          [&](const ex::Lam& n) {
            const auto arr = *matched_arrow(t);
            out.push_back(construct(shape::Lam{n.x}));
            append(out, w_ana(ctx.extend(n.x, arr.first), n.body, arr.second));
            out.push_back(move_parent());
          },
          [&](const ex::Inj& n) {
            const auto sum = *matched_sum(t);
            out.push_back(construct(shape::Inj{n.side}));
            append(out, w_ana(ctx, n.e, n.side == InjSide::L ? sum.first : sum.second));
            out.push_back(move_parent());
          },
          [&](const ex::Case& n) {
            const auto sum = *matched_sum(*synthesize(ctx, n.scrut));
            out.push_back(construct(shape::Case{n.x, n.y}));
            // Intermediate scrutinees need not synthesize a sum, so the
            // scrutinee is built inside a hole and finished at the end.
            if (!n.scrut.is<ex::EmptyHole>()) append(out, via_hole(ctx, n.scrut));
            out.push_back(move_parent());
            out.push_back(move_child(2));
            append(out, w_ana(ctx.extend(n.x, sum.first), n.l, t));
            out.push_back(move_parent());
            out.push_back(move_child(3));
            append(out, w_ana(ctx.extend(n.y, sum.second), n.r, t));
            out.push_back(move_parent());
          },
          [&](const ex::Var& n) { out.push_back(construct(shape::Var{n.x})); },
          [&](const ex::NumLit& n) { out.push_back(construct(shape::Lit{n.n})); },
          [&](const auto&) { append(out, via_hole(ctx, e)); },
      },
      e.get());
  return out;
}

}  // namespace

ActionList reach_up_witness(const ZExp& z) { return parents(cursor_path(z).size()); }

ActionList reach_up_witness_typ(const ZTyp& z) { return parents(cursor_path(z).size()); }

ActionList reach_down_witness(const HExp& e, const CursorPath& p) {
  if (!place_cursor(e, p)) throw std::invalid_argument("no such position in " + print(e));
  ActionList out;
  for (int i : p) out.push_back(move_child(i));
  return out;
}

std::optional<ActionList> reachability_witness(const ZExp& from, const ZExp& to) {
  const HExp e = erase(from);
  if (!(e == erase(to))) return std::nullopt;
  ActionList out = reach_up_witness(from);
  append(out, reach_down_witness(e, cursor_path(to)));
  return out;
}

bool only_movements(const ActionList& as) {
  for (const auto& a : as) {
    if (!is_move(a)) return false;
  }
  return true;
}

ActionList construct_witness_typ(const HTyp& t) {
  ActionList out;
  std::visit(overloaded{
                 [&](const ty::Num&) { out.push_back(construct(shape::Num{})); },
                 [&](const ty::Hole&) {},
                 [&](const ty::Arrow& a) {
                   append(out, construct_witness_typ(a.dom));
                   out.push_back(construct(shape::Arrow{}));
                   append(out, construct_witness_typ(a.cod));
                   out.push_back(move_parent());
                 },
                 [&](const ty::Sum& s) {
                   append(out, construct_witness_typ(s.left));
                   out.push_back(construct(shape::Sum{}));
                   append(out, construct_witness_typ(s.right));
                   out.push_back(move_parent());
                 },
             },
             t.get());
  return out;
}

ActionList construct_witness_syn(const Ctx& ctx, const HExp& e) { return w_syn(ctx, e); }

ActionList construct_witness_ana(const Ctx& ctx, const HExp& e, const HTyp& t) {
  return w_ana(ctx, e, t);
}

}  // namespace hazel
