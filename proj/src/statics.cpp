#include "hazel/statics.hpp"

namespace hazel {

bool consistent(const HTyp& a, const HTyp& b) {
  if (a.is<ty::Hole>() || b.is<ty::Hole>()) return true;
  if (a.is<ty::Num>() && b.is<ty::Num>()) return true;
  if (const auto* fa = a.as<ty::Arrow>()) {
    const auto* fb = b.as<ty::Arrow>();
    return fb && consistent(fa->dom, fb->dom) && consistent(fa->cod, fb->cod);
  }
  if (const auto* sa = a.as<ty::Sum>()) {
    const auto* sb = b.as<ty::Sum>();
    return sb && consistent(sa->left, sb->left) && consistent(sa->right, sb->right);
  }
  return false;
}

bool inconsistent(const HTyp& a, const HTyp& b) {
  return std::visit(
      overloaded{
          // Head-constructor clashes.
          [](const ty::Num&, const ty::Arrow&) { return true; },
          [](const ty::Arrow&, const ty::Num&) { return true; },
          [](const ty::Num&, const ty::Sum&) { return true; },
          [](const ty::Sum&, const ty::Num&) { return true; },
          [](const ty::Arrow&, const ty::Sum&) { return true; },
          [](const ty::Sum&, const ty::Arrow&) { return true; },
          // Component-wise propagation.
          [](const ty::Arrow& x, const ty::Arrow& y) {
            return inconsistent(x.dom, y.dom) || inconsistent(x.cod, y.cod);
          },
          [](const ty::Sum& x, const ty::Sum& y) {
            return inconsistent(x.left, y.left) || inconsistent(x.right, y.right);
          },
          [](const auto&, const auto&) { return false; },
      },
      a.get(), b.get());
}

std::optional<std::pair<HTyp, HTyp>> matched_arrow(const HTyp& t) {
  if (t.is<ty::Hole>()) return std::pair{mk::thole(), mk::thole()};
  if (const auto* a = t.as<ty::Arrow>()) return std::pair{a->dom, a->cod};
  return std::nullopt;
}

std::optional<std::pair<HTyp, HTyp>> matched_sum(const HTyp& t) {
  if (t.is<ty::Hole>()) return std::pair{mk::thole(), mk::thole()};
  if (const auto* s = t.as<ty::Sum>()) return std::pair{s->left, s->right};
  return std::nullopt;
}

std::optional<HTyp> synthesize(const Ctx& ctx, const HExp& e) {
  return std::visit(
      overloaded{
          [&](const ex::Asc& n) -> std::optional<HTyp> {
            if (analyze(ctx, n.e, n.t)) return n.t;
            return std::nullopt;
          },
          [&](const ex::Var& n) { return ctx.lookup(n.x); },
          [&](const ex::Ap& n) -> std::optional<HTyp> {
            auto fun_t = synthesize(ctx, n.fun);
            if (!fun_t) return std::nullopt;
            auto arr = matched_arrow(*fun_t);
            if (!arr || !analyze(ctx, n.arg, arr->first)) return std::nullopt;
            return arr->second;
          },
          [](const ex::NumLit&) -> std::optional<HTyp> { return mk::num(); },
          [&](const ex::Plus& n) -> std::optional<HTyp> {
            if (analyze(ctx, n.l, mk::num()) && analyze(ctx, n.r, mk::num())) {
              return mk::num();
            }
            return std::nullopt;
          },
          [](const ex::EmptyHole&) -> std::optional<HTyp> { return mk::thole(); },
          [&](const ex::NonEmptyHole& n) -> std::optional<HTyp> {
            if (synthesize(ctx, n.e)) return mk::thole();
            return std::nullopt;
          },
          // Lambdas, injections and case analysis only analyze.
          [](const auto&) -> std::optional<HTyp> { return std::nullopt; },
      },
      e.get());
}

bool analyze(const Ctx& ctx, const HExp& e, const HTyp& t) {
  if (const auto* lam = e.as<ex::Lam>()) {
    auto arr = matched_arrow(t);
    return arr && analyze(ctx.extend(lam->x, arr->first), lam->body, arr->second);
  }
  if (const auto* inj = e.as<ex::Inj>()) {
    auto s = matched_sum(t);
    if (!s) return false;
    return analyze(ctx, inj->e, inj->side == InjSide::L ? s->first : s->second);
  }
  if (const auto* c = e.as<ex::Case>()) {
    auto scrut_t = synthesize(ctx, c->scrut);
    if (!scrut_t) return false;
    auto s = matched_sum(*scrut_t);
    return s && analyze(ctx.extend(c->x, s->first), c->l, t) &&
           analyze(ctx.extend(c->y, s->second), c->r, t);
  }
  auto synth = synthesize(ctx, e);
  return synth && consistent(t, *synth);
}

bool is_complete(const HTyp& t) {
  return std::visit(
      overloaded{
          [](const ty::Num&) { return true; },
          [](const ty::Hole&) { return false; },
          [](const ty::Arrow& a) { return is_complete(a.dom) && is_complete(a.cod); },
          [](const ty::Sum& s) { return is_complete(s.left) && is_complete(s.right); },
      },
      t.get());
}

bool is_complete(const HExp& e) {
  return std::visit(
      overloaded{
          [](const ex::Var&) { return true; },
          [](const ex::NumLit&) { return true; },
          [](const ex::Lam& n) { return is_complete(n.body); },
          [](const ex::Ap& n) { return is_complete(n.fun) && is_complete(n.arg); },
          [](const ex::Plus& n) { return is_complete(n.l) && is_complete(n.r); },
          [](const ex::Asc& n) { return is_complete(n.e) && is_complete(n.t); },
          [](const ex::EmptyHole&) { return false; },
          [](const ex::NonEmptyHole&) { return false; },
          [](const ex::Inj& n) { return is_complete(n.e); },
          [](const ex::Case& n) {
            return is_complete(n.scrut) && is_complete(n.l) && is_complete(n.r);
          },
      },
      e.get());
}

}  // namespace hazel
