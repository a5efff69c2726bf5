#include "hazel/rule_oracle.hpp"

namespace hazel::oracle {

namespace {

template <class T>
void add(std::vector<Derived<T>>& out, T v, const char* rule) {
  out.push_back(Derived<T>{std::move(v), rule});
}

bool is_hole(const HTyp& t) { return t.is<ty::Hole>(); }
bool is_ehole(const HExp& e) { return e.is<ex::EmptyHole>(); }

template <class S>
const S* construct_shape(const Action& a) {
  const auto* c = std::get_if<act::Construct>(&a);
  return c ? std::get_if<S>(&c->s) : nullptr;
}

const dir::Child* child_move(const Action& a) {
  const auto* m = std::get_if<act::Move>(&a);
  return m ? std::get_if<dir::Child>(&m->d) : nullptr;
}

bool parent_move(const Action& a) {
  const auto* m = std::get_if<act::Move>(&a);
  return m && std::holds_alternative<dir::Parent>(m->d);
}

bool is_del(const Action& a) { return std::holds_alternative<act::Del>(a); }
bool is_finish(const Action& a) { return std::holds_alternative<act::Finish>(a); }

ZTyp tsel(HTyp t) { return zt::Cursor{std::move(t)}; }
ZExp esel(HExp e) { return ze::Cursor{std::move(e)}; }
HTyp H() { return mk::thole(); }
HExp EH() { return mk::ehole(); }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Derived<ZTyp>> type_results(const ZTyp& z, const Action& a) {
  std::vector<Derived<ZTyp>> out;

  if (const auto* c = z.as<zt::Cursor>()) {
    const HTyp& t = c->t;
    if (const auto* m = child_move(a)) {
      if (const auto* arr = t.as<ty::Arrow>()) {
        if (m->n == 1) add(out, ZTyp{zt::ArrowL{tsel(arr->dom), arr->cod}}, "type-arrow-child-1");
        if (m->n == 2) add(out, ZTyp{zt::ArrowR{arr->dom, tsel(arr->cod)}}, "type-arrow-child-2");
      }
      if (const auto* s = t.as<ty::Sum>()) {
        if (m->n == 1) add(out, ZTyp{zt::SumL{tsel(s->left), s->right}}, "type-sum-child-1");
        if (m->n == 2) add(out, ZTyp{zt::SumR{s->left, tsel(s->right)}}, "type-sum-child-2");
      }
    }
    if (is_del(a)) add(out, tsel(H()), "type-del");
    if (construct_shape<shape::Arrow>(a)) {
      add(out, ZTyp{zt::ArrowR{t, tsel(H())}}, "type-construct-arrow");
    }
    if (construct_shape<shape::Sum>(a)) {
      add(out, ZTyp{zt::SumR{t, tsel(H())}}, "type-construct-sum");
    }
    if (construct_shape<shape::Num>(a) && is_hole(t)) add(out, tsel(mk::num()), "type-construct-num");
    return out;
  }

  if (const auto* n = z.as<zt::ArrowL>()) {
    if (parent_move(a) && n->z.is<zt::Cursor>()) {
      add(out, tsel(mk::arrow(n->z.as<zt::Cursor>()->t, n->cod)), "type-arrow-parent-1");
    }
    for (auto& r : type_results(n->z, a)) add(out, ZTyp{zt::ArrowL{r.value, n->cod}}, "type-arrow-zip-1");
  } else if (const auto* n = z.as<zt::ArrowR>()) {
    if (parent_move(a) && n->z.is<zt::Cursor>()) {
      add(out, tsel(mk::arrow(n->dom, n->z.as<zt::Cursor>()->t)), "type-arrow-parent-2");
    }
    for (auto& r : type_results(n->z, a)) add(out, ZTyp{zt::ArrowR{n->dom, r.value}}, "type-arrow-zip-2");
  } else if (const auto* n = z.as<zt::SumL>()) {
    if (parent_move(a) && n->z.is<zt::Cursor>()) {
      add(out, tsel(mk::sum(n->z.as<zt::Cursor>()->t, n->right)), "type-sum-parent-1");
    }
    for (auto& r : type_results(n->z, a)) add(out, ZTyp{zt::SumL{r.value, n->right}}, "type-sum-zip-1");
  } else if (const auto* n = z.as<zt::SumR>()) {
    if (parent_move(a) && n->z.is<zt::Cursor>()) {
      add(out, tsel(mk::sum(n->left, n->z.as<zt::Cursor>()->t)), "type-sum-parent-2");
    }
    for (auto& r : type_results(n->z, a)) add(out, ZTyp{zt::SumR{n->left, r.value}}, "type-sum-zip-2");
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Derived<ZExp>> move_results(const ZExp& z, const Action& a) {
  std::vector<Derived<ZExp>> out;
  const auto* m = child_move(a);
  const bool up = parent_move(a);

  if (const auto* c = z.as<ze::Cursor>()) {
    if (!m) return out;
    const HExp& e = c->e;
    const int k = m->n;
    if (const auto* n = e.as<ex::Asc>()) {
      if (k == 1) add(out, ZExp{ze::AscL{esel(n->e), n->t}}, "move-asc-child-1");
      if (k == 2) add(out, ZExp{ze::AscR{n->e, tsel(n->t)}}, "move-asc-child-2");
    } else if (const auto* n = e.as<ex::Lam>()) {
      if (k == 1) add(out, ZExp{ze::LamZ{n->x, esel(n->body)}}, "move-lam-child-1");
    } else if (const auto* n = e.as<ex::Plus>()) {
      if (k == 1) add(out, ZExp{ze::PlusL{esel(n->l), n->r}}, "move-plus-child-1");
      if (k == 2) add(out, ZExp{ze::PlusR{n->l, esel(n->r)}}, "move-plus-child-2");
    } else if (const auto* n = e.as<ex::Ap>()) {
      if (k == 1) add(out, ZExp{ze::ApL{esel(n->fun), n->arg}}, "move-ap-child-1");
      if (k == 2) add(out, ZExp{ze::ApR{n->fun, esel(n->arg)}}, "move-ap-child-2");
    } else if (const auto* n = e.as<ex::NonEmptyHole>()) {
      if (k == 1) add(out, ZExp{ze::NonEmptyHoleZ{esel(n->e)}}, "move-nehole-child-1");
    } else if (const auto* n = e.as<ex::Inj>()) {
      if (k == 1) add(out, ZExp{ze::InjZ{n->side, esel(n->e)}}, "move-inj-child-1");
    } else if (const auto* n = e.as<ex::Case>()) {
      if (k == 1) add(out, ZExp{ze::CaseScrut{esel(n->scrut), n->x, n->l, n->y, n->r}}, "move-case-child-1");
      if (k == 2) add(out, ZExp{ze::CaseL{n->scrut, n->x, esel(n->l), n->y, n->r}}, "move-case-child-2");
      if (k == 3) add(out, ZExp{ze::CaseR{n->scrut, n->x, n->l, n->y, esel(n->r)}}, "move-case-child-3");
    }
    return out;
  }

  if (!up) return out;
  auto sel = [](const ZExp& inner) -> const HExp* {
    const auto* c = inner.as<ze::Cursor>();
    return c ? &c->e : nullptr;
  };
  if (const auto* n = z.as<ze::AscL>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::asc(*e, n->t)), "move-asc-parent-1");
  } else if (const auto* n = z.as<ze::AscR>()) {
    if (const auto* c = n->z.as<zt::Cursor>()) add(out, esel(mk::asc(n->e, c->t)), "move-asc-parent-2");
  } else if (const auto* n = z.as<ze::LamZ>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::lam(n->x, *e)), "move-lam-parent");
  } else if (const auto* n = z.as<ze::PlusL>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::plus(*e, n->r)), "move-plus-parent-1");
  } else if (const auto* n = z.as<ze::PlusR>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::plus(n->l, *e)), "move-plus-parent-2");
  } else if (const auto* n = z.as<ze::ApL>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::ap(*e, n->arg)), "move-ap-parent-1");
  } else if (const auto* n = z.as<ze::ApR>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::ap(n->fun, *e)), "move-ap-parent-2");
  } else if (const auto* n = z.as<ze::NonEmptyHoleZ>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::nehole(*e)), "move-nehole-parent");
  } else if (const auto* n = z.as<ze::InjZ>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::inj(n->side, *e)), "move-inj-parent");
  } else if (const auto* n = z.as<ze::CaseScrut>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::case_of(*e, n->x, n->l, n->y, n->r)), "move-case-parent-1");
  } else if (const auto* n = z.as<ze::CaseL>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::case_of(n->scrut, n->x, *e, n->y, n->r)), "move-case-parent-2");
  } else if (const auto* n = z.as<ze::CaseR>()) {
    if (auto e = sel(n->z)) add(out, esel(mk::case_of(n->scrut, n->x, n->l, n->y, *e)), "move-case-parent-3");
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Derived<Synthesized>> syn_results(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                              const Action& a, Discipline d) {
  std::vector<Derived<Synthesized>> out;
  auto emit = [&](ZExp ze_, HTyp t_, const char* rule) {
    add(out, Synthesized{std::move(ze_), std::move(t_)}, rule);
  };

  if (std::holds_alternative<act::Move>(a)) {
    for (auto& r : move_results(z, a)) emit(r.value, t, "syn-move");
  }

  if (const auto* c = z.as<ze::Cursor>()) {
    const HExp& e = c->e;
    if (is_del(a)) emit(esel(EH()), H(), "syn-del");
    if (construct_shape<shape::Asc>(a)) emit(ZExp{ze::AscR{e, tsel(t)}}, t, "syn-construct-asc");
    if (const auto* v = construct_shape<shape::Var>(a); v && is_ehole(e) && is_hole(t)) {
      if (auto xt = ctx.lookup(v->x)) emit(esel(mk::var(v->x)), *xt, "syn-construct-var");
    }
    if (const auto* l = construct_shape<shape::Lam>(a); l && is_ehole(e) && is_hole(t)) {
      emit(ZExp{ze::AscR{mk::lam(l->x, EH()), ZTyp{zt::ArrowL{tsel(H()), H()}}}},
           mk::arrow(H(), H()), "syn-construct-lam");
    }
    if (construct_shape<shape::Ap>(a)) {
      if (auto m = matched_arrow(t)) emit(ZExp{ze::ApR{e, esel(EH())}}, m->second, "syn-construct-ap-arrow");
      if (inconsistent(t, mk::arrow(H(), H()))) {
        emit(ZExp{ze::ApR{mk::nehole(e), esel(EH())}}, H(), "syn-construct-ap-other");
      }
    }
    if (const auto* n = construct_shape<shape::Lit>(a); n && is_ehole(e) && is_hole(t)) {
      emit(esel(mk::lit(n->n)), mk::num(), "syn-construct-lit");
    }
    if (construct_shape<shape::Plus>(a)) {
      if (consistent(t, mk::num())) emit(ZExp{ze::PlusR{e, esel(EH())}}, mk::num(), "syn-construct-plus-1");
      if (inconsistent(t, mk::num())) {
        emit(ZExp{ze::PlusR{mk::nehole(e), esel(EH())}}, mk::num(), "syn-construct-plus-2");
      }
    }
    if (construct_shape<shape::NEHole>(a)) emit(ZExp{ze::NonEmptyHoleZ{z}}, H(), "syn-construct-nehole");
    if (const auto* i = construct_shape<shape::Inj>(a); i && is_ehole(e)) {
      emit(ZExp{ze::AscR{mk::inj(i->side, EH()), ZTyp{zt::SumL{tsel(H()), H()}}}},
           mk::sum(H(), H()), "syn-construct-inj");
    }
    if (const auto* cs = construct_shape<shape::Case>(a)) {
      if (matched_sum(t)) {
        emit(ZExp{ze::AscL{ZExp{ze::CaseL{e, cs->x, esel(EH()), cs->y, EH()}}, H()}}, H(),
             "syn-construct-case-1");
      }
      if (inconsistent(t, mk::sum(H(), H()))) {
        emit(ZExp{ze::AscL{ZExp{ze::CaseScrut{ZExp{ze::NonEmptyHoleZ{esel(e)}}, cs->x, EH(), cs->y,
                                              EH()}},
                           H()}},
             H(), "syn-construct-case-2");
      }
    }
    if (is_finish(a) && is_hole(t)) {
      if (const auto* h = e.as<ex::NonEmptyHole>()) {
        if (auto inner = synthesize(ctx, h->e)) emit(esel(h->e), *inner, "syn-finish");
      }
    }
    return out;
  }

  if (const auto* n = z.as<ze::AscL>()) {
    if (t == n->t) {
      for (auto& r : ana_results(ctx, n->z, n->t, a, d)) {
        emit(ZExp{ze::AscL{r.value, n->t}}, n->t, "syn-zip-asc-1");
      }
    }
  } else if (const auto* n = z.as<ze::AscR>()) {
    if (t == erase(n->z)) {
      for (auto& r : type_results(n->z, a)) {
        HTyp t2 = erase(r.value);
        if (analyze(ctx, n->e, t2)) emit(ZExp{ze::AscR{n->e, r.value}}, t2, "syn-zip-asc-2");
      }
    }
  } else if (const auto* n = z.as<ze::ApL>()) {
    if (auto t2 = synthesize(ctx, erase(n->z))) {
      for (auto& r : syn_results(ctx, n->z, *t2, a, d)) {
        auto m = matched_arrow(r.value.t);
        if (m && analyze(ctx, n->arg, m->first)) emit(ZExp{ze::ApL{r.value.z, n->arg}}, m->second, "syn-zip-ap-fun");
      }
    }
  } else if (const auto* n = z.as<ze::ApR>()) {
    auto t2 = synthesize(ctx, n->fun);
    auto m = t2 ? matched_arrow(*t2) : std::nullopt;
    if (m) {
      for (auto& r : ana_results(ctx, n->z, m->first, a, d)) {
        emit(ZExp{ze::ApR{n->fun, r.value}}, m->second, "syn-zip-ap-arg");
      }
    }
  } else if (const auto* n = z.as<ze::PlusL>()) {
    if (t == mk::num()) {
      for (auto& r : ana_results(ctx, n->z, mk::num(), a, d)) {
        emit(ZExp{ze::PlusL{r.value, n->r}}, mk::num(), "syn-zip-plus-1");
      }
    }
  } else if (const auto* n = z.as<ze::PlusR>()) {
    if (t == mk::num()) {
      for (auto& r : ana_results(ctx, n->z, mk::num(), a, d)) {
        emit(ZExp{ze::PlusR{n->l, r.value}}, mk::num(), "syn-zip-plus-2");
      }
    }
  } else if (const auto* n = z.as<ze::NonEmptyHoleZ>()) {
    if (is_hole(t)) {
      if (auto t2 = synthesize(ctx, erase(n->z))) {
        for (auto& r : syn_results(ctx, n->z, *t2, a, d)) {
          emit(ZExp{ze::NonEmptyHoleZ{r.value.z}}, H(), "syn-zip-nehole");
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Derived<ZExp>> ana_specific_results(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                                const Action& a, Discipline d) {
  std::vector<Derived<ZExp>> out;

  if (std::holds_alternative<act::Move>(a)) {
    for (auto& r : move_results(z, a)) add(out, r.value, "ana-move");
  }

  if (const auto* c = z.as<ze::Cursor>()) {
    const HExp& e = c->e;
    if (is_del(a)) add(out, esel(EH()), "ana-del");
    if (construct_shape<shape::Asc>(a)) add(out, ZExp{ze::AscR{e, tsel(t)}}, "ana-construct-asc");
    if (const auto* v = construct_shape<shape::Var>(a); v && is_ehole(e)) {
      auto xt = ctx.lookup(v->x);
      if (xt && inconsistent(t, *xt)) add(out, ZExp{ze::NonEmptyHoleZ{esel(mk::var(v->x))}}, "ana-construct-var");
    }
    if (const auto* l = construct_shape<shape::Lam>(a); l && is_ehole(e)) {
      if (matched_arrow(t)) add(out, ZExp{ze::LamZ{l->x, esel(EH())}}, "ana-construct-lam-1");
      if (inconsistent(t, mk::arrow(H(), H()))) {
        ZExp inner = ze::AscR{mk::lam(l->x, EH()), ZTyp{zt::ArrowL{tsel(H()), H()}}};
        add(out, ZExp{ze::NonEmptyHoleZ{inner}}, "ana-construct-lam-2");
      }
    }
    if (const auto* n = construct_shape<shape::Lit>(a); n && is_ehole(e) && inconsistent(t, mk::num())) {
      add(out, ZExp{ze::NonEmptyHoleZ{esel(mk::lit(n->n))}}, "ana-construct-lit");
    }
    if (const auto* i = construct_shape<shape::Inj>(a); i && is_ehole(e)) {
      if (matched_sum(t)) add(out, ZExp{ze::InjZ{i->side, esel(EH())}}, "ana-construct-inj-1");
      if (inconsistent(t, mk::sum(H(), H()))) {
        ZExp inner = ze::AscR{mk::inj(i->side, EH()), ZTyp{zt::SumL{tsel(H()), H()}}};
        add(out, ZExp{ze::NonEmptyHoleZ{inner}}, "ana-construct-inj-2");
      }
    }
    if (const auto* cs = construct_shape<shape::Case>(a); cs && is_ehole(e)) {
      add(out, ZExp{ze::CaseScrut{esel(EH()), cs->x, EH(), cs->y, EH()}}, "ana-construct-case");
    }
    if (is_finish(a)) {
      if (const auto* h = e.as<ex::NonEmptyHole>(); h && analyze(ctx, h->e, t)) {
        add(out, esel(h->e), "ana-finish");
      }
    }
    return out;
  }

  if (const auto* n = z.as<ze::LamZ>()) {
    if (auto m = matched_arrow(t)) {
      for (auto& r : ana_results(ctx.extend(n->x, m->first), n->z, m->second, a, d)) {
        add(out, ZExp{ze::LamZ{n->x, r.value}}, "ana-zip-lam");
      }
    }
  } else if (const auto* n = z.as<ze::InjZ>()) {
    if (auto m = matched_sum(t)) {
      const HTyp& ti = n->side == InjSide::L ? m->first : m->second;
      for (auto& r : ana_results(ctx, n->z, ti, a, d)) {
        add(out, ZExp{ze::InjZ{n->side, r.value}}, "ana-zip-inj");
      }
    }
  } else if (const auto* n = z.as<ze::CaseScrut>()) {
    if (auto t0 = synthesize(ctx, erase(n->z))) {
      for (auto& r : syn_results(ctx, n->z, *t0, a, d)) {
        auto m = matched_sum(r.value.t);
        if (m && analyze(ctx.extend(n->x, m->first), n->l, t) &&
            analyze(ctx.extend(n->y, m->second), n->r, t)) {
          add(out, ZExp{ze::CaseScrut{r.value.z, n->x, n->l, n->y, n->r}}, "ana-zip-case-scrut");
        }
      }
    }
  } else if (const auto* n = z.as<ze::CaseL>()) {
    auto ts = synthesize(ctx, n->scrut);
    if (auto m = ts ? matched_sum(*ts) : std::nullopt) {
      for (auto& r : ana_results(ctx.extend(n->x, m->first), n->z, t, a, d)) {
        add(out, ZExp{ze::CaseL{n->scrut, n->x, r.value, n->y, n->r}}, "ana-zip-case-left");
      }
    }
  } else if (const auto* n = z.as<ze::CaseR>()) {
    auto ts = synthesize(ctx, n->scrut);
    if (auto m = ts ? matched_sum(*ts) : std::nullopt) {
      for (auto& r : ana_results(ctx.extend(n->y, m->second), n->z, t, a, d)) {
        add(out, ZExp{ze::CaseR{n->scrut, n->x, n->l, n->y, r.value}}, "ana-zip-case-right");
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Derived<ZExp>> ana_results(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                       const Action& a, Discipline d) {
  auto out = ana_specific_results(ctx, z, t, a, d);
  if (d == Discipline::SubsumptionMinimal && !out.empty()) return out;
  if (auto t1 = synthesize(ctx, erase(z))) {
    for (auto& r : syn_results(ctx, z, *t1, a, d)) {
      if (consistent(t, r.value.t)) add(out, r.value.z, "ana-subsume");
    }
  }
  return out;
}

}  // namespace hazel::oracle
