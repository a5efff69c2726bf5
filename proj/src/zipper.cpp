#include "hazel/zipper.hpp"

namespace hazel {

HTyp erase(const ZTyp& z) {
  return std::visit(
      overloaded{
          [](const zt::Cursor& n) { return n.t; },
          [](const zt::ArrowL& n) { return mk::arrow(erase(n.z), n.cod); },
          [](const zt::ArrowR& n) { return mk::arrow(n.dom, erase(n.z)); },
          [](const zt::SumL& n) { return mk::sum(erase(n.z), n.right); },
          [](const zt::SumR& n) { return mk::sum(n.left, erase(n.z)); },
      },
      z.get());
}

HExp erase(const ZExp& z) {
  return std::visit(
      overloaded{
          [](const ze::Cursor& n) { return n.e; },
          [](const ze::LamZ& n) { return mk::lam(n.x, erase(n.z)); },
          [](const ze::ApL& n) { return mk::ap(erase(n.z), n.arg); },
          [](const ze::ApR& n) { return mk::ap(n.fun, erase(n.z)); },
          [](const ze::PlusL& n) { return mk::plus(erase(n.z), n.r); },
          [](const ze::PlusR& n) { return mk::plus(n.l, erase(n.z)); },
          [](const ze::AscL& n) { return mk::asc(erase(n.z), n.t); },
          [](const ze::AscR& n) { return mk::asc(n.e, erase(n.z)); },
          [](const ze::NonEmptyHoleZ& n) { return mk::nehole(erase(n.z)); },
          [](const ze::InjZ& n) { return mk::inj(n.side, erase(n.z)); },
          [](const ze::CaseScrut& n) { return mk::case_of(erase(n.z), n.x, n.l, n.y, n.r); },
          [](const ze::CaseL& n) { return mk::case_of(n.scrut, n.x, erase(n.z), n.y, n.r); },
          [](const ze::CaseR& n) { return mk::case_of(n.scrut, n.x, n.l, n.y, erase(n.z)); },
      },
      z.get());
}

ZExp root_cursor(const HExp& e) { return ze::Cursor{e}; }

namespace {

void prepend(int i, CursorPath& p) { p.insert(p.begin(), i); }

CursorPath with_prefix(int i, CursorPath p) {
  prepend(i, p);
  return p;
}

}  // namespace

CursorPath cursor_path(const ZTyp& z) {
  return std::visit(
      overloaded{
          [](const zt::Cursor&) { return CursorPath{}; },
          [](const zt::ArrowL& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const zt::ArrowR& n) { return with_prefix(2, cursor_path(n.z)); },
          [](const zt::SumL& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const zt::SumR& n) { return with_prefix(2, cursor_path(n.z)); },
      },
      z.get());
}

CursorPath cursor_path(const ZExp& z) {
  return std::visit(
      overloaded{
          [](const ze::Cursor&) { return CursorPath{}; },
          [](const ze::LamZ& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const ze::ApL& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const ze::ApR& n) { return with_prefix(2, cursor_path(n.z)); },
          [](const ze::PlusL& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const ze::PlusR& n) { return with_prefix(2, cursor_path(n.z)); },
          [](const ze::AscL& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const ze::AscR& n) { return with_prefix(2, cursor_path(n.z)); },
          [](const ze::NonEmptyHoleZ& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const ze::InjZ& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const ze::CaseScrut& n) { return with_prefix(1, cursor_path(n.z)); },
          [](const ze::CaseL& n) { return with_prefix(2, cursor_path(n.z)); },
          [](const ze::CaseR& n) { return with_prefix(3, cursor_path(n.z)); },
      },
      z.get());
}

namespace {

std::optional<ZTyp> place_typ(const HTyp& t, const CursorPath& path, std::size_t at) {
  if (at == path.size()) return ZTyp{zt::Cursor{t}};
  const int i = path[at];
  if (const auto* a = t.as<ty::Arrow>()) {
    if (i == 1) {
      if (auto z = place_typ(a->dom, path, at + 1)) return ZTyp{zt::ArrowL{*z, a->cod}};
    } else if (i == 2) {
      if (auto z = place_typ(a->cod, path, at + 1)) return ZTyp{zt::ArrowR{a->dom, *z}};
    }
    return std::nullopt;
  }
  if (const auto* s = t.as<ty::Sum>()) {
    if (i == 1) {
      if (auto z = place_typ(s->left, path, at + 1)) return ZTyp{zt::SumL{*z, s->right}};
    } else if (i == 2) {
      if (auto z = place_typ(s->right, path, at + 1)) return ZTyp{zt::SumR{s->left, *z}};
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<ZExp> place_exp(const HExp& e, const CursorPath& path, std::size_t at) {
  if (at == path.size()) return ZExp{ze::Cursor{e}};
  const int i = path[at];
  const std::size_t next = at + 1;
  auto wrap = [](const std::optional<ZExp>& z, auto make) -> std::optional<ZExp> {
    if (!z) return std::nullopt;
    return ZExp{make(*z)};
  };
  return std::visit(
      overloaded{
          [&](const ex::Lam& n) -> std::optional<ZExp> {
            if (i != 1) return std::nullopt;
            return wrap(place_exp(n.body, path, next),
                        [&](ZExp z) { return ze::LamZ{n.x, std::move(z)}; });
          },
          [&](const ex::Ap& n) -> std::optional<ZExp> {
            if (i == 1) {
              return wrap(place_exp(n.fun, path, next),
                          [&](ZExp z) { return ze::ApL{std::move(z), n.arg}; });
            }
            if (i == 2) {
              return wrap(place_exp(n.arg, path, next),
                          [&](ZExp z) { return ze::ApR{n.fun, std::move(z)}; });
            }
            return std::nullopt;
          },
          [&](const ex::Plus& n) -> std::optional<ZExp> {
            if (i == 1) {
              return wrap(place_exp(n.l, path, next),
                          [&](ZExp z) { return ze::PlusL{std::move(z), n.r}; });
            }
            if (i == 2) {
              return wrap(place_exp(n.r, path, next),
                          [&](ZExp z) { return ze::PlusR{n.l, std::move(z)}; });
            }
            return std::nullopt;
          },
          [&](const ex::Asc& n) -> std::optional<ZExp> {
            if (i == 1) {
              return wrap(place_exp(n.e, path, next),
                          [&](ZExp z) { return ze::AscL{std::move(z), n.t}; });
            }
            if (i == 2) {
              auto zt = place_typ(n.t, path, next);
              if (!zt) return std::nullopt;
              return ZExp{ze::AscR{n.e, *zt}};
            }
            return std::nullopt;
          },
          [&](const ex::NonEmptyHole& n) -> std::optional<ZExp> {
            if (i != 1) return std::nullopt;
            return wrap(place_exp(n.e, path, next),
                        [](ZExp z) { return ze::NonEmptyHoleZ{std::move(z)}; });
          },
          [&](const ex::Inj& n) -> std::optional<ZExp> {
            if (i != 1) return std::nullopt;
            return wrap(place_exp(n.e, path, next),
                        [&](ZExp z) { return ze::InjZ{n.side, std::move(z)}; });
          },
          [&](const ex::Case& n) -> std::optional<ZExp> {
            switch (i) {
              case 1:
                return wrap(place_exp(n.scrut, path, next), [&](ZExp z) {
                  return ze::CaseScrut{std::move(z), n.x, n.l, n.y, n.r};
                });
              case 2:
                return wrap(place_exp(n.l, path, next), [&](ZExp z) {
                  return ze::CaseL{n.scrut, n.x, std::move(z), n.y, n.r};
                });
              case 3:
                return wrap(place_exp(n.r, path, next), [&](ZExp z) {
                  return ze::CaseR{n.scrut, n.x, n.l, n.y, std::move(z)};
                });
              default:
                return std::nullopt;
            }
          },
          [](const auto&) -> std::optional<ZExp> { return std::nullopt; },
      },
      e.get());
}

void collect(const HTyp& t, CursorPath& prefix, std::vector<CursorPath>& out) {
  out.push_back(prefix);
  auto child = [&](int i, const HTyp& c) {
    prefix.push_back(i);
    collect(c, prefix, out);
    prefix.pop_back();
  };
  if (const auto* a = t.as<ty::Arrow>()) {
    child(1, a->dom);
    child(2, a->cod);
  } else if (const auto* s = t.as<ty::Sum>()) {
    child(1, s->left);
    child(2, s->right);
  }
}

void collect(const HExp& e, CursorPath& prefix, std::vector<CursorPath>& out) {
  out.push_back(prefix);
  auto child = [&](int i, const auto& c) {
    prefix.push_back(i);
    collect(c, prefix, out);
    prefix.pop_back();
  };
  std::visit(overloaded{
                 [&](const ex::Lam& n) { child(1, n.body); },
                 [&](const ex::Ap& n) {
                   child(1, n.fun);
                   child(2, n.arg);
                 },
                 [&](const ex::Plus& n) {
                   child(1, n.l);
                   child(2, n.r);
                 },
                 [&](const ex::Asc& n) {
                   child(1, n.e);
                   child(2, n.t);
                 },
                 [&](const ex::NonEmptyHole& n) { child(1, n.e); },
                 [&](const ex::Inj& n) { child(1, n.e); },
                 [&](const ex::Case& n) {
                   child(1, n.scrut);
                   child(2, n.l);
                   child(3, n.r);
                 },
                 [](const auto&) {},
             },
             e.get());
}

}  // namespace

std::optional<ZTyp> place_cursor(const HTyp& t, const CursorPath& path) {
  return place_typ(t, path, 0);
}

std::optional<ZExp> place_cursor(const HExp& e, const CursorPath& path) {
  return place_exp(e, path, 0);
}

std::vector<CursorPath> all_paths(const HTyp& t) {
  std::vector<CursorPath> out;
  CursorPath prefix;
  collect(t, prefix, out);
  return out;
}

std::vector<CursorPath> all_paths(const HExp& e) {
  std::vector<CursorPath> out;
  CursorPath prefix;
  collect(e, prefix, out);
  return out;
}

int count_cursors(const ZTyp& z) {
  return std::visit(overloaded{
                        [](const zt::Cursor&) { return 1; },
                        [](const auto& n) { return count_cursors(n.z); },
                    },
                    z.get());
}

int count_cursors(const ZExp& z) {
  return std::visit(overloaded{
                        [](const ze::Cursor&) { return 1; },
                        [](const auto& n) { return count_cursors(n.z); },
                    },
                    z.get());
}

bool cursor_in_type(const ZExp& z) {
  return std::visit(overloaded{
                        [](const ze::Cursor&) { return false; },
                        [](const ze::AscR&) { return true; },
                        [](const auto& n) { return cursor_in_type(n.z); },
                    },
                    z.get());
}

std::vector<VarName> binders_on_path(const ZExp& z) {
  std::vector<VarName> out;
  const ZExp* cur = &z;
  while (true) {
    if (const auto* n = cur->as<ze::LamZ>()) {
      out.push_back(n->x);
      cur = &n->z;
    } else if (const auto* l = cur->as<ze::CaseL>()) {
      out.push_back(l->x);
      cur = &l->z;
    } else if (const auto* r = cur->as<ze::CaseR>()) {
      out.push_back(r->y);
      cur = &r->z;
    } else if (cur->is<ze::Cursor>() || cur->is<ze::AscR>()) {
      return out;
    } else {
      cur = std::visit(overloaded{
                           [](const ze::Cursor&) -> const ZExp* { return nullptr; },
                           [](const ze::AscR&) -> const ZExp* { return nullptr; },
                           [](const auto& n) -> const ZExp* { return &n.z; },
                       },
                       cur->get());
    }
  }
}

}  // namespace hazel
