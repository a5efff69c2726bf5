#include "hazel/syntax.hpp"

#include <cctype>
#include <stdexcept>

namespace hazel {

VarName::VarName(std::string name) : name_(std::move(name)) {
  if (!valid(name_)) {
    throw std::invalid_argument("invalid variable name: '" + name_ + "'");
  }
}

bool VarName::valid(std::string_view name) {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "inl" && name != "inr" && name != "case";
}

std::optional<HTyp> Ctx::lookup(const VarName& x) const {
  auto it = map_.find(x);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Ctx Ctx::extend(const VarName& x, const HTyp& t) const {
  Ctx out = *this;
  out.bind(x, t);
  return out;
}

void Ctx::bind(const VarName& x, const HTyp& t) { map_.insert_or_assign(x, t); }

std::vector<VarName> Ctx::domain() const {
  std::vector<VarName> out;
  out.reserve(map_.size());
  for (const auto& [x, _] : map_) out.push_back(x);
  return out;
}

namespace mk {
HTyp num() { return ty::Num{}; }
HTyp thole() { return ty::Hole{}; }
HTyp arrow(HTyp dom, HTyp cod) { return ty::Arrow{std::move(dom), std::move(cod)}; }
HTyp sum(HTyp left, HTyp right) { return ty::Sum{std::move(left), std::move(right)}; }

HExp var(VarName x) { return ex::Var{std::move(x)}; }
HExp lam(VarName x, HExp body) { return ex::Lam{std::move(x), std::move(body)}; }
HExp ap(HExp fun, HExp arg) { return ex::Ap{std::move(fun), std::move(arg)}; }
HExp lit(std::uint64_t n) { return ex::NumLit{n}; }
HExp plus(HExp l, HExp r) { return ex::Plus{std::move(l), std::move(r)}; }
HExp asc(HExp e, HTyp t) { return ex::Asc{std::move(e), std::move(t)}; }
HExp ehole() { return ex::EmptyHole{}; }
HExp nehole(HExp e) { return ex::NonEmptyHole{std::move(e)}; }
HExp inj(InjSide side, HExp e) { return ex::Inj{side, std::move(e)}; }
HExp inl(HExp e) { return inj(InjSide::L, std::move(e)); }
HExp inr(HExp e) { return inj(InjSide::R, std::move(e)); }
HExp case_of(HExp scrut, VarName x, HExp l, VarName y, HExp r) {
  return ex::Case{std::move(scrut), std::move(x), std::move(l), std::move(y), std::move(r)};
}
}  // namespace mk

std::size_t size_of(const HTyp& t) {
  return std::visit(
      overloaded{
          [](const ty::Arrow& a) { return 1 + size_of(a.dom) + size_of(a.cod); },
          [](const ty::Sum& s) { return 1 + size_of(s.left) + size_of(s.right); },
          [](const auto&) -> std::size_t { return 1; },
      },
      t.get());
}

std::size_t size_of(const HExp& e) {
  return std::visit(
      overloaded{
          [](const ex::Lam& n) { return 1 + size_of(n.body); },
          [](const ex::Ap& n) { return 1 + size_of(n.fun) + size_of(n.arg); },
          [](const ex::Plus& n) { return 1 + size_of(n.l) + size_of(n.r); },
          [](const ex::Asc& n) { return 1 + size_of(n.e) + size_of(n.t); },
          [](const ex::NonEmptyHole& n) { return 1 + size_of(n.e); },
          [](const ex::Inj& n) { return 1 + size_of(n.e); },
          [](const ex::Case& n) {
            return 1 + size_of(n.scrut) + size_of(n.l) + size_of(n.r);
          },
          [](const auto&) -> std::size_t { return 1; },
      },
      e.get());
}

}  // namespace hazel
