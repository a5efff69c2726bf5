#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace hazel {

/// Immutable tree handle over a variant node. Copies share structure;
/// equality is structural.
template <class Variant, class T>
struct is_alternative;
template <class... Ts, class T>
struct is_alternative<std::variant<Ts...>, T> : std::disjunction<std::is_same<Ts, T>...> {};

template <class Node>
class Tree {
 public:
  template <class Alt>
    requires is_alternative<decltype(std::declval<const Node&>().v), std::decay_t<Alt>>::value
  Tree(Alt alt)  // NOLINT(google-explicit-constructor)
      : node_(std::make_shared<const Node>(Node{std::move(alt)})) {}

  const auto& get() const { return node_->v; }

  template <class Alt>
  const Alt* as() const {
    return std::get_if<Alt>(&node_->v);
  }

  template <class Alt>
  bool is() const {
    return std::holds_alternative<Alt>(node_->v);
  }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.node_ == b.node_ || a.node_->v == b.node_->v;
  }

 private:
  std::shared_ptr<const Node> node_;
};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

/// Identifier: letters, digits and underscores, no leading digit.
/// `inl`, `inr` and `case` are reserved by the surface syntax.
class VarName {
 public:
  VarName(std::string name);  // NOLINT(google-explicit-constructor)
  VarName(const char* name) : VarName(std::string(name)) {}  // NOLINT

  static bool valid(std::string_view name);

  const std::string& str() const { return name_; }

  friend auto operator<=>(const VarName&, const VarName&) = default;
  friend bool operator==(const VarName&, const VarName&) = default;

 private:
  std::string name_;
};

enum class InjSide { L, R };

// ---------------------------------------------------------------------------
// H-types

struct HTypNode;
using HTyp = Tree<HTypNode>;

namespace ty {
struct Num {
  bool operator==(const Num&) const = default;
};
struct Hole {
  bool operator==(const Hole&) const = default;
};
struct Arrow {
  HTyp dom, cod;
  bool operator==(const Arrow&) const = default;
};
struct Sum {
  HTyp left, right;
  bool operator==(const Sum&) const = default;
};
}  // namespace ty

struct HTypNode {
  std::variant<ty::Num, ty::Hole, ty::Arrow, ty::Sum> v;
};

// ---------------------------------------------------------------------------
// H-expressions

struct HExpNode;
using HExp = Tree<HExpNode>;

namespace ex {
struct Var {
  VarName x;
  bool operator==(const Var&) const = default;
};
struct Lam {
  VarName x;
  HExp body;
  bool operator==(const Lam&) const = default;
};
struct Ap {
  HExp fun, arg;
  bool operator==(const Ap&) const = default;
};
struct NumLit {
  std::uint64_t n;
  bool operator==(const NumLit&) const = default;
};
struct Plus {
  HExp l, r;
  bool operator==(const Plus&) const = default;
};
struct Asc {
  HExp e;
  HTyp t;
  bool operator==(const Asc&) const = default;
};
struct EmptyHole {
  bool operator==(const EmptyHole&) const = default;
};
struct NonEmptyHole {
  HExp e;
  bool operator==(const NonEmptyHole&) const = default;
};
struct Inj {
  InjSide side;
  HExp e;
  bool operator==(const Inj&) const = default;
};
struct Case {
  HExp scrut;
  VarName x;
  HExp l;
  VarName y;
  HExp r;
  bool operator==(const Case&) const = default;
};
}  // namespace ex

struct HExpNode {
  std::variant<ex::Var, ex::Lam, ex::Ap, ex::NumLit, ex::Plus, ex::Asc,
               ex::EmptyHole, ex::NonEmptyHole, ex::Inj, ex::Case>
      v;
};

/// Typing context. Extending with a bound name replaces the old binding.
class Ctx {
 public:
  Ctx() = default;
  Ctx(std::initializer_list<std::pair<const VarName, HTyp>> bindings)
      : map_(bindings) {}

  std::optional<HTyp> lookup(const VarName& x) const;
  bool contains(const VarName& x) const { return map_.contains(x); }
  Ctx extend(const VarName& x, const HTyp& t) const;
  void bind(const VarName& x, const HTyp& t);
  std::vector<VarName> domain() const;
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  const std::map<VarName, HTyp>& bindings() const { return map_; }

  friend bool operator==(const Ctx&, const Ctx&) = default;

 private:
  std::map<VarName, HTyp> map_;
};

/// Terse constructors, mostly for tests and generators.
namespace mk {
HTyp num();
HTyp thole();
HTyp arrow(HTyp dom, HTyp cod);
HTyp sum(HTyp left, HTyp right);

HExp var(VarName x);
HExp lam(VarName x, HExp body);
HExp ap(HExp fun, HExp arg);
HExp lit(std::uint64_t n);
HExp plus(HExp l, HExp r);
HExp asc(HExp e, HTyp t);
HExp ehole();
HExp nehole(HExp e);
HExp inj(InjSide side, HExp e);
HExp inl(HExp e);
HExp inr(HExp e);
HExp case_of(HExp scrut, VarName x, HExp l, VarName y, HExp r);
}  // namespace mk

/// Number of nodes, counting embedded types.
std::size_t size_of(const HTyp& t);
std::size_t size_of(const HExp& e);

}  // namespace hazel
