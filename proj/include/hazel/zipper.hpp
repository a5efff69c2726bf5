#pragma once

#include <optional>
#include <vector>

#include "hazel/syntax.hpp"

namespace hazel {

// ---------------------------------------------------------------------------
// Z-types: an H-type with exactly one cursor. Every non-cursor form has
// exactly one zipper child, so the one-cursor property holds by construction.

struct ZTypNode;
using ZTyp = Tree<ZTypNode>;

namespace zt {
struct Cursor {
  HTyp t;
  bool operator==(const Cursor&) const = default;
};
struct ArrowL {
  ZTyp z;
  HTyp cod;
  bool operator==(const ArrowL&) const = default;
};
struct ArrowR {
  HTyp dom;
  ZTyp z;
  bool operator==(const ArrowR&) const = default;
};
struct SumL {
  ZTyp z;
  HTyp right;
  bool operator==(const SumL&) const = default;
};
struct SumR {
  HTyp left;
  ZTyp z;
  bool operator==(const SumR&) const = default;
};
}  // namespace zt

struct ZTypNode {
  std::variant<zt::Cursor, zt::ArrowL, zt::ArrowR, zt::SumL, zt::SumR> v;
};

// ---------------------------------------------------------------------------
// Z-expressions. The only route to a type cursor is AscR.

struct ZExpNode;
using ZExp = Tree<ZExpNode>;

namespace ze {
struct Cursor {
  HExp e;
  bool operator==(const Cursor&) const = default;
};
struct LamZ {
  VarName x;
  ZExp z;
  bool operator==(const LamZ&) const = default;
};
struct ApL {
  ZExp z;
  HExp arg;
  bool operator==(const ApL&) const = default;
};
struct ApR {
  HExp fun;
  ZExp z;
  bool operator==(const ApR&) const = default;
};
struct PlusL {
  ZExp z;
  HExp r;
  bool operator==(const PlusL&) const = default;
};
struct PlusR {
  HExp l;
  ZExp z;
  bool operator==(const PlusR&) const = default;
};
struct AscL {
  ZExp z;
  HTyp t;
  bool operator==(const AscL&) const = default;
};
struct AscR {
  HExp e;
  ZTyp z;
  bool operator==(const AscR&) const = default;
};
struct NonEmptyHoleZ {
  ZExp z;
  bool operator==(const NonEmptyHoleZ&) const = default;
};
struct InjZ {
  InjSide side;
  ZExp z;
  bool operator==(const InjZ&) const = default;
};
struct CaseScrut {
  ZExp z;
  VarName x;
  HExp l;
  VarName y;
  HExp r;
  bool operator==(const CaseScrut&) const = default;
};
struct CaseL {
  HExp scrut;
  VarName x;
  ZExp z;
  VarName y;
  HExp r;
  bool operator==(const CaseL&) const = default;
};
struct CaseR {
  HExp scrut;
  VarName x;
  HExp l;
  VarName y;
  ZExp z;
  bool operator==(const CaseR&) const = default;
};
}  // namespace ze

struct ZExpNode {
  std::variant<ze::Cursor, ze::LamZ, ze::ApL, ze::ApR, ze::PlusL, ze::PlusR,
               ze::AscL, ze::AscR, ze::NonEmptyHoleZ, ze::InjZ, ze::CaseScrut,
               ze::CaseL, ze::CaseR>
      v;
};

/// 1-based child indices from the root to the cursor. Asc children are
/// 1 = expression, 2 = type; Case children are 1 = scrutinee, 2/3 = branches.
/// A path may continue from an ascription's type into the type tree.
using CursorPath = std::vector<int>;

HTyp erase(const ZTyp& z);
HExp erase(const ZExp& z);

ZExp root_cursor(const HExp& e);

CursorPath cursor_path(const ZTyp& z);
CursorPath cursor_path(const ZExp& z);

std::optional<ZTyp> place_cursor(const HTyp& t, const CursorPath& path);
std::optional<ZExp> place_cursor(const HExp& e, const CursorPath& path);

/// Every cursor position in the tree, in pre-order, including positions
/// inside ascribed types.
std::vector<CursorPath> all_paths(const HTyp& t);
std::vector<CursorPath> all_paths(const HExp& e);

/// Structural audit; always 1 for a well-formed value.
int count_cursors(const ZTyp& z);
int count_cursors(const ZExp& z);

/// True when the cursor sits inside an ascribed type.
bool cursor_in_type(const ZExp& z);

/// Variables bound by lambdas and case branches enclosing the cursor,
/// outermost first.
std::vector<VarName> binders_on_path(const ZExp& z);

}  // namespace hazel
