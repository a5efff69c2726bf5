#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hazel/action.hpp"
#include "hazel/result.hpp"

// ASCII surface syntax.
//
//   types  t ::= num | {} | t -> t | t + t | (t)
//   exps   e ::= x | \x.e | e(e) | n | e + e | e : t | {} | {e}
//              | inl(e) | inr(e) | case(e; x.e; y.e) | (e)
//   cursor     >| e |<   or   >| t |<
//
// `+` binds tighter than `->` on types; both are right-associative.
// On expressions application binds tightest, then left-associative `+`,
// then non-associative `:`. A lambda body extends as far as a `+` chain.

namespace hazel {

struct ParseError {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::vector<std::string> expected;
  std::string found;
  std::string message;

  /// "line:col: message (expected ..., found ...)"
  std::string describe() const;
};

Result<HTyp, ParseError> parse_htyp(std::string_view text);
Result<HExp, ParseError> parse_hexp(std::string_view text);
Result<ZExp, ParseError> parse_zexp(std::string_view text);
Result<Ctx, ParseError> parse_ctx(std::string_view text);
Result<Action, ParseError> parse_action(std::string_view text);
Result<ActionList, ParseError> parse_script(std::string_view text);

std::string print(const HTyp& t);
std::string print(const HExp& e);
std::string print(const ZTyp& z);
std::string print(const ZExp& z);
std::string print(const Action& a);
std::string print(const Ctx& ctx);
std::string print_script(const ActionList& as);

}  // namespace hazel
