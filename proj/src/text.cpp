#include "hazel/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace hazel {

std::string ParseError::describe() const {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ", found " << found << ")";
  }
  return os.str();
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

struct Failure {
  ParseError error;
};

[[noreturn]] void fail_at(const Token& at, std::string message,
                          std::vector<std::string> expected = {}) {
  std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
  throw Failure{ParseError{at.line, at.column, std::move(expected), std::move(found),
                           std::move(message)}};
}

std::vector<Token> lex(std::string_view src, int first_line = 1) {
  std::vector<Token> out;
  int line = first_line;
  int col = 1;
  std::size_t i = 0;
  auto bad = [&](std::string msg) {
    Token t{Tok::Sym, std::string(1, src[i]), line, col};
    fail_at(t, std::move(msg));
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    const int start_col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = [&](char next, const char* sym) {
      if (i + 1 < src.size() && src[i + 1] == next) {
        out.push_back({Tok::Sym, sym, line, start_col});
        i += 2;
        col += 2;
        return true;
      }
      return false;
    };
    switch (c) {
      case '-':
        if (!two('>', "->")) bad("expected '->'");
        continue;
      case '>':
        if (!two('|', ">|")) bad("expected '>|'");
        continue;
      case '|':
        if (!two('<', "|<")) bad("expected '|<'");
        continue;
      case '(': case ')': case '{': case '}': case '+': case ':': case ';': case '.':
      case '\\':
        out.push_back({Tok::Sym, std::string(1, c), line, start_col});
        ++i;
        ++col;
        continue;
      default:
        bad("unexpected character");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

template <class T>
struct Marked {
  T v;
  std::vector<CursorPath> cursors;  // relative to v
};

void under(int child, std::vector<CursorPath>& from, std::vector<CursorPath>& into) {
  for (auto& p : from) {
    p.insert(p.begin(), child);
    into.push_back(std::move(p));
  }
}

bool reserved(const std::string& s) { return s == "inl" || s == "inr" || s == "case"; }

class Parser {
 public:
  Parser(std::vector<Token> toks, bool allow_cursor)
      : toks_(std::move(toks)), allow_cursor_(allow_cursor) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_word(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
  const Token& next() { return toks_[pos_++]; }

  void expect_sym(const char* s) {
    if (!at_sym(s)) fail_at(peek(), "unexpected token", {std::string("'") + s + "'"});
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail_at(peek(), "unexpected trailing input", {"end of input"});
  }

  VarName ident(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || reserved(t.text)) fail_at(t, "unexpected token", {what});
    ++pos_;
    return VarName(t.text);
  }

  std::uint64_t numeral() {
    const Token& t = peek();
    if (t.kind != Tok::Number) fail_at(t, "unexpected token", {"numeral"});
    std::uint64_t n = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
      fail_at(t, "numeral does not fit in 64 bits");
    }
    ++pos_;
    return n;
  }

  const Token& open_cursor() {
    const Token& t = next();
    if (!allow_cursor_) fail_at(t, "cursor marker not allowed here");
    return t;
  }

  // types ------------------------------------------------------------------

  Marked<HTyp> typ() {
    auto l = sum_typ();
    if (!at_sym("->")) return l;
    ++pos_;
    auto r = typ();
    Marked<HTyp> out{mk::arrow(l.v, r.v), {}};
    under(1, l.cursors, out.cursors);
    under(2, r.cursors, out.cursors);
    return out;
  }

  Marked<HTyp> sum_typ() {
    auto l = atom_typ();
    if (!at_sym("+")) return l;
    ++pos_;
    auto r = sum_typ();
    Marked<HTyp> out{mk::sum(l.v, r.v), {}};
    under(1, l.cursors, out.cursors);
    under(2, r.cursors, out.cursors);
    return out;
  }

  Marked<HTyp> atom_typ() {
    if (at_word("num")) {
      ++pos_;
      return {mk::num(), {}};
    }
    if (at_sym("{")) {
      ++pos_;
      expect_sym("}");
      return {mk::thole(), {}};
    }
    if (at_sym("(")) {
      ++pos_;
      auto t = typ();
      expect_sym(")");
      return t;
    }
    if (at_sym(">|")) {
      open_cursor();
      auto t = typ();
      expect_sym("|<");
      t.cursors.push_back({});
      return t;
    }
    fail_at(peek(), "expected a type", {"'num'", "'{}'", "'('"});
  }

  // expressions ------------------------------------------------------------

  Marked<HExp> exp() {
    auto e = plus_exp();
    if (!at_sym(":")) return e;
    ++pos_;
    auto t = typ();
    Marked<HExp> out{mk::asc(e.v, t.v), {}};
    under(1, e.cursors, out.cursors);
    under(2, t.cursors, out.cursors);
    return out;
  }

  Marked<HExp> plus_exp() {
    if (at_sym("\\")) {
      ++pos_;
      VarName x = ident("binder name");
      expect_sym(".");
      auto body = plus_exp();
      Marked<HExp> out{mk::lam(x, body.v), {}};
      under(1, body.cursors, out.cursors);
      return out;
    }
    auto acc = app_exp();
    while (at_sym("+")) {
      ++pos_;
      auto r = app_exp();
      Marked<HExp> out{mk::plus(acc.v, r.v), {}};
      under(1, acc.cursors, out.cursors);
      under(2, r.cursors, out.cursors);
      acc = std::move(out);
    }
    return acc;
  }

  Marked<HExp> app_exp() {
    auto acc = atom_exp();
    while (at_sym("(")) {
      ++pos_;
      auto arg = exp();
      expect_sym(")");
      Marked<HExp> out{mk::ap(acc.v, arg.v), {}};
      under(1, acc.cursors, out.cursors);
      under(2, arg.cursors, out.cursors);
      acc = std::move(out);
    }
    return acc;
  }

  Marked<HExp> atom_exp() {
    const Token& t = peek();
    if (t.kind == Tok::Number) return {mk::lit(numeral()), {}};
    if (t.kind == Tok::Ident && (t.text == "inl" || t.text == "inr")) {
      ++pos_;
      InjSide side = t.text == "inl" ? InjSide::L : InjSide::R;
      expect_sym("(");
      auto e = exp();
      expect_sym(")");
      Marked<HExp> out{mk::inj(side, e.v), {}};
      under(1, e.cursors, out.cursors);
      return out;
    }
    if (t.kind == Tok::Ident && t.text == "case") {
      ++pos_;
      expect_sym("(");
      auto s = exp();
      expect_sym(";");
      VarName x = ident("binder name");
      expect_sym(".");
      auto l = exp();
      expect_sym(";");
      VarName y = ident("binder name");
      expect_sym(".");
      auto r = exp();
      expect_sym(")");
      Marked<HExp> out{mk::case_of(s.v, x, l.v, y, r.v), {}};
      under(1, s.cursors, out.cursors);
      under(2, l.cursors, out.cursors);
      under(3, r.cursors, out.cursors);
      return out;
    }
    if (t.kind == Tok::Ident) return {mk::var(ident("identifier")), {}};
    if (at_sym("{")) {
      ++pos_;
      if (at_sym("}")) {
        ++pos_;
        return {mk::ehole(), {}};
      }
      auto e = exp();
      expect_sym("}");
      Marked<HExp> out{mk::nehole(e.v), {}};
      under(1, e.cursors, out.cursors);
      return out;
    }
    if (at_sym("(")) {
      ++pos_;
      auto e = exp();
      expect_sym(")");
      return e;
    }
    if (at_sym(">|")) {
      open_cursor();
      auto e = exp();
      expect_sym("|<");
      e.cursors.push_back({});
      return e;
    }
    fail_at(t, "expected an expression",
            {"identifier", "numeral", "'\\'", "'{'", "'('", "'inl'", "'inr'", "'case'"});
  }

  // actions ----------------------------------------------------------------

  Action action() {
    using namespace actions;
    const Token& t = peek();
    if (at_word("move")) {
      ++pos_;
      if (at_word("parent")) {
        ++pos_;
        return move_parent();
      }
      if (at_word("child")) {
        ++pos_;
        const Token& nt = peek();
        std::uint64_t n = numeral();
        if (n < 1 || n > 3) fail_at(nt, "child index out of range", {"1", "2", "3"});
        return move_child(static_cast<int>(n));
      }
      fail_at(peek(), "unexpected token", {"'child'", "'parent'"});
    }
    if (at_word("del")) {
      ++pos_;
      return del();
    }
    if (at_word("finish")) {
      ++pos_;
      return finish();
    }
    if (at_word("construct")) {
      ++pos_;
      return construct(shape());
    }
    fail_at(t, "expected an action", {"'move'", "'del'", "'finish'", "'construct'"});
  }

  Shape shape() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      const std::string& w = t.text;
      ++pos_;
      if (w == "arrow") return shape::Arrow{};
      if (w == "num") return shape::Num{};
      if (w == "sum") return shape::Sum{};
      if (w == "asc") return shape::Asc{};
      if (w == "ap") return shape::Ap{};
      if (w == "plus") return shape::Plus{};
      if (w == "nehole") return shape::NEHole{};
      if (w == "inl") return shape::Inj{InjSide::L};
      if (w == "inr") return shape::Inj{InjSide::R};
      if (w == "var") return shape::Var{ident("variable name")};
      if (w == "lam") return shape::Lam{ident("binder name")};
      if (w == "lit") return shape::Lit{numeral()};
      if (w == "case") {
        VarName x = ident("binder name");
        VarName y = ident("binder name");
        return shape::Case{x, y};
      }
      --pos_;
    }
    fail_at(t, "unknown shape",
            {"arrow", "num", "sum", "asc", "ap", "plus", "nehole", "inl", "inr", "var", "lam",
             "lit", "case"});
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool allow_cursor_;
};

template <class F>
auto guarded(F&& f) -> Result<decltype(f()), ParseError> {
  try {
    return f();
  } catch (Failure& e) {
    return e.error;
  }
}

/// Lines with `#` comments removed; the first element of each pair is the
/// 1-based line number.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int n = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++n;
    std::string line(text.substr(start, end - start));
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.emplace_back(n, line);
    start = end + 1;
  }
  return out;
}

}  // namespace

Result<HTyp, ParseError> parse_htyp(std::string_view text) {
  return guarded([&] {
    Parser p(lex(text), false);
    auto t = p.typ();
    p.expect_end();
    return t.v;
  });
}

Result<HExp, ParseError> parse_hexp(std::string_view text) {
  return guarded([&] {
    Parser p(lex(text), false);
    auto e = p.exp();
    p.expect_end();
    return e.v;
  });
}

Result<ZExp, ParseError> parse_zexp(std::string_view text) {
  return guarded([&]() -> ZExp {
    auto toks = lex(text);
    Parser p(toks, true);
    auto e = p.exp();
    p.expect_end();
    if (e.cursors.size() != 1) {
      // Point at the second marker when there are too many, else at the start.
      const Token* at = &toks.front();
      int seen = 0;
      for (const auto& t : toks) {
        if (t.kind == Tok::Sym && t.text == ">|" && ++seen == 2) {
          at = &t;
          break;
        }
      }
      fail_at(*at, "expected exactly one cursor, found " + std::to_string(e.cursors.size()));
    }
    return *place_cursor(e.v, e.cursors.front());
  });
}

Result<Ctx, ParseError> parse_ctx(std::string_view text) {
  return guarded([&] {
    Ctx ctx;
    for (const auto& [n, line] : content_lines(text)) {
      Parser p(lex(line, n), false);
      const Token& at = p.peek();
      VarName x = p.ident("variable name");
      if (ctx.contains(x)) fail_at(at, "duplicate binding for '" + x.str() + "'");
      p.expect_sym(":");
      auto t = p.typ();
      p.expect_end();
      ctx.bind(x, t.v);
    }
    return ctx;
  });
}

Result<Action, ParseError> parse_action(std::string_view text) {
  return guarded([&] {
    Parser p(lex(text), false);
    Action a = p.action();
    p.expect_end();
    return a;
  });
}

Result<ActionList, ParseError> parse_script(std::string_view text) {
  return guarded([&] {
    ActionList out;
    for (const auto& [n, line] : content_lines(text)) {
      Parser p(lex(line, n), false);
      out.push_back(p.action());
      p.expect_end();
    }
    return out;
  });
}

// ---------------------------------------------------------------------------
// Printer

namespace {

enum class Slot { Top, AscLeft, LamBody, PlusLeft, PlusRight, AppFun };

bool fits(const HExp& e, Slot s) {
  if (e.is<ex::Asc>()) return s == Slot::Top;
  if (e.is<ex::Lam>()) return s == Slot::Top || s == Slot::AscLeft || s == Slot::LamBody;
  if (e.is<ex::Plus>()) return s != Slot::PlusRight && s != Slot::AppFun;
  return true;
}

int level(const HTyp& t) {
  if (t.is<ty::Arrow>()) return 0;
  if (t.is<ty::Sum>()) return 1;
  return 2;
}

class Printer {
 public:
  explicit Printer(const CursorPath* cursor) : cursor_(cursor) {}

  std::string out;

  void typ(const HTyp& t, int min_level, std::size_t depth, bool on_path) {
    if (on_path && depth == cursor_->size()) {
      out += ">|";
      typ(t, 0, depth, false);
      out += "|<";
      return;
    }
    const bool parens = level(t) < min_level;
    if (parens) out += "(";
    auto child = [&](int i, const HTyp& c, int lvl) {
      typ(c, lvl, depth + 1, on_path && (*cursor_)[depth] == i);
    };
    std::visit(overloaded{
                   [&](const ty::Num&) { out += "num"; },
                   [&](const ty::Hole&) { out += "{}"; },
                   [&](const ty::Arrow& a) {
                     child(1, a.dom, 1);
                     out += " -> ";
                     child(2, a.cod, 0);
                   },
                   [&](const ty::Sum& s) {
                     child(1, s.left, 2);
                     out += " + ";
                     child(2, s.right, 1);
                   },
               },
               t.get());
    if (parens) out += ")";
  }

  void exp(const HExp& e, Slot slot, std::size_t depth, bool on_path) {
    if (on_path && depth == cursor_->size()) {
      out += ">|";
      exp(e, Slot::Top, depth, false);
      out += "|<";
      return;
    }
    const bool parens = !fits(e, slot);
    if (parens) out += "(";
    auto child = [&](int i, const HExp& c, Slot s) {
      exp(c, s, depth + 1, on_path && (*cursor_)[depth] == i);
    };
    std::visit(overloaded{
                   [&](const ex::Var& n) { out += n.x.str(); },
                   [&](const ex::Lam& n) {
                     out += "\\" + n.x.str() + ".";
                     child(1, n.body, Slot::LamBody);
                   },
                   [&](const ex::Ap& n) {
                     child(1, n.fun, Slot::AppFun);
                     out += "(";
                     child(2, n.arg, Slot::Top);
                     out += ")";
                   },
                   [&](const ex::NumLit& n) { out += std::to_string(n.n); },
                   [&](const ex::Plus& n) {
                     child(1, n.l, Slot::PlusLeft);
                     out += " + ";
                     child(2, n.r, Slot::PlusRight);
                   },
                   [&](const ex::Asc& n) {
                     child(1, n.e, Slot::AscLeft);
                     out += " : ";
                     typ(n.t, 0, depth + 1, on_path && (*cursor_)[depth] == 2);
                   },
                   [&](const ex::EmptyHole&) { out += "{}"; },
                   [&](const ex::NonEmptyHole& n) {
                     out += "{";
                     child(1, n.e, Slot::Top);
                     out += "}";
                   },
                   [&](const ex::Inj& n) {
                     out += n.side == InjSide::L ? "inl(" : "inr(";
                     child(1, n.e, Slot::Top);
                     out += ")";
                   },
                   [&](const ex::Case& n) {
                     out += "case(";
                     child(1, n.scrut, Slot::Top);
                     out += "; " + n.x.str() + ".";
                     child(2, n.l, Slot::Top);
                     out += "; " + n.y.str() + ".";
                     child(3, n.r, Slot::Top);
                     out += ")";
                   },
               },
               e.get());
    if (parens) out += ")";
  }

 private:
  const CursorPath* cursor_;
};

}  // namespace

std::string print(const HTyp& t) {
  Printer p(nullptr);
  p.typ(t, 0, 0, false);
  return p.out;
}

std::string print(const HExp& e) {
  Printer p(nullptr);
  p.exp(e, Slot::Top, 0, false);
  return p.out;
}

std::string print(const ZTyp& z) {
  CursorPath path = cursor_path(z);
  Printer p(&path);
  p.typ(erase(z), 0, 0, true);
  return p.out;
}

std::string print(const ZExp& z) {
  CursorPath path = cursor_path(z);
  Printer p(&path);
  p.exp(erase(z), Slot::Top, 0, true);
  return p.out;
}

std::string print(const Action& a) {
  return std::visit(
      overloaded{
          [](const act::Move& m) -> std::string {
            if (const auto* c = std::get_if<dir::Child>(&m.d)) {
              return "move child " + std::to_string(c->n);
            }
            return "move parent";
          },
          [](const act::Del&) -> std::string { return "del"; },
          [](const act::Finish&) -> std::string { return "finish"; },
          [](const act::Construct& c) -> std::string {
            return "construct " +
                   std::visit(overloaded{
                                  [](const shape::Arrow&) -> std::string { return "arrow"; },
                                  [](const shape::Num&) -> std::string { return "num"; },
                                  [](const shape::Sum&) -> std::string { return "sum"; },
                                  [](const shape::Asc&) -> std::string { return "asc"; },
                                  [](const shape::Ap&) -> std::string { return "ap"; },
                                  [](const shape::Plus&) -> std::string { return "plus"; },
                                  [](const shape::NEHole&) -> std::string { return "nehole"; },
                                  [](const shape::Inj& i) -> std::string {
                                    return i.side == InjSide::L ? "inl" : "inr";
                                  },
                                  [](const shape::Var& v) { return "var " + v.x.str(); },
                                  [](const shape::Lam& l) { return "lam " + l.x.str(); },
                                  [](const shape::Lit& l) { return "lit " + std::to_string(l.n); },
                                  [](const shape::Case& k) {
                                    return "case " + k.x.str() + " " + k.y.str();
                                  },
                              },
                              c.s);
          },
      },
      a);
}

std::string print(const Ctx& ctx) {
  std::string out;
  for (const auto& [x, t] : ctx.bindings()) out += x.str() + " : " + print(t) + "\n";
  return out;
}

std::string print_script(const ActionList& as) {
  std::string out;
  for (const auto& a : as) out += print(a) + "\n";
  return out;
}

}  // namespace hazel
