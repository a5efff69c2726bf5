#include "hazel/wire.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "hazel/text.hpp"

namespace hazel::wire {

std::string DecodeError::describe() const {
  return (path.empty() ? std::string("at root") : "at " + path) + ": " + message;
}

// ---------------------------------------------------------------------------
// Encoding

namespace {

const char* side_name(InjSide s) { return s == InjSide::L ? "L" : "R"; }

Json node(const char* k) { return Json{{"k", k}}; }

}  // namespace

Json to_json(const HTyp& t) {
  return std::visit(overloaded{
                        [](const ty::Num&) { return node("num"); },
                        [](const ty::Hole&) { return node("hole"); },
                        [](const ty::Arrow& a) {
                          Json j = node("arrow");
                          j["dom"] = to_json(a.dom);
                          j["cod"] = to_json(a.cod);
                          return j;
                        },
                        [](const ty::Sum& s) {
                          Json j = node("sum");
                          j["left"] = to_json(s.left);
                          j["right"] = to_json(s.right);
                          return j;
                        },
                    },
                    t.get());
}

Json to_json(const HExp& e) {
  return std::visit(overloaded{
                        [](const ex::Var& n) {
                          Json j = node("var");
                          j["name"] = n.x.str();
                          return j;
                        },
                        [](const ex::Lam& n) {
                          Json j = node("lam");
                          j["x"] = n.x.str();
                          j["body"] = to_json(n.body);
                          return j;
                        },
                        [](const ex::Ap& n) {
                          Json j = node("ap");
                          j["fun"] = to_json(n.fun);
                          j["arg"] = to_json(n.arg);
                          return j;
                        },
                        [](const ex::NumLit& n) {
                          Json j = node("num_lit");
                          j["n"] = n.n;
                          return j;
                        },
                        [](const ex::Plus& n) {
                          Json j = node("plus");
                          j["l"] = to_json(n.l);
                          j["r"] = to_json(n.r);
                          return j;
                        },
                        [](const ex::Asc& n) {
                          Json j = node("asc");
                          j["e"] = to_json(n.e);
                          j["t"] = to_json(n.t);
                          return j;
                        },
                        [](const ex::EmptyHole&) { return node("empty_hole"); },
                        [](const ex::NonEmptyHole& n) {
                          Json j = node("nonempty_hole");
                          j["e"] = to_json(n.e);
                          return j;
                        },
                        [](const ex::Inj& n) {
                          Json j = node("inj");
                          j["side"] = side_name(n.side);
                          j["e"] = to_json(n.e);
                          return j;
                        },
                        [](const ex::Case& n) {
                          Json j = node("case");
                          j["scrut"] = to_json(n.scrut);
                          j["x"] = n.x.str();
                          j["l"] = to_json(n.l);
                          j["y"] = n.y.str();
                          j["r"] = to_json(n.r);
                          return j;
                        },
                    },
                    e.get());
}

Json to_json(const ZTyp& z) {
  return std::visit(overloaded{
                        [](const zt::Cursor& n) {
                          Json j = node("cursor");
                          j["t"] = to_json(n.t);
                          return j;
                        },
                        [](const zt::ArrowL& n) {
                          Json j = node("arrow_l");
                          j["z"] = to_json(n.z);
                          j["cod"] = to_json(n.cod);
                          return j;
                        },
                        [](const zt::ArrowR& n) {
                          Json j = node("arrow_r");
                          j["dom"] = to_json(n.dom);
                          j["z"] = to_json(n.z);
                          return j;
                        },
                        [](const zt::SumL& n) {
                          Json j = node("sum_l");
                          j["z"] = to_json(n.z);
                          j["right"] = to_json(n.right);
                          return j;
                        },
                        [](const zt::SumR& n) {
                          Json j = node("sum_r");
                          j["left"] = to_json(n.left);
                          j["z"] = to_json(n.z);
                          return j;
                        },
                    },
                    z.get());
}

Json to_json(const ZExp& z) {
  return std::visit(overloaded{
                        [](const ze::Cursor& n) {
                          Json j = node("cursor");
                          j["e"] = to_json(n.e);
                          return j;
                        },
                        [](const ze::LamZ& n) {
                          Json j = node("lam_z");
                          j["x"] = n.x.str();
                          j["z"] = to_json(n.z);
                          return j;
                        },
                        [](const ze::ApL& n) {
                          Json j = node("ap_l");
                          j["z"] = to_json(n.z);
                          j["arg"] = to_json(n.arg);
                          return j;
                        },
                        [](const ze::ApR& n) {
                          Json j = node("ap_r");
                          j["fun"] = to_json(n.fun);
                          j["z"] = to_json(n.z);
                          return j;
                        },
                        [](const ze::PlusL& n) {
                          Json j = node("plus_l");
                          j["z"] = to_json(n.z);
                          j["r"] = to_json(n.r);
                          return j;
                        },
                        [](const ze::PlusR& n) {
                          Json j = node("plus_r");
                          j["l"] = to_json(n.l);
                          j["z"] = to_json(n.z);
                          return j;
                        },
                        [](const ze::AscL& n) {
                          Json j = node("asc_l");
                          j["z"] = to_json(n.z);
                          j["t"] = to_json(n.t);
                          return j;
                        },
                        [](const ze::AscR& n) {
                          Json j = node("asc_r");
                          j["e"] = to_json(n.e);
                          j["z"] = to_json(n.z);
                          return j;
                        },
                        [](const ze::NonEmptyHoleZ& n) {
                          Json j = node("nonempty_hole_z");
                          j["z"] = to_json(n.z);
                          return j;
                        },
                        [](const ze::InjZ& n) {
                          Json j = node("inj_z");
                          j["side"] = side_name(n.side);
                          j["z"] = to_json(n.z);
                          return j;
                        },
                        [](const ze::CaseScrut& n) {
                          Json j = node("case_scrut");
                          j["z"] = to_json(n.z);
                          j["x"] = n.x.str();
                          j["l"] = to_json(n.l);
                          j["y"] = n.y.str();
                          j["r"] = to_json(n.r);
                          return j;
                        },
                        [](const ze::CaseL& n) {
                          Json j = node("case_l");
                          j["scrut"] = to_json(n.scrut);
                          j["x"] = n.x.str();
                          j["z"] = to_json(n.z);
                          j["y"] = n.y.str();
                          j["r"] = to_json(n.r);
                          return j;
                        },
                        [](const ze::CaseR& n) {
                          Json j = node("case_r");
                          j["scrut"] = to_json(n.scrut);
                          j["x"] = n.x.str();
                          j["l"] = to_json(n.l);
                          j["y"] = n.y.str();
                          j["z"] = to_json(n.z);
                          return j;
                        },
                    },
                    z.get());
}

namespace {

Json shape_json(const Shape& s) {
  return std::visit(overloaded{
                        [](const shape::Arrow&) { return node("arrow"); },
                        [](const shape::Num&) { return node("num"); },
                        [](const shape::Sum&) { return node("sum"); },
                        [](const shape::Asc&) { return node("asc"); },
                        [](const shape::Var& v) {
                          Json j = node("var");
                          j["name"] = v.x.str();
                          return j;
                        },
                        [](const shape::Lam& l) {
                          Json j = node("lam");
                          j["x"] = l.x.str();
                          return j;
                        },
                        [](const shape::Ap&) { return node("ap"); },
                        [](const shape::Lit& l) {
                          Json j = node("lit");
                          j["n"] = l.n;
                          return j;
                        },
                        [](const shape::Plus&) { return node("plus"); },
                        [](const shape::Inj& i) {
                          Json j = node("inj");
                          j["side"] = side_name(i.side);
                          return j;
                        },
                        [](const shape::Case& c) {
                          Json j = node("case");
                          j["x"] = c.x.str();
                          j["y"] = c.y.str();
                          return j;
                        },
                        [](const shape::NEHole&) { return node("nehole"); },
                    },
                    s);
}

}  // namespace

Json to_json(const Action& a) {
  return std::visit(overloaded{
                        [](const act::Move& m) {
                          Json j = node("move");
                          if (const auto* c = std::get_if<dir::Child>(&m.d)) {
                            j["dir"] = node("child");
                            j["dir"]["n"] = c->n;
                          } else {
                            j["dir"] = node("parent");
                          }
                          return j;
                        },
                        [](const act::Construct& c) {
                          Json j = node("construct");
                          j["shape"] = shape_json(c.s);
                          return j;
                        },
                        [](const act::Del&) { return node("del"); },
                        [](const act::Finish&) { return node("finish"); },
                    },
                    a);
}

Json to_json(const Ctx& ctx) {
  Json j = Json::object();
  for (const auto& [x, t] : ctx.bindings()) j[x.str()] = to_json(t);
  return j;
}

Json to_json(const ActionList& as) {
  Json j = Json::array();
  for (const auto& a : as) j.push_back(to_json(a));
  return j;
}

Json to_json(const EditState& s) {
  return Json{{"ctx", to_json(s.ctx)},
              {"state", to_json(s.z)},
              {"type", to_json(s.t)},
              {"analytic", s.analytic},
              {"printed", print(s.z)}};
}

Json to_json(const FuzzReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"property", f.property},
                            {"index", f.index},
                            {"detail", f.detail},
                            {"initial", to_json(f.initial)},
                            {"actions", to_json(f.actions)}});
  }
  return Json{{"cases_run", r.cases_run},
              {"checks_run", r.checks_run},
              {"ok", r.ok()},
              {"failures", failures}};
}

// ---------------------------------------------------------------------------
// Decoding

namespace {

struct Bad {
  DecodeError error;
};

[[noreturn]] void bad(const std::string& path, std::string message) {
  throw Bad{DecodeError{path, std::move(message)}};
}

/// A JSON value together with its pointer from the document root.
struct At {
  const Json& j;
  std::string path;

  At operator[](const char* key) const {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
    return At{*it, path + "/" + key};
  }

  At operator[](std::size_t i) const { return At{j[i], path + "/" + std::to_string(i)}; }

  const std::string& str() const {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get_ref<const std::string&>();
  }

  std::uint64_t u64() const {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
    bad(path, "expected a non-negative integer");
  }

  bool boolean() const {
    if (!j.is_boolean()) bad(path, "expected a boolean");
    return j.get<bool>();
  }

  VarName name() const {
    const std::string& s = str();
    if (!VarName::valid(s)) bad(path, "invalid variable name \"" + s + "\"");
    return VarName(s);
  }

  InjSide side() const {
    const std::string& s = str();
    if (s == "L") return InjSide::L;
    if (s == "R") return InjSide::R;
    bad(path, "expected \"L\" or \"R\"");
  }

  const Json& array() const {
    if (!j.is_array()) bad(path, "expected an array");
    return j;
  }

};

using Schema = std::map<std::string, std::vector<std::string>>;

/// The node's kind, after checking that the kind is known and that every
/// field belongs to it.
std::string kind_in(const At& at, const Schema& schema) {
  const std::string k = at["k"].str();
  auto it = schema.find(k);
  if (it == schema.end()) bad(at.path + "/k", "unknown kind \"" + k + "\"");
  for (const auto& [key, _] : at.j.items()) {
    if (key != "k" && std::find(it->second.begin(), it->second.end(), key) == it->second.end()) {
      bad(at.path, "unexpected field \"" + key + "\" for kind \"" + k + "\"");
    }
  }
  return k;
}

const Schema kHTyp = {{"num", {}}, {"hole", {}}, {"arrow", {"dom", "cod"}}, {"sum", {"left", "right"}}};

const Schema kHExp = {
    {"var", {"name"}},      {"lam", {"x", "body"}},        {"ap", {"fun", "arg"}},
    {"num_lit", {"n"}},     {"plus", {"l", "r"}},          {"asc", {"e", "t"}},
    {"empty_hole", {}},     {"nonempty_hole", {"e"}},      {"inj", {"side", "e"}},
    {"case", {"scrut", "x", "l", "y", "r"}},
};

const Schema kZTyp = {{"cursor", {"t"}},
                      {"arrow_l", {"z", "cod"}},
                      {"arrow_r", {"dom", "z"}},
                      {"sum_l", {"z", "right"}},
                      {"sum_r", {"left", "z"}}};

const Schema kZExp = {
    {"cursor", {"e"}},          {"lam_z", {"x", "z"}},   {"ap_l", {"z", "arg"}},
    {"ap_r", {"fun", "z"}},     {"plus_l", {"z", "r"}},  {"plus_r", {"l", "z"}},
    {"asc_l", {"z", "t"}},      {"asc_r", {"e", "z"}},   {"nonempty_hole_z", {"z"}},
    {"inj_z", {"side", "z"}},   {"case_scrut", {"z", "x", "l", "y", "r"}},
    {"case_l", {"scrut", "x", "z", "y", "r"}},           {"case_r", {"scrut", "x", "l", "y", "z"}},
};

const Schema kShape = {{"arrow", {}},  {"num", {}},      {"sum", {}},    {"asc", {}},
                       {"ap", {}},     {"plus", {}},     {"nehole", {}}, {"var", {"name"}},
                       {"lam", {"x"}}, {"lit", {"n"}},   {"inj", {"side"}},
                       {"case", {"x", "y"}}};

const Schema kAction = {{"move", {"dir"}}, {"construct", {"shape"}}, {"del", {}}, {"finish", {}}};
const Schema kDir = {{"parent", {}}, {"child", {"n"}}};

HTyp dec_htyp(const At& at) {
  const std::string k = kind_in(at, kHTyp);
  if (k == "num") return mk::num();
  if (k == "hole") return mk::thole();
  if (k == "arrow") return mk::arrow(dec_htyp(at["dom"]), dec_htyp(at["cod"]));
  if (k == "sum") {
    return mk::sum(dec_htyp(at["left"]), dec_htyp(at["right"]));
  }
  bad(at.path, "kind \"" + k + "\" has no decoder");
}

HExp dec_hexp(const At& at) {
  const std::string k = kind_in(at, kHExp);
  if (k == "var") return mk::var(at["name"].name());
  if (k == "lam") return mk::lam(at["x"].name(), dec_hexp(at["body"]));
  if (k == "ap") return mk::ap(dec_hexp(at["fun"]), dec_hexp(at["arg"]));
  if (k == "num_lit") return mk::lit(at["n"].u64());
  if (k == "plus") return mk::plus(dec_hexp(at["l"]), dec_hexp(at["r"]));
  if (k == "asc") return mk::asc(dec_hexp(at["e"]), dec_htyp(at["t"]));
  if (k == "empty_hole") return mk::ehole();
  if (k == "nonempty_hole") return mk::nehole(dec_hexp(at["e"]));
  if (k == "inj") return mk::inj(at["side"].side(), dec_hexp(at["e"]));
  if (k == "case") {
    return mk::case_of(dec_hexp(at["scrut"]), at["x"].name(), dec_hexp(at["l"]), at["y"].name(),
                       dec_hexp(at["r"]));
  }
  bad(at.path, "kind \"" + k + "\" has no decoder");
}

ZTyp dec_ztyp(const At& at) {
  const std::string k = kind_in(at, kZTyp);
  if (k == "cursor") return ZTyp{zt::Cursor{dec_htyp(at["t"])}};
  if (k == "arrow_l") {
    return zt::ArrowL{dec_ztyp(at["z"]), dec_htyp(at["cod"])};
  }
  if (k == "arrow_r") {
    return zt::ArrowR{dec_htyp(at["dom"]), dec_ztyp(at["z"])};
  }
  if (k == "sum_l") {
    return zt::SumL{dec_ztyp(at["z"]), dec_htyp(at["right"])};
  }
  if (k == "sum_r") {
    return zt::SumR{dec_htyp(at["left"]), dec_ztyp(at["z"])};
  }
  bad(at.path, "kind \"" + k + "\" has no decoder");
}

ZExp dec_zexp(const At& at) {
  const std::string k = kind_in(at, kZExp);
  if (k == "cursor") return ZExp{ze::Cursor{dec_hexp(at["e"])}};
  if (k == "lam_z") return ZExp{ze::LamZ{at["x"].name(), dec_zexp(at["z"])}};
  if (k == "ap_l") return ZExp{ze::ApL{dec_zexp(at["z"]), dec_hexp(at["arg"])}};
  if (k == "ap_r") return ZExp{ze::ApR{dec_hexp(at["fun"]), dec_zexp(at["z"])}};
  if (k == "plus_l") return ZExp{ze::PlusL{dec_zexp(at["z"]), dec_hexp(at["r"])}};
  if (k == "plus_r") return ZExp{ze::PlusR{dec_hexp(at["l"]), dec_zexp(at["z"])}};
  if (k == "asc_l") return ZExp{ze::AscL{dec_zexp(at["z"]), dec_htyp(at["t"])}};
  if (k == "asc_r") return ZExp{ze::AscR{dec_hexp(at["e"]), dec_ztyp(at["z"])}};
  if (k == "nonempty_hole_z") return ZExp{ze::NonEmptyHoleZ{dec_zexp(at["z"])}};
  if (k == "inj_z") {
    return ze::InjZ{at["side"].side(), dec_zexp(at["z"])};
  }
  if (k == "case_scrut") {
    return ze::CaseScrut{dec_zexp(at["z"]), at["x"].name(), dec_hexp(at["l"]), at["y"].name(),
                         dec_hexp(at["r"])};
  }
  if (k == "case_l") {
    return ze::CaseL{dec_hexp(at["scrut"]), at["x"].name(), dec_zexp(at["z"]), at["y"].name(),
                     dec_hexp(at["r"])};
  }
  if (k == "case_r") {
    return ze::CaseR{dec_hexp(at["scrut"]), at["x"].name(), dec_hexp(at["l"]), at["y"].name(),
                     dec_zexp(at["z"])};
  }
  bad(at.path, "kind \"" + k + "\" has no decoder");
}

Shape dec_shape(const At& at) {
  const std::string k = kind_in(at, kShape);
  if (k == "arrow") return shape::Arrow{};
  if (k == "num") return shape::Num{};
  if (k == "sum") return shape::Sum{};
  if (k == "asc") return shape::Asc{};
  if (k == "ap") return shape::Ap{};
  if (k == "plus") return shape::Plus{};
  if (k == "nehole") return shape::NEHole{};
  if (k == "var") return shape::Var{at["name"].name()};
  if (k == "lam") return shape::Lam{at["x"].name()};
  if (k == "lit") return shape::Lit{at["n"].u64()};
  if (k == "inj") return shape::Inj{at["side"].side()};
  if (k == "case") return shape::Case{at["x"].name(), at["y"].name()};
  bad(at.path, "kind \"" + k + "\" has no decoder");
}

Action dec_action(const At& at) {
  if (at.j.is_string()) {
    auto r = parse_action(at.j.get<std::string>());
    if (!r) bad(at.path, r.error().describe());
    return *r;
  }
  const std::string k = kind_in(at, kAction);
  if (k == "move") {
    const At d = at["dir"];
    if (kind_in(d, kDir) == "parent") return actions::move_parent();
    const std::uint64_t n = d["n"].u64();
    if (n < 1 || n > 3) bad(d.path + "/n", "child index must be 1, 2 or 3");
    return actions::move_child(static_cast<int>(n));
  }
  if (k == "construct") return actions::construct(dec_shape(at["shape"]));
  if (k == "del") return actions::del();
  if (k == "finish") return actions::finish();
  bad(at.path, "kind \"" + k + "\" has no decoder");
}

HTyp dec_ctx_type(const At& at) {
  if (at.j.is_string()) {
    auto r = parse_htyp(at.j.get<std::string>());
    if (!r) bad(at.path, r.error().describe());
    return *r;
  }
  return dec_htyp(at);
}

Ctx dec_ctx(const At& at) {
  if (!at.j.is_object()) bad(at.path, "expected an object");
  Ctx ctx;
  for (const auto& [key, value] : at.j.items()) {
    const At v{value, at.path + "/" + key};
    if (!VarName::valid(key)) bad(v.path, "invalid variable name \"" + key + "\"");
    ctx.bind(VarName(key), dec_ctx_type(v));
  }
  return ctx;
}

ActionList dec_actions(const At& at) {
  ActionList out;
  for (std::size_t i = 0; i < at.array().size(); ++i) out.push_back(dec_action(at[i]));
  return out;
}

EditState dec_edit_state(const At& at) {
  EditState s;
  s.ctx = dec_ctx(at["ctx"]);
  s.z = dec_zexp(at["state"]);
  s.t = dec_htyp(at["type"]);
  s.analytic = at["analytic"].boolean();
  return s;
}

template <class F>
auto guarded(const Json& j, F f) -> Result<decltype(f(At{j, ""})), DecodeError> {
  try {
    return f(At{j, ""});
  } catch (Bad& b) {
    return b.error;
  }
}

}  // namespace

Result<HTyp, DecodeError> htyp_from_json(const Json& j) { return guarded(j, dec_htyp); }
Result<HExp, DecodeError> hexp_from_json(const Json& j) { return guarded(j, dec_hexp); }
Result<ZTyp, DecodeError> ztyp_from_json(const Json& j) { return guarded(j, dec_ztyp); }
Result<ZExp, DecodeError> zexp_from_json(const Json& j) { return guarded(j, dec_zexp); }
Result<Action, DecodeError> action_from_json(const Json& j) { return guarded(j, dec_action); }
Result<Ctx, DecodeError> ctx_from_json(const Json& j) { return guarded(j, dec_ctx); }
Result<ActionList, DecodeError> actions_from_json(const Json& j) { return guarded(j, dec_actions); }

Result<EditState, DecodeError> edit_state_from_json(const Json& j) {
  return guarded(j, dec_edit_state);
}

Result<FuzzReport, DecodeError> fuzz_report_from_json(const Json& j) {
  return guarded(j, [](const At& at) {
    FuzzReport r;
    r.cases_run = at["cases_run"].u64();
    r.checks_run = at["checks_run"].u64();
    const At fs = at["failures"];
    for (std::size_t i = 0; i < fs.array().size(); ++i) {
      const At f = fs[i];
      r.failures.push_back(FuzzFailure{dec_edit_state(f["initial"]), dec_actions(f["actions"]),
                                       f["property"].str(), f["index"].u64(), f["detail"].str()});
    }
    if (at["ok"].boolean() != r.ok()) bad(at.path + "/ok", "disagrees with the failure list");
    return r;
  });
}

}  // namespace hazel::wire
