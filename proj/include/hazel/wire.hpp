#pragma once

#include <string>

#include <json.hpp>

#include "hazel/action.hpp"
#include "hazel/metatheory.hpp"
#include "hazel/result.hpp"

// Tagged-tree JSON. Every node is an object whose "k" names its constructor
// in lower snake case; children are fields named as in the C++ structs.
// Numerals are JSON numbers. Unknown kinds and missing or extra-typed fields
// are decode errors, never skipped.
//
//   {"k":"ap","fun":{"k":"var","name":"f"},"arg":{"k":"num_lit","n":3}}

namespace hazel::wire {

using Json = nlohmann::json;

struct DecodeError {
  std::string path;  // JSON pointer to the offending value, "" for the root
  std::string message;

  std::string describe() const;
};

Json to_json(const HTyp& t);
Json to_json(const HExp& e);
Json to_json(const ZTyp& z);
Json to_json(const ZExp& z);
Json to_json(const Action& a);
Json to_json(const Ctx& ctx);
Json to_json(const ActionList& as);
Json to_json(const EditState& s);
Json to_json(const FuzzReport& r);

Result<HTyp, DecodeError> htyp_from_json(const Json& j);
Result<HExp, DecodeError> hexp_from_json(const Json& j);
Result<ZTyp, DecodeError> ztyp_from_json(const Json& j);
Result<ZExp, DecodeError> zexp_from_json(const Json& j);

/// Also accepts a string in script syntax, e.g. "construct lam x".
Result<Action, DecodeError> action_from_json(const Json& j);

/// An object mapping names to types; a type may be a tree or a string in
/// surface syntax.
Result<Ctx, DecodeError> ctx_from_json(const Json& j);

Result<ActionList, DecodeError> actions_from_json(const Json& j);
Result<EditState, DecodeError> edit_state_from_json(const Json& j);
Result<FuzzReport, DecodeError> fuzz_report_from_json(const Json& j);

}  // namespace hazel::wire
