#include "hazel/server.hpp"

#include <httplib.h>

#include "hazel/text.hpp"

namespace hazel {

namespace {

using wire::Json;

constexpr const char* kJson = "application/json";

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void error(httplib::Response& res, int status, const std::string& message) {
  reply(res, status, Json{{"error", message}});
}

void no_session(httplib::Response& res, const std::string& id) {
  error(res, 404, "no session " + id);
}

/// Parses a request body that must be a JSON object; an empty body counts
/// as {} when `allow_empty` is set.
std::optional<Json> body_object(const httplib::Request& req, httplib::Response& res,
                                bool allow_empty) {
  if (req.body.empty() && allow_empty) return Json::object();
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded()) {
    error(res, 400, "malformed JSON");
    return std::nullopt;
  }
  if (!j.is_object()) {
    error(res, 400, "expected a JSON object");
    return std::nullopt;
  }
  return j;
}

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
  // The browser companion may be served from another origin.
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
    auto body = body_object(req, res, true);
    if (!body) return;
    Ctx ctx;
    if (auto it = body->find("ctx"); it != body->end()) {
      auto decoded = wire::ctx_from_json(*it);
      if (!decoded) return error(res, 400, "ctx " + decoded.error().describe());
      ctx = *decoded;
    }
    const std::string id = store.create(ctx);
    auto state = store.with(id, [&](Session& s) { return wire_state(s, store.engine()); });
    if (!state) return no_session(res, id);  // deleted concurrently
    reply(res, 201, Json{{"id", id}, {"state", *state}});
  });

  server.Get("/sessions/:id", [&store](const httplib::Request& req, httplib::Response& res) {
    const std::string& id = req.path_params.at("id");
    auto state = store.with(id, [&](Session& s) { return wire_state(s, store.engine()); });
    if (!state) return no_session(res, id);
    reply(res, 200, *state);
  });

  server.Post("/sessions/:id/actions", [&store](const httplib::Request& req,
                                                httplib::Response& res) {
    const std::string& id = req.path_params.at("id");
    auto body = body_object(req, res, false);
    if (!body) return;
    auto it = body->find("action");
    if (it == body->end()) return error(res, 400, "missing field \"action\"");
    auto action = wire::action_from_json(*it);
    if (!action) return error(res, 400, "action " + action.error().describe());

    auto outcome = store.with(id, [&](Session& s) -> std::pair<int, Json> {
      auto r = s.apply(store.engine(), *action);
      if (!r) {
        return {409, Json{{"error", r.error().message()},
                          {"kind", kind_name(r.error().kind)},
                          {"action", wire::to_json(*action)}}};
      }
      return {200, wire_state(s, store.engine())};
    });
    if (!outcome) return no_session(res, id);
    reply(res, outcome->first, outcome->second);
  });

  server.Post("/sessions/:id/undo", [&store](const httplib::Request& req, httplib::Response& res) {
    const std::string& id = req.path_params.at("id");
    auto outcome = store.with(id, [&](Session& s) -> std::pair<int, Json> {
      if (!s.undo()) return {409, Json{{"error", "nothing to undo"}}};
      return {200, wire_state(s, store.engine())};
    });
    if (!outcome) return no_session(res, id);
    reply(res, outcome->first, outcome->second);
  });

  server.Get("/sessions/:id/history", [&store](const httplib::Request& req,
                                               httplib::Response& res) {
    const std::string& id = req.path_params.at("id");
    auto history = store.with(id, [](Session& s) { return wire::to_json(s.actions()); });
    if (!history) return no_session(res, id);
    reply(res, 200, *history);
  });

  server.Delete("/sessions/:id", [&store](const httplib::Request& req, httplib::Response& res) {
    const std::string& id = req.path_params.at("id");
    if (!store.erase(id)) return no_session(res, id);
    res.status = 204;
  });

  server.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                                  std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    error(res, 500, what);
  });
}

}  // namespace hazel
