#pragma once

#include "hazel/session.hpp"

namespace httplib {
class Server;
}

namespace hazel {

/// Registers the edit-session API on `server`:
///
///   POST   /sessions               {ctx?}     -> 201 {id, state}
///   GET    /sessions/:id                      -> 200 state
///   POST   /sessions/:id/actions   {action}   -> 200 state | 409 {error, kind, action}
///   POST   /sessions/:id/undo                 -> 200 state | 409 {error}
///   GET    /sessions/:id/history              -> 200 [action, ...]
///   DELETE /sessions/:id                      -> 204
///
/// Unknown sessions are 404; unparseable or ill-shaped bodies are 400.
/// `store` must outlive the server.
void install_routes(httplib::Server& server, SessionStore& store);

}  // namespace hazel
