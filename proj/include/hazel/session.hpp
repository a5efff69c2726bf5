#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hazel/action.hpp"
#include "hazel/wire.hpp"

namespace hazel {

struct HistoryEntry {
  Action action;
  ZExp z;
  HTyp t;
};

/// One edit session. The erasure of `z` synthesizes `t` under `ctx` after
/// every successful action; history replays from the initial state.
struct Session {
  std::string id;
  Ctx ctx;
  ZExp initial = ze::Cursor{mk::ehole()};
  ZExp z = ze::Cursor{mk::ehole()};
  HTyp t = mk::thole();
  std::vector<HistoryEntry> history;

  /// On success the new state is recorded; on failure nothing changes.
  Result<Synthesized> apply(const Engine& engine, const Action& a);

  /// False when there is nothing to undo.
  bool undo();

  ActionList actions() const;
};

/// The session as the client sees it, with the palette computed by trying
/// every standard candidate.
wire::Json wire_state(const Session& s, const Engine& engine);

/// In-memory sessions. Calls on different sessions may run in parallel;
/// calls on one session are serialized.
class SessionStore {
 public:
  explicit SessionStore(Engine engine = Engine{});

  const Engine& engine() const { return engine_; }

  std::string create(Ctx ctx);
  bool erase(const std::string& id);
  std::size_t size() const;

  /// Runs `f` on the session while holding its lock; nullopt for an
  /// unknown id.
  template <class F>
  auto with(const std::string& id, F&& f) -> std::optional<decltype(f(std::declval<Session&>()))> {
    std::shared_ptr<Slot> slot = find(id);
    if (!slot) return std::nullopt;
    std::lock_guard<std::mutex> lock(slot->m);
    if (slot->deleted) return std::nullopt;
    return f(slot->s);
  }

 private:
  struct Slot {
    std::mutex m;
    Session s;
    bool deleted = false;
  };

  std::shared_ptr<Slot> find(const std::string& id) const;

  Engine engine_;
  mutable std::mutex m_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::mt19937_64 ids_;
};

}  // namespace hazel
