#include "hazel/session.hpp"

#include <cstdio>
#include <stdexcept>

#include "hazel/text.hpp"

namespace hazel {

Result<Synthesized> Session::apply(const Engine& engine, const Action& a) {
  auto r = engine.perform_syn(ctx, z, t, a);
  if (!r) return r;
  auto check = synthesize(ctx, erase(r->z));
  if (!check || !(*check == r->t)) {
    throw std::logic_error("session invariant broken by " + print(a) + ": " + print(r->z));
  }
  history.push_back(HistoryEntry{a, r->z, r->t});
  z = r->z;
  t = r->t;
  return r;
}

bool Session::undo() {
  if (history.empty()) return false;
  history.pop_back();
  if (history.empty()) {
    z = initial;
    t = *synthesize(ctx, erase(initial));
  } else {
    z = history.back().z;
    t = history.back().t;
  }
  return true;
}

ActionList Session::actions() const {
  ActionList out;
  for (const auto& h : history) out.push_back(h.action);
  return out;
}

wire::Json wire_state(const Session& s, const Engine& engine) {
  wire::Json enabled = wire::Json::array();
  for (const auto& [a, ok] : enabled_actions(s.ctx, s.z, s.t, standard_candidates(s.ctx, s.z), engine)) {
    enabled.push_back({{"action", wire::to_json(a)}, {"label", print(a)}, {"enabled", ok}});
  }
  return {
      {"id", s.id},
      {"ctx", wire::to_json(s.ctx)},
      {"state", wire::to_json(s.z)},
      {"type", wire::to_json(s.t)},
      {"printed", print(s.z)},
      {"printed_type", print(s.t)},
      {"cursor", cursor_path(s.z)},
      {"history_length", s.history.size()},
      {"enabled", enabled},
  };
}

SessionStore::SessionStore(Engine engine) : engine_(engine), ids_(std::random_device{}()) {}

std::string SessionStore::create(Ctx ctx) {
  auto slot = std::make_shared<Slot>();
  slot->s.ctx = std::move(ctx);
  std::lock_guard<std::mutex> lock(m_);
  std::string id;
  do {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(ids_()));
    id = buf;
  } while (sessions_.count(id));
  slot->s.id = id;
  sessions_.emplace(id, std::move(slot));
  return id;
}

bool SessionStore::erase(const std::string& id) {
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard<std::mutex> lock(m_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return false;
    slot = it->second;
    sessions_.erase(it);
  }
  // A request already holding the slot finishes first; later ones see it gone.
  std::lock_guard<std::mutex> lock(slot->m);
  slot->deleted = true;
  return true;
}

std::size_t SessionStore::size() const {
  std::lock_guard<std::mutex> lock(m_);
  return sessions_.size();
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) const {
  std::lock_guard<std::mutex> lock(m_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

}  // namespace hazel
