// Runs the acceptance checks for the engine, CLI and service and prints one
// PASS/FAIL line per check. Exit status is the number of failed checks.
//
//   acceptance FIXTURE_DIR

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "hazel/cli.hpp"
#include "hazel/metatheory.hpp"
#include "hazel/server.hpp"
#include "hazel/text.hpp"

using namespace hazel;
using wire::Json;

namespace {

std::string fixtures;

struct Verdict {
  bool pass;
  std::string note;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

/// Replays a fixture script and compares every state structurally with the
/// parsed trace file.
Verdict golden(const std::string& base, const Ctx& ctx, const HTyp& final_type) {
  const auto script = parse_script(slurp(fixtures + "/" + base + ".hza"));
  if (!script) return {false, script.error().describe()};
  std::vector<ZExp> expected;
  for (const auto& l : lines(slurp(fixtures + "/" + base + ".trace"))) {
    auto z = parse_zexp(l);
    if (!z) return {false, "trace: " + z.error().describe()};
    expected.push_back(*z);
  }
  if (expected.size() != script->size() + 1) return {false, "trace length mismatch"};

  const Engine engine;
  ZExp z = ze::Cursor{mk::ehole()};
  HTyp t = mk::thole();
  if (z != expected[0]) return {false, "initial state differs"};
  for (std::size_t i = 0; i < script->size(); ++i) {
    auto r = engine.perform_syn(ctx, z, t, (*script)[i]);
    if (!r) return {false, "action " + std::to_string(i) + " rejected: " + r.error().message()};
    z = r->z;
    t = r->t;
    if (z != expected[i + 1]) {
      return {false, "state " + std::to_string(i + 1) + " is " + print(z) + ", expected " +
                         print(expected[i + 1])};
    }
  }
  if (t != final_type) return {false, "final type " + print(t)};
  return {true, std::to_string(expected.size()) + " states, final type " + print(t)};
}

Verdict from_report(const FuzzReport& r, std::size_t min_checks = 0) {
  std::ostringstream note;
  note << r.cases_run << " cases, " << r.checks_run << " checks, " << r.failures.size()
       << " violations";
  if (!r.ok()) {
    const auto& f = r.failures.front();
    note << "; first: " << f.property << " at step " << f.index << ": " << f.detail;
  }
  return {r.ok() && r.checks_run >= min_checks, note.str()};
}

Verdict complement() {
  const auto types = enumerate_types(3);
  std::size_t pairs = 0;
  for (const auto& a : types) {
    if (!consistent(a, a)) return {false, "not reflexive at " + print(a)};
    for (const auto& b : types) {
      ++pairs;
      if (inconsistent(a, b) == consistent(a, b)) {
        return {false, "complement fails at " + print(a) + " / " + print(b)};
      }
      if (consistent(a, b) != consistent(b, a)) {
        return {false, "not symmetric at " + print(a) + " / " + print(b)};
      }
    }
  }
  const HTyp arrow = mk::arrow(mk::num(), mk::num());
  const bool witness = consistent(mk::num(), mk::thole()) && consistent(mk::thole(), arrow) &&
                       !consistent(mk::num(), arrow);
  if (!witness) return {false, "num ~ {} ~ num -> num transitivity counterexample not confirmed"};
  return {true, std::to_string(types.size()) + " types, " + std::to_string(pairs) + " pairs"};
}

Verdict mutations() {
  using Suite = std::function<FuzzReport(const Engine&)>;
  GenConfig cfg;
  cfg.seed = 7;
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"sensibility", [&](const Engine& e) { return fuzz_sensibility(cfg, 2000, 50, e); }},
      {"movement", [&](const Engine& e) { return fuzz_move_invariance(cfg, 2000, 4, e); }},
      {"reachability", [&](const Engine& e) { return check_reachability(cfg, 1000, e); }},
      {"constructability", [&](const Engine& e) { return check_constructability(cfg, 1000, e); }},
      {"determinism", [&](const Engine& e) { return fuzz_determinism(cfg, 1000, e); }},
  };
  bool all = true;
  std::ostringstream note;
  for (Mutation m : all_mutations()) {
    const Engine engine(m);
    std::string caught_by;
    for (const auto& [name, run] : suites) {
      if (!run(engine).ok()) {
        caught_by = name;
        break;
      }
    }
    if (caught_by.empty()) all = false;
    note << (note.tellp() ? ", " : "") << mutation_name(m) << " -> "
         << (caught_by.empty() ? "NOT CAUGHT" : caught_by);
  }
  return {all, note.str()};
}

Verdict service() {
  SessionStore store;
  httplib::Server server;
  install_routes(server, store);
  const int port = server.bind_to_any_port("127.0.0.1");
  if (port <= 0) return {false, "cannot bind"};
  std::thread thread([&] { server.listen_after_bind(); });
  struct Stop {
    httplib::Server& s;
    std::thread& t;
    ~Stop() {
      s.stop();
      t.join();
    }
  } stop{server, thread};
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);

  auto post = [&](const std::string& path, const Json& body) -> std::pair<int, Json> {
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res) return {0, Json()};
    return {res->status, Json::parse(res->body, nullptr, false)};
  };

  Verdict v{true, ""};
  auto fail = [&](const std::string& why) {
    if (v.pass) v = {false, why};
  };

  struct Case {
    std::string base;
    Json ctx;
  };
  for (const Case& c : {Case{"increment_lambda", Json::object()},
                        Case{"increment_twice", Json{{"incr", "num -> num"}}}}) {
    cli::ReplayOptions o;
    o.script = fixtures + "/" + c.base + ".hza";
    if (!c.ctx.empty()) o.ctx = "@" + fixtures + "/" + c.base + ".hzctx";
    o.json = true;
    std::ostringstream out, err;
    if (cli::replay(o, out, err) != cli::exit_code::ok) {
      fail(c.base + ": CLI replay failed: " + err.str());
      continue;
    }
    const Json expected = Json::parse(out.str());

    auto [status, created] = post("/sessions", Json{{"ctx", c.ctx}});
    if (status != 201) {
      fail(c.base + ": create returned " + std::to_string(status));
      continue;
    }
    const std::string id = created["id"];
    Json last = created["state"];
    const auto script = parse_script(slurp(o.script));
    for (const auto& a : *script) {
      auto [s, j] = post("/sessions/" + id + "/actions", Json{{"action", wire::to_json(a)}});
      if (s != 200) fail(c.base + ": " + print(a) + " returned " + std::to_string(s));
      last = j;
    }
    if (last["state"] != expected["state"] || last["type"] != expected["type"]) {
      fail(c.base + ": final state differs from CLI replay");
    }
  }

  auto [status, created] = post("/sessions", Json::object());
  const std::string id = created["id"];
  const std::string before = client.Get("/sessions/" + id)->body;
  auto [rejected, body] = post("/sessions/" + id + "/actions", Json{{"action", "move parent"}});
  if (rejected != 409) fail("illegal action returned " + std::to_string(rejected));
  if (client.Get("/sessions/" + id)->body != before) fail("rejected action changed the session");

  if (v.pass) v.note = "both scripts match CLI replay; rejected action is 409 and inert";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance FIXTURE_DIR\n";
    return 2;
  }
  fixtures = argv[1];
  const Ctx incr_ctx = *parse_ctx("incr : num -> num");

  struct Check {
    int number;
    std::string name;
    double budget_s;  // 0 means untimed
    std::function<Verdict()> run;
  };
  const std::vector<Check> checks = {
      {1, "golden replay: increment_lambda", 1,
       [] { return golden("increment_lambda", {}, mk::arrow(mk::num(), mk::num())); }},
      {2, "golden replay: increment_twice", 1,
       [&] { return golden("increment_twice", incr_ctx, mk::num()); }},
      {3, "sensibility fuzz", 60,
       [] { return from_report(fuzz_sensibility(GenConfig{}, 10000, 50)); }},
      {4, "movement invariance fuzz", 30,
       [] { return from_report(fuzz_move_invariance(GenConfig{}, 10000, 4), 10000); }},
      {5, "reachability", 30, [] { return from_report(check_reachability(GenConfig{}, 1000)); }},
      {6, "constructability", 60,
       [] {
         GenConfig cfg;
         cfg.max_depth = 5;
         return from_report(check_constructability(cfg, 1000));
       }},
      {7, "determinism", 60, [] { return from_report(fuzz_determinism(GenConfig{}, 1000)); }},
      {8, "consistency complement", 10, complement},
      {9, "mutation sensitivity", 0, mutations},
      {10, "service conformance", 0, service},
  };

  int failed = 0;
  for (const auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      v.pass = false;
      v.note += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    if (!v.pass) ++failed;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << " ("
              << time.str() << " s): " << v.note << std::endl;
  }
  return failed;
}
