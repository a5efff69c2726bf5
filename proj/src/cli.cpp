#include "hazel/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <httplib.h>

#include "hazel/metatheory.hpp"
#include "hazel/server.hpp"
#include "hazel/text.hpp"
#include "hazel/wire.hpp"

namespace hazel::cli {

namespace {

/// Thrown for any input problem; carries the message for stderr.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError{"cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string text_arg(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
}

template <class T>
T parsed(const Result<T, ParseError>& r, const std::string& what) {
  if (!r) throw InputError{what + ": " + r.error().describe()};
  return *r;
}

Ctx ctx_arg(const std::optional<std::string>& arg) {
  return arg ? parsed(parse_ctx(text_arg(*arg)), "context") : Ctx{};
}

std::optional<HTyp> type_arg(const std::optional<std::string>& arg) {
  if (!arg) return std::nullopt;
  return parsed(parse_htyp(text_arg(*arg)), "type");
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    err << "error: " << e.message << "\n";
    return exit_code::bad_input;
  }
}

std::optional<Mutation> mutation_named(const std::string& name) {
  for (Mutation m : all_mutations()) {
    if (name == mutation_name(m)) return m;
  }
  return std::nullopt;
}

void print_failure(std::ostream& out, const FuzzFailure& f) {
  out << "  " << f.property << " at step " << f.index << ": " << f.detail << "\n";
  if (!f.initial.ctx.empty()) out << "    ctx: " << print(f.initial.ctx);
  out << "    from: " << print(f.initial.z) << (f.initial.analytic ? " <= " : " => ")
      << print(f.initial.t) << "\n";
  for (const auto& a : f.actions) out << "    " << print(a) << "\n";
}

}  // namespace

int check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Ctx ctx = ctx_arg(o.ctx);
    const HExp e = parsed(parse_hexp(text_arg(o.term)), "term");
    if (auto t = type_arg(o.ana)) {
      if (analyze(ctx, e, *t)) {
        out << "analyzes against " << print(*t) << "\n";
        return exit_code::ok;
      }
      out << "does not analyze against " << print(*t) << "\n";
      return exit_code::negative;
    }
    if (auto t = synthesize(ctx, e)) {
      out << "synthesizes " << print(*t) << "\n";
      return exit_code::ok;
    }
    out << "does not synthesize\n";
    return exit_code::negative;
  });
}

int replay(const ReplayOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Ctx ctx = ctx_arg(o.ctx);
    const ActionList script = parsed(parse_script(read_file(o.script)), o.script);
    const ZExp init = o.init ? parsed(parse_zexp(text_arg(*o.init)), "initial state")
                             : ZExp{ze::Cursor{mk::ehole()}};
    const std::optional<HTyp> goal = type_arg(o.ana);

    HTyp t = mk::thole();
    if (goal) {
      if (!analyze(ctx, erase(init), *goal)) {
        throw InputError{"initial state does not analyze against " + print(*goal)};
      }
      t = *goal;
    } else {
      auto st = synthesize(ctx, erase(init));
      if (!st) throw InputError{"initial state does not synthesize a type"};
      t = *st;
    }

    const Engine engine;
    ZExp z = init;
    if (o.trace) out << print(z) << "\n";
    for (std::size_t i = 0; i < script.size(); ++i) {
      const Action& a = script[i];
      std::optional<ActionError> failure;
      if (goal) {
        auto r = engine.perform_ana(ctx, z, t, a);
        if (r) {
          z = *r;
        } else {
          failure = r.error();
        }
      } else {
        auto r = engine.perform_syn(ctx, z, t, a);
        if (r) {
          z = r->z;
          t = r->t;
        } else {
          failure = r.error();
        }
      }
      if (failure) {
        err << "action " << i << " (" << print(a) << ") failed: " << failure->message() << "\n";
        return exit_code::action_failed;
      }
      if (o.trace) out << print(z) << "\n";
    }
    if (o.json) {
      out << wire::Json{{"state", wire::to_json(z)},
                        {"type", wire::to_json(t)},
                        {"printed", print(z)},
                        {"printed_type", print(t)}}
                 .dump()
          << "\n";
    } else {
      if (!o.trace) out << print(z) << "\n";
      out << (goal ? "<= " : "=> ") << print(t) << "\n";
    }
    return exit_code::ok;
  });
}

int fuzz(const FuzzOptions& o, std::ostream& out, std::ostream& err) {
  Engine engine;
  if (o.mutation) {
    auto m = mutation_named(*o.mutation);
    if (!m) {
      err << "error: unknown mutation " << *o.mutation << "; known:";
      for (Mutation k : all_mutations()) err << " " << mutation_name(k);
      err << "\n";
      return exit_code::bad_input;
    }
    engine = Engine(*m);
  }
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.max_depth = o.depth;

  FuzzReport r;
  if (o.kind == "sensibility") {
    r = fuzz_sensibility(cfg, o.count, o.len, engine);
  } else if (o.kind == "movement") {
    r = fuzz_move_invariance(cfg, o.count, o.len, engine);
  } else if (o.kind == "determinism") {
    r = fuzz_determinism(cfg, o.count, engine);
  } else if (o.kind == "reachability") {
    r = check_reachability(cfg, o.count, engine);
  } else if (o.kind == "constructability") {
    r = check_constructability(cfg, o.count, engine);
  } else {
    err << "error: unknown fuzz kind " << o.kind << "\n";
    return exit_code::bad_input;
  }

  if (o.json) {
    out << wire::to_json(r).dump() << "\n";
  } else if (r.ok()) {
    out << r.cases_run << " ok\n";
  } else {
    out << r.failures.size() << " violations in " << r.cases_run << " cases\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) print_failure(out, r.failures[i]);
  }
  return r.ok() ? exit_code::ok : exit_code::negative;
}

int witness(const WitnessOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (o.kind == "reach") {
      if (o.args.size() != 2) throw InputError{"reach takes FROM and TO"};
      const ZExp from = parsed(parse_zexp(text_arg(o.args[0])), "from");
      const ZExp to = parsed(parse_zexp(text_arg(o.args[1])), "to");
      auto w = reachability_witness(from, to);
      if (!w) {
        err << "states differ in more than cursor position\n";
        return exit_code::negative;
      }
      out << print_script(*w);
      return exit_code::ok;
    }
    if (o.kind == "construct") {
      if (o.args.size() != 1) throw InputError{"construct takes TERM"};
      const Ctx ctx = ctx_arg(o.ctx);
      const HExp e = parsed(parse_hexp(text_arg(o.args[0])), "term");
      const auto t = type_arg(o.ana);
      try {
        out << print_script(t ? construct_witness_ana(ctx, e, *t) : construct_witness_syn(ctx, e));
      } catch (const std::invalid_argument& ex) {
        err << ex.what() << "\n";
        return exit_code::negative;
      }
      return exit_code::ok;
    }
    throw InputError{"unknown witness kind " + o.kind};
  });
}

int serve(const std::string& host, int port, std::ostream& out, std::ostream& err) {
  SessionStore store;
  httplib::Server server;
  install_routes(server, store);
  if (!server.bind_to_port(host, port)) {
    err << "error: cannot listen on " << host << ":" << port << "\n";
    return exit_code::bad_input;
  }
  out << "listening on http://" << host << ":" << port << "\n" << std::flush;
  server.listen_after_bind();
  return exit_code::ok;
}

int default_port() {
  if (const char* v = std::getenv("HZ_PORT")) {
    char* end = nullptr;
    const long p = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && p > 0 && p < 65536) return static_cast<int>(p);
  }
  return 8787;
}

}  // namespace hazel::cli
