#include <iostream>

#include <CLI11.hpp>

#include "hazel/cli.hpp"

using namespace hazel;

int main(int argc, char** argv) {
  CLI::App app{"Structure editor engine for a typed lambda calculus with holes"};
  app.require_subcommand(1);

  cli::CheckOptions check;
  auto* c = app.add_subcommand("check", "Synthesize (or analyze) the type of a term");
  c->add_option("term", check.term, "Term text, or @FILE")->required();
  c->add_option("--ctx", check.ctx, "Context text (x : t per line), or @FILE");
  c->add_option("--ana", check.ana, "Analyze against this type instead");

  cli::ReplayOptions replay;
  auto* r = app.add_subcommand("replay", "Run an action script");
  r->add_option("script", replay.script, "Script file (.hza), or - for stdin")->required();
  r->add_option("--init", replay.init, "Initial Z-expression text, or @FILE");
  r->add_option("--ctx", replay.ctx, "Context text, or @FILE");
  r->add_option("--ana", replay.ana, "Replay in analytic position against this type");
  r->add_flag("--trace", replay.trace, "Print every intermediate state");
  r->add_flag("--json", replay.json, "Print the final state as JSON");

  cli::FuzzOptions fuzz;
  auto* f = app.add_subcommand("fuzz", "Property-check the engine on random inputs");
  f->add_option("kind", fuzz.kind)
      ->required()
      ->check(CLI::IsMember(
          {"sensibility", "movement", "determinism", "reachability", "constructability"}));
  f->add_option("--seed", fuzz.seed, "Generator seed")->capture_default_str();
  f->add_option("--count", fuzz.count, "Number of cases")->capture_default_str();
  f->add_option("--len", fuzz.len, "Maximum actions per case")->capture_default_str();
  f->add_option("--depth", fuzz.depth, "Maximum term height")->capture_default_str();
  f->add_option("--mutation", fuzz.mutation, "Run against a deliberately broken engine");
  f->add_flag("--json", fuzz.json, "Print the report as JSON");

  cli::WitnessOptions witness;
  auto* w = app.add_subcommand("witness", "Print an action script that reaches or builds a state");
  w->add_option("kind", witness.kind)->required()->check(CLI::IsMember({"reach", "construct"}));
  w->add_option("args", witness.args, "reach: FROM TO; construct: TERM (text or @FILE)");
  w->add_option("--ctx", witness.ctx, "Context text, or @FILE");
  w->add_option("--ana", witness.ana, "construct: build in analytic position against this type");

  std::string host = "127.0.0.1";
  int port = cli::default_port();
  auto* s = app.add_subcommand("serve", "Serve the edit-session HTTP API");
  s->add_option("--host", host, "Address to bind")->capture_default_str();
  s->add_option("--port", port, "Port (default from HZ_PORT, else 8787)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_code::bad_input;
  }

  if (*c) return cli::check(check, std::cout, std::cerr);
  if (*r) return cli::replay(replay, std::cout, std::cerr);
  if (*f) return cli::fuzz(fuzz, std::cout, std::cerr);
  if (*w) return cli::witness(witness, std::cout, std::cerr);
  return cli::serve(host, port, std::cout, std::cerr);
}
