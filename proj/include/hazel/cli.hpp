#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// The `hz` subcommands as plain functions returning an exit code.
//
// Arguments that carry program text (terms, types, contexts, initial states)
// are taken literally, or read from a file when prefixed with '@'. Scripts
// are always file paths; "-" reads standard input.

namespace hazel::cli {

namespace exit_code {
constexpr int ok = 0;
constexpr int negative = 1;        // verdict is no, fuzz violation, witness impossible
constexpr int bad_input = 2;       // parse error or unreadable file
constexpr int action_failed = 3;   // replay stopped at a rejected action
}  // namespace exit_code

struct CheckOptions {
  std::string term;
  std::optional<std::string> ctx;
  std::optional<std::string> ana;  // analyze against this type instead
};

struct ReplayOptions {
  std::string script;
  std::optional<std::string> init;  // a Z-expression; default is the empty hole
  std::optional<std::string> ctx;
  std::optional<std::string> ana;
  bool trace = false;
  bool json = false;
};

struct FuzzOptions {
  std::string kind;  // sensibility | movement | determinism | reachability | constructability
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t len = 50;
  int depth = 4;
  std::optional<std::string> mutation;
  bool json = false;
};

struct WitnessOptions {
  std::string kind;  // reach FROM TO | construct TERM
  std::vector<std::string> args;
  std::optional<std::string> ctx;
  std::optional<std::string> ana;
};

int check(const CheckOptions& o, std::ostream& out, std::ostream& err);
int replay(const ReplayOptions& o, std::ostream& out, std::ostream& err);
int fuzz(const FuzzOptions& o, std::ostream& out, std::ostream& err);
int witness(const WitnessOptions& o, std::ostream& out, std::ostream& err);

/// Blocks serving the HTTP API until the process is stopped.
int serve(const std::string& host, int port, std::ostream& out, std::ostream& err);

/// HZ_PORT when set and valid, else 8787.
int default_port();

}  // namespace hazel::cli
