#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hazel/action.hpp"

namespace hazel {

// ---------------------------------------------------------------------------
// Generators

struct GenConfig {
  std::uint64_t seed = 1;
  int max_depth = 4;
  std::vector<VarName> var_pool = {"a", "b", "f", "g", "n"};
  std::uint64_t numeral_bound = 10;
};

/// An edit state together with the mode it is checked in.
struct EditState {
  Ctx ctx;
  ZExp z = ze::Cursor{mk::ehole()};
  HTyp t = mk::thole();
  bool analytic = false;

  bool operator==(const EditState&) const = default;
};

/// Random well-typed terms. Every output is checked against the statics
/// before it is returned; binders are globally fresh within one generator.
class Generator {
 public:
  explicit Generator(GenConfig cfg);

  const GenConfig& config() const { return cfg_; }
  std::mt19937_64& rng() { return rng_; }

  HTyp type(int depth);
  Ctx context();
  std::pair<HExp, HTyp> syn(const Ctx& ctx, int depth);
  HExp ana(const Ctx& ctx, const HTyp& t, int depth);

  /// A well-typed term with the cursor at a uniformly chosen position
  /// (including positions inside ascribed types).
  EditState state();

  VarName fresh();
  std::uint64_t numeral();
  bool chance(double p);
  int below(int n);

 private:
  HExp ana_via_subsumption(const Ctx& ctx, const HTyp& t, int depth);
  std::optional<HExp> sum_scrutinee(const Ctx& ctx, int depth, HTyp& sum_t);

  GenConfig cfg_;
  std::mt19937_64 rng_;
  std::uint64_t fresh_counter_ = 0;
};

std::pair<HExp, HTyp> gen_welltyped_syn(const GenConfig& cfg, const Ctx& ctx);
HExp gen_welltyped_ana(const GenConfig& cfg, const Ctx& ctx, const HTyp& t);

/// Every type with nesting depth at most `depth`; num and the hole have depth 1.
std::vector<HTyp> enumerate_types(int depth);

// ---------------------------------------------------------------------------
// Witnesses

ActionList reach_up_witness(const ZExp& z);
ActionList reach_up_witness_typ(const ZTyp& z);

/// Throws std::invalid_argument when `p` is not a position of `e`.
ActionList reach_down_witness(const HExp& e, const CursorPath& p);

/// Absent when the two states have different erasures.
std::optional<ActionList> reachability_witness(const ZExp& from, const ZExp& to);

bool only_movements(const ActionList& as);

/// Build `t` from a type cursor on the hole; the cursor ends on the root.
ActionList construct_witness_typ(const HTyp& t);

/// Build `e` from an empty hole in synthetic (resp. analytic) position; the
/// cursor ends on the root. Throws std::invalid_argument when `e` does not
/// synthesize (resp. analyze against `t`).
ActionList construct_witness_syn(const Ctx& ctx, const HExp& e);
ActionList construct_witness_ana(const Ctx& ctx, const HExp& e, const HTyp& t);

// ---------------------------------------------------------------------------
// Fuzzing

struct FuzzFailure {
  EditState initial;
  ActionList actions;
  std::string property;
  std::size_t index = 0;
  std::string detail;

  bool operator==(const FuzzFailure&) const = default;
};

struct FuzzReport {
  std::size_t cases_run = 0;
  std::size_t checks_run = 0;
  std::vector<FuzzFailure> failures;

  bool ok() const { return failures.empty(); }
  bool operator==(const FuzzReport&) const = default;
};

/// Random applicable actions from random well-typed states; after each step
/// the result's erasure must synthesize the returned type (synthetic) or
/// analyze against the goal (analytic). Half of the cases are analytic.
FuzzReport fuzz_sensibility(const GenConfig& cfg, std::size_t n_cases, std::size_t max_len,
                            const Engine& engine = Engine{});

/// Random applicable moves; erasure and type must be unchanged after each.
FuzzReport fuzz_move_invariance(const GenConfig& cfg, std::size_t n_cases, std::size_t max_len,
                                const Engine& engine = Engine{});

/// Every candidate action on random states; the engine must agree with the
/// rule-enumeration oracle, which must derive at most one result.
FuzzReport fuzz_determinism(const GenConfig& cfg, std::size_t n_cases,
                            const Engine& engine = Engine{});

/// Random (term, from, to) triples; the witness is movement-only and replays
/// from `from` to `to`.
FuzzReport check_reachability(const GenConfig& cfg, std::size_t n_cases,
                              const Engine& engine = Engine{});

/// Random terms, synthetic and analytic; the construction witness replays
/// from the empty hole to the term with the same type.
FuzzReport check_constructability(const GenConfig& cfg, std::size_t n_cases,
                                  const Engine& engine = Engine{});

/// True when the state's erasure is well typed in its mode.
bool well_typed(const EditState& s);

}  // namespace hazel
