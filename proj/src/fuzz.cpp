#include <algorithm>
#include <array>

#include "hazel/metatheory.hpp"
#include "hazel/rule_oracle.hpp"
#include "hazel/text.hpp"

namespace hazel {

using namespace actions;

namespace {

/// Each case draws from its own generator, seeded from (seed, case index), so
/// a case can be reproduced alone.
Generator case_generator(const GenConfig& cfg, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  GenConfig c = cfg;
  c.seed = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return Generator(c);
}

template <class T>
void shuffle(std::vector<T>& v, Generator& g) {
  // Fisher-Yates with our own index draws; std::shuffle is not portable.
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(g.below(static_cast<int>(i)))]);
  }
}

/// Outcome of one action on an edit state.
struct Step {
  bool ok = false;
  EditState next;
};

Step apply(const Engine& engine, const EditState& s, const Action& a) {
  Step out{false, s};
  if (s.analytic) {
    auto r = engine.perform_ana(s.ctx, s.z, s.t, a);
    if (!r) return out;
    out.next.z = *r;
  } else {
    auto r = engine.perform_syn(s.ctx, s.z, s.t, a);
    if (!r) return out;
    out.next.z = r->z;
    out.next.t = r->t;
  }
  out.ok = true;
  return out;
}

std::string describe(const EditState& s) {
  return print(s.z) + (s.analytic ? " <= " : " => ") + print(s.t);
}

std::vector<Action> random_candidates(Generator& g, const EditState& s) {
  std::vector<Action> out = standard_candidates(s.ctx, s.z);
  const auto& pool = g.config().var_pool;
  auto name = [&] {
    return g.chance(0.5) ? pool[g.below(static_cast<int>(pool.size()))] : g.fresh();
  };
  out.push_back(construct(shape::Lit{g.numeral()}));
  out.push_back(construct(shape::Lam{name()}));
  VarName x = name();
  out.push_back(construct(shape::Case{x, name()}));
  shuffle(out, g);
  return out;
}

void record(FuzzReport& report, const EditState& initial, ActionList actions,
            std::string property, std::size_t index, std::string detail) {
  report.failures.push_back(
      FuzzFailure{initial, std::move(actions), std::move(property), index, std::move(detail)});
}

}  // namespace

FuzzReport fuzz_sensibility(const GenConfig& cfg, std::size_t n_cases, std::size_t max_len,
                            const Engine& engine) {
  FuzzReport report;
  for (std::size_t c = 0; c < n_cases; ++c) {
    Generator g = case_generator(cfg, c);
    const EditState initial = g.state();
    EditState s = initial;
    ActionList done;
    const std::size_t len = 1 + static_cast<std::size_t>(g.below(static_cast<int>(max_len)));
    ++report.cases_run;
    for (std::size_t k = 0; k < len; ++k) {
      Step step;
      for (const auto& a : random_candidates(g, s)) {
        step = apply(engine, s, a);
        if (step.ok) {
          done.push_back(a);
          break;
        }
      }
      if (!step.ok) break;
      ++report.checks_run;
      if (!well_typed(step.next)) {
        record(report, initial, done, "sensibility", k,
               "after " + print(done.back()) + ": " + describe(step.next));
        break;
      }
      s = step.next;
    }
  }
  return report;
}

FuzzReport fuzz_move_invariance(const GenConfig& cfg, std::size_t n_cases, std::size_t max_len,
                                const Engine& engine) {
  FuzzReport report;
  for (std::size_t c = 0; c < n_cases; ++c) {
    Generator g = case_generator(cfg, c);
    const EditState initial = g.state();
    EditState s = initial;
    ActionList done;
    ++report.cases_run;
    for (std::size_t k = 0; k < max_len; ++k) {
      std::vector<Action> moves = {move_child(1), move_child(2), move_child(3), move_parent()};
      shuffle(moves, g);
      Step step;
      for (const auto& a : moves) {
        step = apply(engine, s, a);
        if (step.ok) {
          done.push_back(a);
          break;
        }
      }
      if (!step.ok) break;
      ++report.checks_run;
      if (!(erase(step.next.z) == erase(s.z)) || !(step.next.t == s.t)) {
        record(report, initial, done, "move-invariance", k,
               "after " + print(done.back()) + ": " + describe(s) + " became " +
                   describe(step.next));
        break;
      }
      s = step.next;
    }
  }
  return report;
}

FuzzReport fuzz_determinism(const GenConfig& cfg, std::size_t n_cases, const Engine& engine) {
  using oracle::Discipline;
  FuzzReport report;
  for (std::size_t c = 0; c < n_cases; ++c) {
    Generator g = case_generator(cfg, c);
    const EditState s = g.state();
    ++report.cases_run;
    const auto candidates = random_candidates(g, s);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Action& a = candidates[k];
      ++report.checks_run;
      std::string problem;
      if (s.analytic) {
        const auto derived =
            oracle::distinct(oracle::ana_results(s.ctx, s.z, s.t, a, Discipline::SubsumptionMinimal));
        const auto got = engine.perform_ana(s.ctx, s.z, s.t, a);
        if (derived.size() > 1) {
          problem = std::to_string(derived.size()) + " distinct results derivable";
        } else if (got.ok() != !derived.empty()) {
          problem = got.ok() ? "engine accepts, no rule derives a result"
                             : "engine rejects, rules derive " + print(derived.front());
        } else if (got.ok() && !(*got == derived.front())) {
          problem = "engine gives " + print(*got) + ", rules give " + print(derived.front());
        }
      } else {
        const auto derived =
            oracle::distinct(oracle::syn_results(s.ctx, s.z, s.t, a, Discipline::SubsumptionMinimal));
        const auto got = engine.perform_syn(s.ctx, s.z, s.t, a);
        if (derived.size() > 1) {
          problem = std::to_string(derived.size()) + " distinct results derivable";
        } else if (got.ok() != !derived.empty()) {
          problem = got.ok() ? "engine accepts, no rule derives a result"
                             : "engine rejects, rules derive " + print(derived.front().z);
        } else if (got.ok() && !(*got == derived.front())) {
          problem = "engine gives " + print(got->z) + " => " + print(got->t) + ", rules give " +
                    print(derived.front().z) + " => " + print(derived.front().t);
        }
      }
      if (!problem.empty()) {
        record(report, s, {a}, "determinism", k, print(a) + " at " + describe(s) + ": " + problem);
      }
    }
  }
  return report;
}

FuzzReport check_reachability(const GenConfig& cfg, std::size_t n_cases, const Engine& engine) {
  FuzzReport report;
  for (std::size_t c = 0; c < n_cases; ++c) {
    Generator g = case_generator(cfg, c);
    EditState from = g.state();
    const HExp e = erase(from.z);
    const auto paths = all_paths(e);
    const ZExp to = *place_cursor(e, paths[static_cast<std::size_t>(g.below(static_cast<int>(paths.size())))]);
    ++report.cases_run;
    ++report.checks_run;

    const auto w = *reachability_witness(from.z, to);
    std::string problem;
    if (!only_movements(w)) problem = "witness contains a non-movement action";
    std::optional<ZExp> reached;
    if (from.analytic) {
      auto r = engine.perform_ana_iter(from.ctx, from.z, from.t, w);
      if (r) reached = *r;
    } else {
      auto r = engine.perform_syn_iter(from.ctx, from.z, from.t, w);
      if (r) reached = r->z;
    }
    if (problem.empty() && !reached) problem = "witness does not replay";
    if (problem.empty() && !(*reached == to)) {
      problem = "replay reaches " + print(*reached) + " instead of " + print(to);
    }
    if (!problem.empty()) {
      record(report, from, w, "reachability", 0, describe(from) + ": " + problem);
    }
  }
  return report;
}

FuzzReport check_constructability(const GenConfig& cfg, std::size_t n_cases,
                                  const Engine& engine) {
  FuzzReport report;
  for (std::size_t c = 0; c < n_cases; ++c) {
    Generator g = case_generator(cfg, c);
    EditState target;
    target.ctx = g.context();
    target.analytic = c % 2 == 1;
    HExp e = mk::ehole();
    if (target.analytic) {
      target.t = g.type(3);
      e = g.ana(target.ctx, target.t, cfg.max_depth);
    } else {
      std::tie(e, target.t) = g.syn(target.ctx, cfg.max_depth);
    }
    target.z = root_cursor(e);
    ++report.cases_run;
    ++report.checks_run;

    EditState start{target.ctx, root_cursor(mk::ehole()),
                    target.analytic ? target.t : mk::thole(), target.analytic};
    const ActionList w = target.analytic ? construct_witness_ana(target.ctx, e, target.t)
                                         : construct_witness_syn(target.ctx, e);
    std::string problem;
    if (target.analytic) {
      auto r = engine.perform_ana_iter(start.ctx, start.z, start.t, w);
      if (!r) {
        problem = "action " + std::to_string(r.error().index) + " (" +
                  print(w[r.error().index]) + ") fails: " + r.error().error.message();
      } else if (!(*r == target.z)) {
        problem = "replay builds " + print(*r);
      }
    } else {
      auto r = engine.perform_syn_iter(start.ctx, start.z, start.t, w);
      if (!r) {
        problem = "action " + std::to_string(r.error().index) + " (" +
                  print(w[r.error().index]) + ") fails: " + r.error().error.message();
      } else if (!(r->z == target.z) || !(r->t == target.t)) {
        problem = "replay builds " + print(r->z) + " => " + print(r->t);
      }
    }
    if (!problem.empty()) {
      record(report, start, w, "constructability", 0, "target " + describe(target) + ": " + problem);
    }
  }
  return report;
}

}  // namespace hazel
