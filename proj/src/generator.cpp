#include <stdexcept>
#include <tuple>

#include "hazel/metatheory.hpp"
#include "hazel/text.hpp"

namespace hazel {

// A term of height 1 is a leaf, so a term generated at `depth` has height at
// most `depth`. Types embedded in ascriptions do not count toward height.

Generator::Generator(GenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {}

bool Generator::chance(double p) {
  // 53 high bits -> [0, 1); avoids library-specific distribution algorithms.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
}

int Generator::below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

std::uint64_t Generator::numeral() { return rng_() % (cfg_.numeral_bound + 1); }

VarName Generator::fresh() {
  const auto& pool = cfg_.var_pool;
  return VarName(pool[below(static_cast<int>(pool.size()))].str() + "_" +
                 std::to_string(fresh_counter_++));
}

HTyp Generator::type(int depth) {
  if (depth <= 1 || chance(0.3)) return chance(0.6) ? mk::num() : mk::thole();
  HTyp a = type(depth - 1);
  HTyp b = type(depth - 1);
  return chance(0.5) ? mk::arrow(a, b) : mk::sum(a, b);
}

Ctx Generator::context() {
  Ctx ctx;
  for (const auto& x : cfg_.var_pool) {
    if (chance(0.6)) ctx.bind(x, type(3));
  }
  return ctx;
}

std::pair<HExp, HTyp> Generator::syn(const Ctx& ctx, int depth) {
  auto leaf = [&]() -> std::pair<HExp, HTyp> {
    const auto vars = ctx.domain();
    const int pick = below(vars.empty() ? 2 : 3);
    if (pick == 0) return {mk::ehole(), mk::thole()};
    if (pick == 1) return {mk::lit(numeral()), mk::num()};
    const VarName& x = vars[below(static_cast<int>(vars.size()))];
    return {mk::var(x), *ctx.lookup(x)};
  };
  if (depth <= 1 || chance(0.15)) return leaf();

  switch (below(4)) {
    case 0: {
      HTyp t = type(3);
      return {mk::asc(ana(ctx, t, depth - 1), t), t};
    }
    case 1: {
      auto [f, ft] = syn(ctx, depth - 1);
      if (auto arr = matched_arrow(ft)) {
        return {mk::ap(f, ana(ctx, arr->first, depth - 1)), arr->second};
      }
      HExp g = depth > 2 ? mk::nehole(syn(ctx, depth - 2).first) : mk::ehole();
      return {mk::ap(g, ana(ctx, mk::thole(), depth - 1)), mk::thole()};
    }
    case 2: {
      HExp l = ana(ctx, mk::num(), depth - 1);
      HExp r = ana(ctx, mk::num(), depth - 1);
      return {mk::plus(l, r), mk::num()};
    }
    default:
      return {mk::nehole(syn(ctx, depth - 1).first), mk::thole()};
  }
}

std::optional<HExp> Generator::sum_scrutinee(const Ctx& ctx, int depth, HTyp& sum_t) {
  std::vector<VarName> sums;
  for (const auto& [x, t] : ctx.bindings()) {
    if (matched_sum(t)) sums.push_back(x);
  }
  const int pick = below(3);
  if (pick == 0 && !sums.empty()) {
    const VarName& x = sums[below(static_cast<int>(sums.size()))];
    sum_t = *ctx.lookup(x);
    return mk::var(x);
  }
  if (pick == 1 && depth > 1) {
    HTyp l = type(2);
    sum_t = mk::sum(l, type(2));
    return mk::asc(ana(ctx, sum_t, depth - 1), sum_t);
  }
  sum_t = mk::thole();
  return mk::ehole();
}

HExp Generator::ana_via_subsumption(const Ctx& ctx, const HTyp& t, int depth) {
  auto [e, et] = syn(ctx, depth);
  if (consistent(et, t)) return e;
  if (depth <= 1) return mk::ehole();
  return mk::nehole(syn(ctx, depth - 1).first);
}

HExp Generator::ana(const Ctx& ctx, const HTyp& t, int depth) {
  if (depth <= 1) return ana_via_subsumption(ctx, t, 1);

  const auto arr = matched_arrow(t);
  const auto sum = matched_sum(t);
  const int roll = below(4);
  if (roll == 0 && arr) {
    VarName x = fresh();
    return mk::lam(x, ana(ctx.extend(x, arr->first), arr->second, depth - 1));
  }
  if (roll == 1 && sum) {
    const bool left = chance(0.5);
    return mk::inj(left ? InjSide::L : InjSide::R,
                   ana(ctx, left ? sum->first : sum->second, depth - 1));
  }
  if (roll == 2) {
    HTyp st = mk::thole();
    HExp s = *sum_scrutinee(ctx, depth - 1, st);
    const auto parts = *matched_sum(st);
    VarName x = fresh();
    VarName y = fresh();
    HExp l = ana(ctx.extend(x, parts.first), t, depth - 1);
    HExp r = ana(ctx.extend(y, parts.second), t, depth - 1);
    return mk::case_of(s, x, l, y, r);
  }
  return ana_via_subsumption(ctx, t, depth);
}

EditState Generator::state() {
  EditState s;
  s.ctx = context();
  s.analytic = chance(0.5);
  HExp e = mk::ehole();
  if (s.analytic) {
    s.t = type(3);
    e = ana(s.ctx, s.t, cfg_.max_depth);
  } else {
    std::tie(e, s.t) = syn(s.ctx, cfg_.max_depth);
  }
  const auto paths = all_paths(e);
  s.z = *place_cursor(e, paths[below(static_cast<int>(paths.size()))]);
  if (!well_typed(s)) throw std::logic_error("generator produced ill-typed term: " + print(e));
  return s;
}

bool well_typed(const EditState& s) {
  const HExp e = erase(s.z);
  if (s.analytic) return analyze(s.ctx, e, s.t);
  auto t = synthesize(s.ctx, e);
  return t && *t == s.t;
}

std::pair<HExp, HTyp> gen_welltyped_syn(const GenConfig& cfg, const Ctx& ctx) {
  Generator g(cfg);
  auto out = g.syn(ctx, cfg.max_depth);
  auto t = synthesize(ctx, out.first);
  if (!t || !(*t == out.second)) {
    throw std::logic_error("generator produced ill-typed term: " + print(out.first));
  }
  return out;
}

HExp gen_welltyped_ana(const GenConfig& cfg, const Ctx& ctx, const HTyp& t) {
  Generator g(cfg);
  HExp e = g.ana(ctx, t, cfg.max_depth);
  if (!analyze(ctx, e, t)) {
    throw std::logic_error("generator produced ill-typed term: " + print(e));
  }
  return e;
}

std::vector<HTyp> enumerate_types(int depth) {
  if (depth <= 0) return {};
  std::vector<HTyp> out = {mk::num(), mk::thole()};
  if (depth == 1) return out;
  const auto sub = enumerate_types(depth - 1);
  for (const auto& a : sub) {
    for (const auto& b : sub) out.push_back(mk::arrow(a, b));
  }
  for (const auto& a : sub) {
    for (const auto& b : sub) out.push_back(mk::sum(a, b));
  }
  return out;
}

}  // namespace hazel
