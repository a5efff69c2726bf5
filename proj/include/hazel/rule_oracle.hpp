#pragma once

#include <string>
#include <vector>

#include "hazel/action.hpp"

// Relational reading of the action rules: every rule whose premises hold
// contributes a result, so the output is the full set of derivable results
// rather than the single result the engine commits to.

namespace hazel::oracle {

enum class Discipline {
  SubsumptionMinimal,  // analytic subsumption only when no other analytic rule derives a result
  Unrestricted,        // every derivation counts
};

template <class T>
struct Derived {
  T value;
  std::string rule;
};

std::vector<Derived<ZTyp>> type_results(const ZTyp& z, const Action& a);
std::vector<Derived<ZExp>> move_results(const ZExp& z, const Action& a);
std::vector<Derived<Synthesized>> syn_results(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                              const Action& a, Discipline d);
std::vector<Derived<ZExp>> ana_results(const Ctx& ctx, const ZExp& z, const HTyp& t,
                                       const Action& a, Discipline d);

/// Distinct result values, ignoring which rule produced them.
template <class T>
std::vector<T> distinct(const std::vector<Derived<T>>& ds) {
  std::vector<T> out;
  for (const auto& d : ds) {
    bool seen = false;
    for (const auto& v : out) seen = seen || v == d.value;
    if (!seen) out.push_back(d.value);
  }
  return out;
}

}  // namespace hazel::oracle
