#pragma once

#include <optional>
#include <utility>

#include "hazel/syntax.hpp"

namespace hazel {

/// Type consistency: reflexive, symmetric, not transitive. The hole is
/// consistent with every type; arrows and sums are covariant.
bool consistent(const HTyp& a, const HTyp& b);

/// Inductive type inconsistency. Defined by its own rules, not as the
/// negation of consistent().
bool inconsistent(const HTyp& a, const HTyp& b);

std::optional<std::pair<HTyp, HTyp>> matched_arrow(const HTyp& t);
std::optional<std::pair<HTyp, HTyp>> matched_sum(const HTyp& t);

/// The type `e` synthesizes under `ctx`, if any.
std::optional<HTyp> synthesize(const Ctx& ctx, const HExp& e);

/// Whether `e` analyzes against `t` under `ctx`.
bool analyze(const Ctx& ctx, const HExp& e, const HTyp& t);

bool is_complete(const HTyp& t);
bool is_complete(const HExp& e);

}  // namespace hazel
