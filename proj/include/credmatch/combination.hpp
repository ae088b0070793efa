#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "credmatch/evidence.hpp"

namespace credmatch {

enum class CombinationRule { Conjunctive, Dempster, Disjunctive };

std::string_view rule_name(CombinationRule rule);
std::optional<CombinationRule> parse_rule(std::string_view name);

// m(A) = sum over B∩C=A of m1(B)·m2(C). Open-world: the empty set may
// receive mass, in which case the result is flagged unnormalized.
MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2);

// Conjunctive result with the conflict mass removed and the remainder
// rescaled by 1/(1-K). Throws TotalConflict when 1-K <= 1e-12.
MassFunction dempster(const MassFunction& m1, const MassFunction& m2);

// m(A) = sum over B∪C=A of m1(B)·m2(C).
MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2);

// K: the conjunctive mass assigned to the empty set.
double conflict(const MassFunction& m1, const MassFunction& m2);

// Folds the sequence under the given rule. Dempster folds with the
// conjunctive kernel and normalizes once at the end.
MassFunction combine_all(CombinationRule rule, std::span<const MassFunction> ms);

}  // namespace credmatch
