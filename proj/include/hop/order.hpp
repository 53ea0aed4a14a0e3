#pragma once

#include "hop/term.hpp"

namespace hop {

enum class Cmp { LT, EQ, GT, NC };

// Heuristic ordering on beta-eta-normal terms: symbol-count weight with a
// variable-occurrence condition, ties broken by head precedence (minted
// symbols > signature symbols > logical constants, then intern order with
// earlier symbols greater) and lexicographic spine comparison. Used to
// orient rewrite units and filter inferences only; no completeness claims
// hang off it.
Cmp term_cmp(const Term& s, const Term& t);

int precedence_rank(Symbol s);

}  // namespace hop
