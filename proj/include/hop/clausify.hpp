#pragma once

#include <vector>

#include "hop/clause.hpp"
#include "hop/fresh.hpp"

namespace hop {

// Pushes universal quantifiers past disjuncts that do not mention the bound
// variable and distributes them over conjunctions (dually for the encoded
// existentials). Logically equivalent to its input.
Term miniscope(const Term& f);

enum class ClausifyMode { Standard, Definitional };

// CNF over signed-equation literals. The caller negates conjectures first.
// Definitional mode names a disjunct whose clause set would be multiplied by
// more than defFactor by distribution. Tautologies are dropped.
std::vector<Clause> clausify(const Term& f, ClausifyMode mode, FreshGen& fresh,
                             std::uint32_t defFactor = 4);

// Clause-level renormalization: unfolds shorthand literals whose left side
// still has logical structure (negation, disjunction, quantifier), splitting
// into several clauses where needed, and removes trivial and duplicate
// literals. Tautologous clauses are not returned.
std::vector<Clause> renormalize(const Clause& c, FreshGen& fresh);

// Exhaustive instantiation of variables over the finite boolean domains:
// X: $o gets {$true, $false}, F: $o>$o the four unary boolean functions.
// Empty result means the clause has no such variables.
std::vector<std::pair<Clause, Substitution>> heuristic_instantiate(const Clause& c);

}  // namespace hop
