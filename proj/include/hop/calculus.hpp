#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hop/clause.hpp"
#include "hop/fresh.hpp"
#include "hop/term.hpp"

namespace hop {

// Conclusion of a single rule application together with the data needed to
// replay it: the substitution used (if any), rule-specific coordinates and a
// term position.
struct RuleOutput {
  Clause clause;
  Substitution subst;
  std::vector<std::uint32_t> coords;
  Position path;
};

// Positive equations of `from` rewrite subterms of `into`'s literals,
// emitting the replaced literal plus a unification-constraint literal.
// Premises must be renamed apart. Eligible positions are closed subterms of
// either side; constraint literals of `into` are skipped.
std::vector<RuleOutput> paramodulate(const Clause& from, const Clause& into);

std::vector<RuleOutput> equality_factor(const Clause& c);

struct GeneralBindingSpec {
  bool useNot = true;
  bool useOr = true;
  bool usePi = true;
  bool useEq = true;
  std::vector<Type> types;  // the tau range for Pi/eq heads
};

// General bindings for a flexible head of result type $o at target type.
std::vector<Term> general_bindings(Type target, const GeneralBindingSpec& gb,
                                   FreshGen& fresh);

std::vector<RuleOutput> primitive_substitution(const Clause& c,
                                               const GeneralBindingSpec& gb,
                                               FreshGen& fresh);

// Applies both sides of every function-typed literal to fresh variables
// (positive) or Skolem terms over the literal's free variables (negative)
// until all literals have base type. Returns nothing when no literal is
// functional.
std::optional<RuleOutput> func_ext(const Clause& c, FreshGen& fresh);

// Propositional expansion of a boolean equation literal; two clauses per
// applicable literal.
std::vector<RuleOutput> bool_ext(const Clause& c);

// Instantiates the choice axiom for every subterm (E t) where E is a choice
// operator or a free variable of choice-operator type.
std::vector<RuleOutput> choice_rule(const Clause& c, FreshGen& fresh);

// Replaces a flexible head shared by negative equation literals with the
// choice-encoded lookup table built from those equations. The caller decides
// when to fire it (after pre-unification failed).
std::optional<RuleOutput> func_synth(const Clause& c, FreshGen& fresh);

// Left inverse for the exact two-literal injectivity clause.
std::optional<RuleOutput> inj_rule(const Clause& c, FreshGen& fresh);

// Leibniz/Andrews equality shapes rewritten to primitive equality.
std::optional<RuleOutput> defined_eq_replace_clause(const Clause& c);

struct ContractOutcome {
  enum class Status { Unchanged, Simplified, Redundant } status;
  Clause clause;
};

// Deterministic contraction stages, each a separate derivation step.
ContractOutcome simp_trivial(const Clause& c);
ContractOutcome der_destructive(const Clause& c);

struct UnitPremise {
  std::uint64_t id;
  const Clause* clause;  // single positive (rewrite) / any (cut) literal
};

ContractOutcome rewrite_with_units(const Clause& c, std::span<const UnitPremise> units,
                                   std::vector<std::uint64_t>& used);
ContractOutcome unit_cut(const Clause& c, std::span<const UnitPremise> units,
                         std::vector<std::uint64_t>& used);

}  // namespace hop
