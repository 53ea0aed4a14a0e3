#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hop/fresh.hpp"
#include "hop/order.hpp"
#include "hop/term.hpp"

namespace hop {

// A signed equation [lhs ~ rhs]^pos. Boolean literals [s]^a are stored as
// [s ~ $true]^a. The equation is symmetric; lit_eq and lit_hash respect the
// swap. `oriented` means lhs was strictly greater in the term ordering.
// `constraint` marks literals introduced as unification constraints.
struct Literal {
  Term lhs;
  Term rhs;
  bool pos = true;
  bool oriented = false;
  bool constraint = false;
};

Literal mk_literal(const Term& s, const Term& t, bool pos, bool constraint = false);
Literal mk_prop_literal(const Term& s, bool pos, bool constraint = false);
Literal negate_literal(const Literal& l);

bool lit_eq(const Literal& a, const Literal& b);
std::size_t lit_hash(const Literal& l);
bool lit_trivially_true(const Literal& l);   // [s ~ s]^tt
bool lit_trivially_false(const Literal& l);  // [s ~ s]^ff
bool lit_is_prop(const Literal& l);          // rhs is $true
std::uint32_t lit_weight(const Literal& l);

Literal apply_substitution(const Literal& l, const Substitution& sigma);

struct Clause {
  std::uint64_t id = 0;
  std::vector<Literal> lits;
  std::uint32_t ps_count = 0;  // primitive-substitution applications on this path

  bool empty() const { return lits.empty(); }
  std::uint32_t weight() const;
};

Clause apply_substitution(const Clause& c, const Substitution& sigma);
void collect_free_vars(const Clause& c, std::vector<std::pair<std::uint64_t, Type>>& out);
Clause rename_apart(const Clause& c, FreshGen& fresh);

// Literal-multiset equality after canonical variable renaming; the
// order-insensitive hash is a cheap duplicate filter keyed on the same
// canonical form.
bool clause_alpha_eq(const Clause& a, const Clause& b);
std::size_t clause_canonical_hash(const Clause& c);

// Syntactic matching: extends sigma so that pattern*sigma == target, treating
// target's free variables as frozen. Flexible heads are matched only when
// bare. Returns false and leaves sigma unspecified on failure.
bool match_term(const Term& pattern, const Term& target, Substitution& sigma);

// Multiset subsumption with one substitution across all literals.
bool subsumes(const Clause& general, const Clause& specific);

// Universal closure of the clause as a single formula; the empty clause
// becomes $false.
Term clause_to_formula(const Clause& c);

std::string show_clause(const Clause& c);  // debug

}  // namespace hop
