#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hop/types.hpp"

namespace hop {

struct TypeError : std::logic_error {
  using std::logic_error::logic_error;
};
struct PositionError : std::logic_error {
  using std::logic_error::logic_error;
};

class TermNode;

// Immutable, shareable lambda terms in spine form with nameless bound
// variables. Alpha-equivalent terms are structurally identical.
using Term = std::shared_ptr<const TermNode>;

enum class Tag : std::uint8_t { Const, Free, Bound, Lam, App };

class TermNode {
public:
  Tag tag() const { return tag_; }
  Type type() const { return type_; }
  // Number of enclosing binders this term depends on (max loose index + 1).
  std::uint32_t loose() const { return loose_; }
  bool normal() const { return normal_; }
  std::size_t hash() const { return hash_; }
  // Symbol-count weight: constants, variables and binders count 1.
  std::uint32_t weight() const { return weight_; }

  Symbol sym() const { return sym_; }            // Const
  std::uint64_t var_id() const { return id_; }   // Free
  std::uint32_t index() const { return idx_; }   // Bound
  const Term& body() const { return body_; }     // Lam
  Type binder_type() const { return type_->arg(); }
  const Term& head() const { return head_; }     // App
  const std::vector<Term>& spine() const { return spine_; }

private:
  friend struct TermFactory;
  TermNode() = default;
  Tag tag_ = Tag::Const;
  Type type_ = nullptr;
  std::uint32_t loose_ = 0;
  bool normal_ = false;
  std::size_t hash_ = 0;
  std::uint32_t weight_ = 1;
  Symbol sym_ = 0;
  std::uint64_t id_ = 0;
  std::uint32_t idx_ = 0;
  Term body_;
  Term head_;
  std::vector<Term> spine_;
};

// Construction. mk_app flattens nested applications and type-checks each
// spine element; all constructors reject ill-typed combinations.
Term mk_const(Symbol s, Type ty);
Term mk_const(std::string_view name, Type ty);
Term mk_free(std::uint64_t id, Type ty);
Term mk_bound(std::uint32_t index, Type ty);
Term mk_lam(Type binder, const Term& body);
Term mk_app(const Term& head, std::vector<Term> spine);
Term mk_app1(const Term& head, const Term& arg);

// Logical constant heads. Connectives beyond {~, |, forall, =, choice}
// are desugared at construction time.
Term t_true();
Term t_not();
Term t_or();
Term t_pi(Type tau);      // (tau>$o)>$o
Term t_eq(Type tau);      // tau>tau>$o
Term t_choice(Type tau);  // (tau>$o)>tau
Term t_box();             // $o>$o, modal front-end only
Term t_dia();

Symbol sym_true();
Symbol sym_not();
Symbol sym_or();
Symbol sym_pi();
Symbol sym_eq();
Symbol sym_choice();
Symbol sym_box();
Symbol sym_dia();

bool is_logical_symbol(Symbol s);

Term mk_not(const Term& a);
Term mk_or(const Term& a, const Term& b);
Term mk_and(const Term& a, const Term& b);
Term mk_implies(const Term& a, const Term& b);
Term mk_equation(const Term& a, const Term& b);
Term mk_forall(Type tau, const Term& lamBody);  // body is the lambda body
Term mk_exists(Type tau, const Term& lamBody);
Term t_false();

bool is_true(const Term& t);
bool is_false(const Term& t);
// Recognizers return the payload when the term has the given shape.
const Term* as_not(const Term& t);
bool as_or(const Term& t, Term& a, Term& b);
bool as_eq(const Term& t, Term& a, Term& b);
bool as_forall(const Term& t, Term& arg);  // Pi applied to one argument

bool term_eq(const Term& a, const Term& b);

// beta-reduces and eta-contracts; idempotent, returns its argument when the
// term is already normal.
Term beta_eta_normalize(const Term& t);

// Shift loose bound indices >= cutoff by delta.
Term shift(const Term& t, int delta, std::uint32_t cutoff = 0);
// Replace Bound(i), i < args.size(), by args[args.size()-1-i]; used for beta.
Term bsubst(const Term& body, const std::vector<Term>& args);
bool has_loose(const Term& t, std::uint32_t index);

class Substitution {
public:
  Substitution() = default;
  // Throws TypeError unless value's type equals varType.
  void bind(std::uint64_t id, Type varType, const Term& value);
  void bind(const Term& freeVar, const Term& value);
  const Term* find(std::uint64_t id) const;
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::uint64_t, Term>& entries() const { return map_; }
  // outer.compose(inner): apply-outer-after-inner as a single substitution.
  Substitution compose(const Substitution& inner) const;

private:
  std::map<std::uint64_t, Term> map_;
};

// Capture-avoiding replacement followed by normalization.
Term substitute(const Term& t, const Substitution& sigma);

// A path into a term: at a Lam node 0 descends into the body; at an App
// node 0 selects the head and i>=1 selects spine element i.
using Position = std::vector<std::uint32_t>;

Term subterm_at(const Term& t, const Position& pos);
// Structural replacement; the replacement must have the subterm's type.
Term replace_at(const Term& t, const Position& pos, const Term& r);

Type type_of(const Term& t);
// Re-derives the type from scratch, throwing TypeError on any violation.
Type check_types(const Term& t);

// Free variables in first-occurrence order.
void collect_free_vars(const Term& t, std::vector<std::pair<std::uint64_t, Type>>& out);
bool occurs_free(const Term& t, std::uint64_t id);
std::uint32_t count_free_occurrences(const Term& t, std::uint64_t id);

std::string show_term(const Term& t);  // debug rendering

}  // namespace hop
