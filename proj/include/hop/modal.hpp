#pragma once

#include <array>
#include <map>
#include <vector>

#include "hop/tptp.hpp"

namespace hop {

// Shallow Kripke-semantics embedding of a mono-modal problem into classical
// HOL: a fresh world type, an accessibility relation (dropped for S5, which
// quantifies over all worlds directly), lifted connectives, frame axioms and
// quantifier guards per the logic specification.
struct EmbedOutput {
  Problem classical;
  // parallel to the input's formula-role entries (axiom/definition/conjecture)
  std::vector<Term> embedded;
  std::vector<std::pair<std::string, Term>> extraAxioms;  // frame/domain axioms
};

EmbedOutput embed_problem(const Problem& p);

// Deterministic re-embedding from bare (role, formula) pairs; used by the
// derivation replay, which has no Problem object.
EmbedOutput embed_formulas(const std::vector<std::pair<Role, Term>>& inputs,
                           const LogicSpec& spec,
                           std::shared_ptr<const std::set<std::string>> avoid,
                           const std::string& problemName);

constexpr int kMaxWorlds = 4;

struct KripkeModel {
  int worlds = 1;
  std::array<std::array<bool, kMaxWorlds>, kMaxWorlds> rel{};
  std::map<Symbol, std::array<bool, kMaxWorlds>> valuation;
};

// Standard satisfaction for propositional mono-modal formulas (atoms of type
// $o, $true, negation, disjunction, boolean equality, $box, $dia).
bool kripke_eval(const Term& f, const KripkeModel& m, int world);

}  // namespace hop
