#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hop/clause.hpp"
#include "hop/fresh.hpp"
#include "hop/tptp.hpp"

namespace hop {

enum class Rule {
  Input, Embed, NegConj, Clausify, Inst, DefEq,
  Para, EqFac, PS, FuncExt, BoolExt, Choice, FS, INJ,
  Simp, DER, Rewrite, UnitCut
};

std::string rule_name(Rule r);

// One node of the derivation DAG. Clause steps carry the clause; the input,
// embedding and negation steps carry a formula. The recorded coordinates,
// substitution and fresh-counter snapshot are enough to re-execute the rule
// deterministically.
struct Step {
  std::uint64_t id = 0;
  Rule rule = Rule::Input;
  Role role = Role::Plain;
  std::string inputName;  // original name for input steps
  std::vector<std::uint64_t> parents;
  bool isClause = false;
  Clause clause;
  Term formula;
  Substitution subst;
  std::vector<std::uint32_t> coords;
  Position path;
  FreshGen::Snapshot fresh{0, 0};
  bool printable = true;  // modal source lines render as comments only
};

struct Derivation {
  std::string problemName;
  std::vector<Step> steps;  // ids strictly increasing
  std::uint32_t unificationDepth = 8;
  std::uint32_t definitionalFactor = 4;
  std::optional<LogicSpec> logicSpec;  // embedding parameters for replay
  std::shared_ptr<const std::set<std::string>> avoidNames;

  const Step* find(std::uint64_t id) const;
  const Step& last() const { return steps.back(); }
  bool refutation() const;
  // steps that are not inputs
  std::size_t inference_count() const;
};

struct ReplayError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Re-executes every step's rule on its recorded parents and checks the
// conclusion up to alpha-equivalence and literal-multiset equality. Returns
// false on a conclusion mismatch; throws ReplayError on malformed input
// (unknown rule, dangling parent).
bool replay_check(const Derivation& d, std::string* firstFailure = nullptr);

}  // namespace hop
