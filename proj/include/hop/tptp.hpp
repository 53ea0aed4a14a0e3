#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hop/clause.hpp"
#include "hop/term.hpp"

namespace hop {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

enum class Role { Axiom, Definition, Conjecture, NegatedConjecture, TypeDecl, Logic, Plain };

std::string role_name(Role r);

enum class ModalSystem { K, D, T, S4, S5 };
enum class Quantification { Constant, Cumulative, Varying };
enum class Consequence { Local, Global };

struct LogicSpec {
  ModalSystem system = ModalSystem::K;
  Quantification quantification = Quantification::Constant;
  Consequence consequence = Consequence::Global;
  bool rigid = true;
};

std::string show_logic_spec(const LogicSpec& s);

struct AnnotatedFormula {
  std::string name;
  Role role = Role::Axiom;
  Term formula;                      // formula roles
  Symbol declared = 0;               // type role
  Type declaredType = nullptr;       // type role (null for base-type decls)
  bool declaresBaseType = false;
  std::optional<LogicSpec> logic;    // logic role
  // source annotation, kept for parsed TSTP lines
  bool hasAnnotation = false;
  std::string inferenceRule;
  std::vector<std::string> parents;
};

struct Problem {
  std::string sourcePath;  // display name of the problem
  std::vector<AnnotatedFormula> formulas;
  std::map<Symbol, Type> signature;
  std::vector<Symbol> signatureOrder;
  std::set<Symbol> baseTypes;   // user-declared base types
  std::vector<Symbol> baseTypeOrder;
  std::optional<LogicSpec> logicSpec;
  std::shared_ptr<std::set<std::string>> usedNames = std::make_shared<std::set<std::string>>();

  const AnnotatedFormula* conjecture() const;
};

Problem parse_problem(const std::string& text, const std::string& displayName);
Problem parse_problem_file(const std::string& path);

// Exposed for direct testing; parse_problem calls it for logic-role entries.
LogicSpec parse_logic_spec(const std::string& payload);

enum class SzsStatus { Theorem, ContradictoryAxioms, CounterSatisfiable, GaveUp, Timeout, Error };

std::string szs_name(SzsStatus s);
std::string render_szs(SzsStatus s, const std::string& problemName);

// THF rendering. Free variables are universally closed and shown as V<n>,
// bound variables as X<depth>.
std::string render_term_thf(const Term& t);
std::string render_clause_thf(const Clause& c);
std::string render_type_thf(Type t);

struct Derivation;
// Refutation certificate between SZS output markers; every line parses back
// through parse_problem. Throws std::logic_error on an empty derivation.
std::string render_tstp(const Derivation& d);

}  // namespace hop
