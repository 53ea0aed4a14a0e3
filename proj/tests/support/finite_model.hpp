#pragma once

// Brute-force evaluation of HOL terms over small structures with full
// function spaces: the independent oracle used by the test suites. Values of
// a type are indices into a canonical enumeration; a function value encodes
// its result table in base |codomain|.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "hop/clause.hpp"
#include "hop/term.hpp"

namespace hoptest {

using hop::Clause;
using hop::Symbol;
using hop::Term;
using hop::Type;

struct UniverseTooBig : std::runtime_error {
  UniverseTooBig() : std::runtime_error("type too large for finite evaluation") {}
};

using Value = std::uint64_t;

struct Universe {
  std::map<Symbol, std::size_t> baseSizes;  // $o is implicitly 2
  std::size_t cap = 1u << 21;
  std::map<Type, std::size_t> memo;

  std::size_t type_size(Type t);
};

Value apply_value(Universe& u, Type fnTy, Value f, Value arg);
Value make_fun(Universe& u, Type fnTy, const std::function<Value(Value)>& fn);

struct Interp {
  std::map<Symbol, Value> consts;
  std::map<std::uint64_t, Value> vars;  // free variables
};

Value eval_term(Universe& u, const Interp& in, const Term& t,
                std::vector<Value>& env);
bool eval_formula(Universe& u, const Interp& in, const Term& f);

// clause truth: for all assignments of its free variables some literal holds
bool eval_clause(Universe& u, Interp in, const Clause& c);

void collect_constants(const Term& t, std::vector<std::pair<Symbol, Type>>& out);

// Enumerates all interpretations of the listed symbols; returns false when
// the callback aborted the walk (i.e. returned false). Throws UniverseTooBig
// when the joint space exceeds `budget` interpretations.
bool for_each_interp(Universe& u, const std::vector<std::pair<Symbol, Type>>& syms,
                     std::uint64_t budget, Interp base,
                     const std::function<bool(const Interp&)>& f);

enum class OracleStatus { Valid, Countermodel, TooBig };

// validity of a closed formula over all interpretations of its constants
OracleStatus finite_valid(const Term& f, const std::map<Symbol, std::size_t>& baseSizes,
                          std::uint64_t budget = 1u << 22);

// logical equivalence of two closed formulas over their joint signature
OracleStatus finite_equivalent(const Term& a, const Term& b,
                               const std::map<Symbol, std::size_t>& baseSizes,
                               std::uint64_t budget = 1u << 22);

}  // namespace hoptest
