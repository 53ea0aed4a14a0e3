#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hop/fresh.hpp"
#include "hop/term.hpp"

namespace hop {

struct UnificationProblem {
  std::vector<std::pair<Term, Term>> constraints;  // equal types per pair
  std::uint32_t depth = 8;  // flex-rigid budget along one search path
};

enum class PatternStatus { MGU, NotPattern, Fail };

// Miller pattern unification. Returns MGU with the most general unifier in
// `out` when all flexible subterms apply free variables to distinct bound
// variables; NotPattern leaves no side effects.
PatternStatus pattern_unify(const UnificationProblem& p, FreshGen& fresh,
                            Substitution& out);

struct PreUnifier {
  Substitution subst;
  std::vector<std::pair<Term, Term>> residual;  // flex-flex leftovers
};

// Depth-bounded enumeration of Huet-style pre-unifiers. Deterministic
// order: imitation before projections, projections by argument position.
class PreUnifyIter {
public:
  PreUnifyIter(UnificationProblem p, FreshGen& fresh);
  ~PreUnifyIter();
  PreUnifyIter(const PreUnifyIter&) = delete;
  PreUnifyIter& operator=(const PreUnifyIter&) = delete;
  std::optional<PreUnifier> next();

private:
  struct Impl;
  Impl* impl_;
};

std::vector<PreUnifier> preunify_all(const UnificationProblem& p, FreshGen& fresh,
                                     std::size_t maxResults = 64);

}  // namespace hop
