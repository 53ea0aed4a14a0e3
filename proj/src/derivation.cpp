#include "hop/derivation.hpp"

#include <map>

#include "hop/calculus.hpp"
#include "hop/clausify.hpp"
#include "hop/modal.hpp"
#include "hop/unify.hpp"

namespace hop {

namespace {

struct Replayer {
  const Derivation& d;
  std::map<std::uint64_t, const Step*> byId;
  std::string failure;

  explicit Replayer(const Derivation& dv) : d(dv) {
    for (const Step& s : d.steps) byId[s.id] = &s;
    for (const Step& s : d.steps)
      for (std::uint64_t p : s.parents)
        if (!byId.count(p))
          throw ReplayError("step " + std::to_string(s.id) +
                            " references missing parent " + std::to_string(p));
  }

  const Step& parent(const Step& s, std::size_t i) {
    if (i >= s.parents.size())
      throw ReplayError("step " + std::to_string(s.id) + " lacks parent " +
                        std::to_string(i));
    return *byId.at(s.parents[i]);
  }

  FreshGen fresh_at(const Step& s) {
    FreshGen g;
    g.restore(s.fresh);
    g.avoid = d.avoidNames;
    return g;
  }

  bool fail(const Step& s, const std::string& why) {
    failure = rule_name(s.rule) + " step " + std::to_string(s.id) + ": " + why;
    return false;
  }

  bool clause_match(const Step& s, const Clause& got) {
    if (clause_alpha_eq(s.clause, got)) return true;
    return false;
  }

  bool member(const Step& s, const std::vector<RuleOutput>& outs) {
    for (const RuleOutput& ro : outs)
      if (clause_alpha_eq(s.clause, ro.clause)) return true;
    return fail(s, "conclusion not derivable from recorded parents");
  }

  bool check_embed_steps() {
    // gather modal inputs in order; re-run the embedding as a whole
    std::vector<std::pair<Role, Term>> inputs;
    std::map<std::uint64_t, std::size_t> inputIndex;
    for (const Step& s : d.steps) {
      if (s.rule == Rule::Input && !s.printable) {
        inputIndex[s.id] = inputs.size();
        inputs.emplace_back(s.role, s.formula);
      }
    }
    bool anyEmbed = false;
    for (const Step& s : d.steps)
      if (s.rule == Rule::Embed) anyEmbed = true;
    if (!anyEmbed) return true;
    if (!d.logicSpec)
      throw ReplayError("embedding steps without a logic specification");
    EmbedOutput emb =
        embed_formulas(inputs, *d.logicSpec, d.avoidNames, d.problemName);
    for (const Step& s : d.steps) {
      if (s.rule != Rule::Embed) continue;
      if (!s.parents.empty()) {
        auto it = inputIndex.find(s.parents[0]);
        if (it == inputIndex.end())
          throw ReplayError("embed step with non-input parent");
        if (!term_eq(s.formula, emb.embedded[it->second]))
          return fail(s, "embedded formula mismatch");
      } else {
        bool found = false;
        for (const auto& [n, ax] : emb.extraAxioms)
          if (term_eq(ax, s.formula)) found = true;
        if (!found) return fail(s, "frame/domain axiom mismatch");
      }
    }
    return true;
  }

  bool check_step(const Step& s) {
    switch (s.rule) {
      case Rule::Input:
        return true;
      case Rule::Embed:
        return true;  // validated in check_embed_steps
      case Rule::NegConj: {
        Term expect = beta_eta_normalize(mk_not(parent(s, 0).formula));
        if (!term_eq(expect, s.formula)) return fail(s, "negation mismatch");
        return true;
      }
      case Rule::Clausify: {
        FreshGen g = fresh_at(s);
        auto cs = clausify(miniscope(parent(s, 0).formula), ClausifyMode::Definitional,
                           g, d.definitionalFactor);
        for (const Clause& c : cs)
          if (clause_alpha_eq(c, s.clause)) return true;
        return fail(s, "clause not produced by clausification");
      }
      case Rule::DefEq: {
        auto ro = defined_eq_replace_clause(parent(s, 0).clause);
        if (!ro) return fail(s, "no defined equality found in parent");
        if (!clause_match(s, ro->clause)) return fail(s, "conclusion mismatch");
        return true;
      }
      case Rule::Inst:
      case Rule::PS: {
        Clause expect = apply_substitution(parent(s, 0).clause, s.subst);
        if (!clause_match(s, expect)) return fail(s, "substitution result mismatch");
        return true;
      }
      case Rule::Para: {
        FreshGen g = fresh_at(s);
        Clause fromR = rename_apart(parent(s, 0).clause, g);
        return member(s, paramodulate(fromR, parent(s, 1).clause));
      }
      case Rule::EqFac:
        return member(s, equality_factor(parent(s, 0).clause));
      case Rule::FuncExt: {
        FreshGen g = fresh_at(s);
        auto ro = func_ext(parent(s, 0).clause, g);
        if (!ro) return fail(s, "no functional literal in parent");
        if (!clause_match(s, ro->clause)) return fail(s, "conclusion mismatch");
        return true;
      }
      case Rule::BoolExt:
        return member(s, bool_ext(parent(s, 0).clause));
      case Rule::Choice: {
        FreshGen g = fresh_at(s);
        return member(s, choice_rule(parent(s, 0).clause, g));
      }
      case Rule::FS: {
        FreshGen g = fresh_at(s);
        auto ro = func_synth(parent(s, 0).clause, g);
        if (!ro) return fail(s, "function synthesis not applicable");
        if (!clause_match(s, ro->clause)) return fail(s, "conclusion mismatch");
        return true;
      }
      case Rule::INJ: {
        FreshGen g = fresh_at(s);
        auto ro = inj_rule(parent(s, 0).clause, g);
        if (!ro) return fail(s, "injectivity pattern not matched");
        if (!clause_match(s, ro->clause)) return fail(s, "conclusion mismatch");
        return true;
      }
      case Rule::Simp: {
        FreshGen g = fresh_at(s);
        for (const Clause& c : renormalize(parent(s, 0).clause, g))
          if (clause_alpha_eq(c, s.clause)) return true;
        auto oc = simp_trivial(parent(s, 0).clause);
        if (oc.status == ContractOutcome::Status::Simplified &&
            clause_alpha_eq(oc.clause, s.clause))
          return true;
        return fail(s, "conclusion not a simplification of parent");
      }
      case Rule::DER: {
        if (s.coords.empty()) {
          auto oc = der_destructive(parent(s, 0).clause);
          if (oc.status == ContractOutcome::Status::Simplified &&
              clause_alpha_eq(oc.clause, s.clause))
            return true;
          return fail(s, "destructive equality resolution mismatch");
        }
        const Clause& pc = parent(s, 0).clause;
        std::uint32_t li = s.coords[0];
        if (li >= pc.lits.size()) return fail(s, "literal index out of range");
        // exact eager-pattern form first
        {
          Clause expect;
          expect.ps_count = pc.ps_count;
          for (std::uint32_t k = 0; k < pc.lits.size(); ++k)
            if (k != li) expect.lits.push_back(apply_substitution(pc.lits[k], s.subst));
          if (clause_alpha_eq(expect, s.clause)) return true;
        }
        FreshGen g = fresh_at(s);
        UnificationProblem up;
        up.constraints = {{pc.lits[li].lhs, pc.lits[li].rhs}};
        up.depth = d.unificationDepth;
        for (PreUnifier& u : preunify_all(up, g, 64)) {
          Clause cand;
          cand.ps_count = pc.ps_count;
          for (std::uint32_t k = 0; k < pc.lits.size(); ++k)
            if (k != li) cand.lits.push_back(apply_substitution(pc.lits[k], u.subst));
          for (auto& [a, b] : u.residual)
            cand.lits.push_back(mk_literal(a, b, false, true));
          if (clause_alpha_eq(cand, s.clause)) return true;
        }
        return fail(s, "no pre-unifier reproduces the conclusion");
      }
      case Rule::Rewrite: {
        std::vector<UnitPremise> units;
        for (std::size_t i = 1; i < s.parents.size(); ++i)
          units.push_back({s.parents[i], &parent(s, i).clause});
        std::vector<std::uint64_t> used;
        auto oc = rewrite_with_units(parent(s, 0).clause, units, used);
        if (oc.status == ContractOutcome::Status::Simplified &&
            clause_alpha_eq(oc.clause, s.clause))
          return true;
        return fail(s, "rewrite result mismatch");
      }
      case Rule::UnitCut: {
        std::vector<UnitPremise> units;
        for (std::size_t i = 1; i < s.parents.size(); ++i)
          units.push_back({s.parents[i], &parent(s, i).clause});
        std::vector<std::uint64_t> used;
        auto oc = unit_cut(parent(s, 0).clause, units, used);
        if (oc.status == ContractOutcome::Status::Simplified &&
            clause_alpha_eq(oc.clause, s.clause))
          return true;
        return fail(s, "unit cut result mismatch");
      }
    }
    throw ReplayError("unknown rule in step " + std::to_string(s.id));
  }
};

}  // namespace

bool replay_check(const Derivation& d, std::string* firstFailure) {
  if (d.steps.empty()) throw ReplayError("empty derivation");
  Replayer r(d);
  if (!r.check_embed_steps()) {
    if (firstFailure) *firstFailure = r.failure;
    return false;
  }
  for (const Step& s : d.steps) {
    if (!r.check_step(s)) {
      if (firstFailure) *firstFailure = r.failure;
      return false;
    }
  }
  return true;
}

}  // namespace hop
