#include "hop/saturate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <cstdio>
#include <cstdlib>

#include "hop/calculus.hpp"
#include "hop/clausify.hpp"
#include "hop/modal.hpp"
#include "hop/unify.hpp"

namespace hop {

void ClauseQueue::push(std::uint64_t id, std::uint32_t weight) {
  items_.push_back({id, weight});
}

std::uint64_t ClauseQueue::pick() {
  if (items_.empty()) throw std::logic_error("pick on empty clause queue");
  bool byAge = ratio_ > 0 && (picks_ % (ratio_ + 1)) == ratio_;
  ++picks_;
  std::size_t best = 0;
  for (std::size_t i = 1; i < items_.size(); ++i) {
    if (byAge) {
      if (items_[i].id < items_[best].id) best = i;
    } else {
      if (items_[i].weight < items_[best].weight ||
          (items_[i].weight == items_[best].weight && items_[i].id < items_[best].id))
        best = i;
    }
  }
  std::uint64_t id = items_[best].id;
  items_.erase(items_.begin() + best);
  return id;
}

void ClauseQueue::erase(std::uint64_t id) {
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (items_[i].id == id) {
      items_.erase(items_.begin() + i);
      return;
    }
}

namespace {

constexpr std::size_t kMaxUnifiersPerLiteral = 16;

struct ProverState {
  const Config& cfg;
  std::string problemName;
  FreshGen fresh;
  std::vector<Step> log;  // log[id-1]
  ClauseQueue queue{5};
  std::vector<std::uint64_t> active;
  std::set<std::size_t> seen;         // canonical clause hashes (processed)
  std::set<std::size_t> rawSeen;      // canonical hashes of raw conclusions
  std::set<std::size_t> choiceSeen;   // canonical hashes of instantiated predicates
  GeneralBindingSpec gb;
  std::optional<LogicSpec> logicSpec;
  // the original problem's symbol names; replay reconstructs fresh naming
  // and the embedding from these
  std::shared_ptr<const std::set<std::string>> derivationAvoid;
  std::chrono::steady_clock::time_point deadline;
  std::uint64_t emptyId = 0;
  std::uint64_t iterations = 0;
  std::uint64_t duplicatesDropped = 0;  // redundancy log, counted not stored
  // disposition per step id: every clause is accounted for
  enum class Disp { Formula, Queued, Active, Redundant, Replaced, Empty };
  std::vector<Disp> disp;

  explicit ProverState(const Config& c) : cfg(c) {}

  Step& step(std::uint64_t id) { return log[id - 1]; }

  std::uint64_t add_step(Step s) {
    s.id = log.size() + 1;
    log.push_back(std::move(s));
    disp.push_back(log.back().isClause ? Disp::Redundant : Disp::Formula);
    return log.back().id;
  }

  bool timed_out() const { return std::chrono::steady_clock::now() > deadline; }
};

Term negate_formula(const Term& f) { return beta_eta_normalize(mk_not(f)); }

// renormalize + boolean-domain instantiation + eager pattern solving of
// constraint literals; queues the surviving clauses. Returns true when the
// empty clause appeared.
bool ingest(ProverState& st, std::uint64_t id);

bool queue_clause(ProverState& st, std::uint64_t id) {
  const Clause c = st.step(id).clause;  // copy: add_step may reallocate the log
  if (c.empty()) {
    st.disp[id - 1] = ProverState::Disp::Empty;
    st.emptyId = id;
    return true;
  }
  // exhaustive boolean instantiation replaces the clause by its instances
  auto insts = heuristic_instantiate(c);
  if (!insts.empty()) {
    st.disp[id - 1] = ProverState::Disp::Replaced;
    for (auto& [inst, sigma] : insts) {
      Step s;
      s.rule = Rule::Inst;
      s.isClause = true;
      s.clause = inst;
      s.parents = {id};
      s.subst = sigma;
      s.fresh = st.fresh.snapshot();
      std::uint64_t nid = st.add_step(std::move(s));
      if (ingest(st, nid)) return true;
    }
    return false;
  }
  std::size_t h = clause_canonical_hash(c);
  if (st.seen.count(h)) {
    st.disp[id - 1] = ProverState::Disp::Redundant;
    return false;
  }
  st.seen.insert(h);
  st.queue.push(id, c.weight());
  st.disp[id - 1] = ProverState::Disp::Queued;

  // eager pattern unification on constraint literals
  for (std::uint32_t li = 0; li < c.lits.size(); ++li) {
    const Literal& l = c.lits[li];
    if (l.pos || !l.constraint) continue;
    FreshGen::Snapshot snap = st.fresh.snapshot();
    Substitution mgu;
    UnificationProblem up;
    up.constraints = {{l.lhs, l.rhs}};
    up.depth = st.cfg.unificationDepth;
    if (pattern_unify(up, st.fresh, mgu) == PatternStatus::MGU) {
      Clause reduced;
      reduced.ps_count = c.ps_count;
      for (std::uint32_t k = 0; k < c.lits.size(); ++k)
        if (k != li) reduced.lits.push_back(apply_substitution(c.lits[k], mgu));
      Step s;
      s.rule = Rule::DER;
      s.isClause = true;
      s.clause = std::move(reduced);
      s.parents = {id};
      s.subst = mgu;
      s.coords = {li};
      s.fresh = snap;
      std::uint64_t nid = st.add_step(std::move(s));
      if (ingest(st, nid)) return true;
    }
  }
  return false;
}

bool ingest(ProverState& st, std::uint64_t id) {
  Clause c = st.step(id).clause;
  FreshGen::Snapshot snap = st.fresh.snapshot();
  std::vector<Clause> rs = renormalize(c, st.fresh);
  if (rs.size() == 1 && clause_alpha_eq(rs[0], c) && rs[0].lits.size() == c.lits.size()) {
    st.fresh.restore(snap);
    return queue_clause(st, id);
  }
  st.disp[id - 1] = ProverState::Disp::Replaced;
  for (Clause& r : rs) {
    Step s;
    s.rule = Rule::Simp;
    s.isClause = true;
    s.clause = std::move(r);
    s.parents = {id};
    s.fresh = snap;
    std::uint64_t nid = st.add_step(std::move(s));
    if (queue_clause(st, nid)) return true;
  }
  return false;
}

// forward simplification of the picked clause against the active set;
// returns 0 when the clause is redundant
std::uint64_t contract_given(ProverState& st, std::uint64_t id) {
  // copies: add_step below may reallocate the log
  std::vector<std::pair<std::uint64_t, Clause>> unitClauses;
  for (std::uint64_t a : st.active) {
    const Clause& ac = st.step(a).clause;
    if (ac.lits.size() == 1) unitClauses.emplace_back(a, ac);
  }
  std::vector<UnitPremise> units;
  units.reserve(unitClauses.size());
  for (auto& [uid, uc] : unitClauses) units.push_back({uid, &uc});
  std::uint64_t cur = id;
  for (int pass = 0; pass < 10; ++pass) {
    bool changed = false;
    auto record = [&](Rule rule, ContractOutcome&& oc,
                      std::vector<std::uint64_t> extraParents) -> bool {
      if (oc.status == ContractOutcome::Status::Redundant) {
        st.disp[cur - 1] = ProverState::Disp::Redundant;
        cur = 0;
        return true;
      }
      if (oc.status == ContractOutcome::Status::Simplified) {
        Step s;
        s.rule = rule;
        s.isClause = true;
        s.clause = std::move(oc.clause);
        s.parents = {cur};
        for (std::uint64_t p : extraParents) s.parents.push_back(p);
        s.fresh = st.fresh.snapshot();
        std::uint64_t nid = st.add_step(std::move(s));
        st.disp[cur - 1] = ProverState::Disp::Replaced;
        st.disp[nid - 1] = ProverState::Disp::Queued;
        cur = nid;
        changed = true;
      }
      return false;
    };
    if (record(Rule::Simp, simp_trivial(st.step(cur).clause), {})) return 0;
    if (record(Rule::DER, der_destructive(st.step(cur).clause), {})) return 0;
    {
      std::vector<std::uint64_t> used;
      auto oc = rewrite_with_units(st.step(cur).clause, units, used);
      if (record(Rule::Rewrite, std::move(oc), used)) return 0;
    }
    {
      std::vector<std::uint64_t> used;
      auto oc = unit_cut(st.step(cur).clause, units, used);
      if (record(Rule::UnitCut, std::move(oc), used)) return 0;
    }
    if (!changed) break;
  }
  // subsumption against active clauses
  for (std::uint64_t a : st.active) {
    if (subsumes(st.step(a).clause, st.step(cur).clause)) {
      st.disp[cur - 1] = ProverState::Disp::Redundant;
      return 0;
    }
  }
  return cur;
}

bool record_outputs(ProverState& st, Rule rule, std::vector<std::uint64_t> parents,
                    std::vector<RuleOutput>&& outs, FreshGen::Snapshot snap) {
  for (RuleOutput& ro : outs) {
    // the same conclusion regenerated from another premise pair is dropped
    // before renormalization mints fresh symbols for it
    std::size_t rawHash = clause_canonical_hash(ro.clause);
    if (st.rawSeen.count(rawHash)) {
      ++st.duplicatesDropped;
      continue;
    }
    st.rawSeen.insert(rawHash);
    // normalize and filter first so discarded conclusions never enter the log
    FreshGen::Snapshot preNorm = st.fresh.snapshot();
    std::vector<Clause> rs = renormalize(ro.clause, st.fresh);
    bool unchanged = rs.size() == 1 && rs[0].lits.size() == ro.clause.lits.size() &&
                     clause_alpha_eq(rs[0], ro.clause);
    std::vector<Clause> kept;
    for (Clause& r : rs) {
      if (!r.empty() && st.seen.count(clause_canonical_hash(r))) {
        ++st.duplicatesDropped;
        continue;
      }
      kept.push_back(std::move(r));
    }
    if (kept.empty()) {
      st.fresh.restore(preNorm);
      ++st.duplicatesDropped;
      continue;
    }
    Step s;
    s.rule = rule;
    s.isClause = true;
    s.clause = std::move(ro.clause);
    s.parents = parents;
    s.subst = std::move(ro.subst);
    s.coords = std::move(ro.coords);
    s.path = std::move(ro.path);
    s.fresh = snap;
    std::uint64_t rawId = st.add_step(std::move(s));
    if (unchanged) {
      st.fresh.restore(preNorm);
      if (queue_clause(st, rawId)) return true;
      continue;
    }
    st.disp[rawId - 1] = ProverState::Disp::Replaced;
    for (Clause& r : kept) {
      Step child;
      child.rule = Rule::Simp;
      child.isClause = true;
      child.clause = std::move(r);
      child.parents = {rawId};
      child.fresh = preNorm;
      std::uint64_t nid = st.add_step(std::move(child));
      if (queue_clause(st, nid)) return true;
    }
  }
  return false;
}

// negative literals are unification constraints: solve them with budgeted
// pre-unification, emitting the resolved clause per unifier
bool solve_negative_literals(ProverState& st, std::uint64_t gid) {
  const Clause c = st.step(gid).clause;
  for (std::uint32_t li = 0; li < c.lits.size(); ++li) {
    const Literal& l = c.lits[li];
    if (l.pos) continue;
    if (term_eq(l.lhs, l.rhs)) continue;
    FreshGen::Snapshot snap = st.fresh.snapshot();
    UnificationProblem up;
    up.constraints = {{l.lhs, l.rhs}};
    up.depth = st.cfg.unificationDepth;
    auto unifiers = preunify_all(up, st.fresh, kMaxUnifiersPerLiteral);
    std::vector<RuleOutput> outs;
    for (PreUnifier& u : unifiers) {
      RuleOutput ro;
      ro.clause.ps_count = c.ps_count;
      for (std::uint32_t k = 0; k < c.lits.size(); ++k)
        if (k != li) ro.clause.lits.push_back(apply_substitution(c.lits[k], u.subst));
      for (auto& [s, t] : u.residual)
        ro.clause.lits.push_back(mk_literal(s, t, false, /*constraint=*/true));
      ro.subst = u.subst;
      ro.coords = {li};
      bool dup = false;
      for (const RuleOutput& prev : outs)
        if (clause_alpha_eq(prev.clause, ro.clause)) dup = true;
      if (!dup) outs.push_back(std::move(ro));
    }
    if (record_outputs(st, Rule::DER, {gid}, std::move(outs), snap)) return true;
  }
  return false;
}

// function synthesis is gated: fire only when the joint pre-unification of
// all same-head constraints finds nothing
bool try_func_synth(ProverState& st, std::uint64_t gid) {
  if (!st.cfg.fsEnabled) return false;
  const Clause c = st.step(gid).clause;
  FreshGen::Snapshot snap = st.fresh.snapshot();
  auto ro = func_synth(c, st.fresh);
  if (!ro) {
    st.fresh.restore(snap);
    return false;
  }
  // gate: fire only when the synthesized head's constraints have no joint
  // pre-unifier
  std::uint64_t var = ro->subst.entries().begin()->first;
  std::vector<std::pair<Term, Term>> cs;
  for (const Literal& l : c.lits) {
    if (l.pos) continue;
    for (int side = 0; side < 2; ++side) {
      const Term& f = side == 0 ? l.lhs : l.rhs;
      if (f->tag() == Tag::App && f->head()->tag() == Tag::Free &&
          f->head()->var_id() == var) {
        cs.emplace_back(l.lhs, l.rhs);
        break;
      }
    }
  }
  if (cs.size() < 2) {
    st.fresh.restore(snap);
    return false;
  }
  FreshGen::Snapshot probe = st.fresh.snapshot();
  UnificationProblem up;
  up.constraints = cs;
  up.depth = st.cfg.unificationDepth;
  bool solvable = !preunify_all(up, st.fresh, 1).empty();
  st.fresh.restore(probe);
  if (solvable) {
    st.fresh.restore(snap);
    return false;
  }
  std::vector<RuleOutput> outs;
  outs.push_back(std::move(*ro));
  return record_outputs(st, Rule::FS, {gid}, std::move(outs), snap);
}

ProverResult finish(ProverState& st, SzsStatus status) {
  ProverResult r;
  r.status = status;
  if (std::getenv("HOP_STATS")) {
    std::map<std::string, std::uint64_t> hist;
    for (const Step& s : st.log) hist[rule_name(s.rule)]++;
    for (auto& [k, v] : hist)
      std::fprintf(stderr, "  %s: %llu\n", k.c_str(), (unsigned long long)v);
    std::fprintf(stderr, "  dup-dropped: %llu\n",
                 (unsigned long long)st.duplicatesDropped);
  }
  r.generated = st.log.size();
  r.activeSize = st.active.size();
  r.iterations = st.iterations;
  if (st.emptyId == 0) return r;
  // collect ancestors of the empty clause
  std::set<std::uint64_t> keep;
  std::vector<std::uint64_t> stack{st.emptyId};
  bool usesConjecture = false;
  while (!stack.empty()) {
    std::uint64_t id = stack.back();
    stack.pop_back();
    if (keep.count(id)) continue;
    keep.insert(id);
    const Step& s = st.step(id);
    if (s.role == Role::Conjecture || s.role == Role::NegatedConjecture)
      usesConjecture = true;
    for (std::uint64_t p : s.parents) stack.push_back(p);
  }
  bool haveConjecture = false;
  for (const Step& s : st.log)
    if (s.rule == Rule::Input && s.role == Role::Conjecture) haveConjecture = true;
  r.status = (haveConjecture && usesConjecture) ? SzsStatus::Theorem
                                                : SzsStatus::ContradictoryAxioms;
  Derivation d;
  d.problemName = st.problemName;
  d.unificationDepth = st.cfg.unificationDepth;
  d.definitionalFactor = st.cfg.definitionalFactor;
  d.logicSpec = st.logicSpec;
  d.avoidNames = st.derivationAvoid ? st.derivationAvoid : st.fresh.avoid;
  for (const Step& s : st.log)
    if (keep.count(s.id)) d.steps.push_back(s);
  r.derivation = std::move(d);
  return r;
}

ProverResult run_saturation(ProverState& st, const std::vector<std::uint64_t>& inputs) {
  using std::chrono::steady_clock;
  st.deadline = steady_clock::now() +
                std::chrono::microseconds(
                    static_cast<std::int64_t>(st.cfg.timeLimitSeconds * 1e6));

  // negate the conjecture
  std::vector<std::pair<std::uint64_t, Term>> toClausify;
  for (std::uint64_t id : inputs) {
    const Step& s = st.step(id);
    if (s.role == Role::Conjecture) {
      Step n;
      n.rule = Rule::NegConj;
      n.role = Role::NegatedConjecture;
      n.formula = negate_formula(s.formula);
      n.parents = {id};
      n.fresh = st.fresh.snapshot();
      std::uint64_t nid = st.add_step(std::move(n));
      toClausify.emplace_back(nid, st.step(nid).formula);
    } else {
      toClausify.emplace_back(id, s.formula);
    }
  }

  // collect the PS type range from the inputs
  {
    std::vector<std::pair<Symbol, Type>> dummy;
    std::set<Type> tys;
    std::vector<Type> order;
    std::function<void(const Term&)> scan = [&](const Term& t) {
      if (!tys.count(t->type()) && !t->type()->is_fun()) {
        tys.insert(t->type());
        order.push_back(t->type());
      }
      if (t->tag() == Tag::Lam) scan(t->body());
      if (t->tag() == Tag::App) {
        scan(t->head());
        for (const Term& a : t->spine()) scan(a);
      }
    };
    for (auto& [id, f] : toClausify) scan(f);
    st.gb.useNot = st.cfg.psNot;
    st.gb.useOr = st.cfg.psOr;
    st.gb.usePi = st.cfg.psPi;
    st.gb.useEq = st.cfg.psEq;
    st.gb.types = order;
  }

  // clausify, replace defined equalities, ingest
  for (auto& [pid, f] : toClausify) {
    FreshGen::Snapshot snap = st.fresh.snapshot();
    std::vector<Clause> cs = clausify(miniscope(f), ClausifyMode::Definitional,
                                      st.fresh, st.cfg.definitionalFactor);
    for (Clause& c : cs) {
      Step s;
      s.rule = Rule::Clausify;
      s.isClause = true;
      s.clause = std::move(c);
      s.parents = {pid};
      s.fresh = snap;
      std::uint64_t nid = st.add_step(std::move(s));
      std::uint64_t useId = nid;
      FreshGen::Snapshot dsnap = st.fresh.snapshot();
      if (auto ro = defined_eq_replace_clause(st.step(nid).clause)) {
        Step ds;
        ds.rule = Rule::DefEq;
        ds.isClause = true;
        ds.clause = std::move(ro->clause);
        ds.parents = {nid};
        ds.fresh = dsnap;
        useId = st.add_step(std::move(ds));
        st.disp[nid - 1] = ProverState::Disp::Replaced;
      }
      if (ingest(st, useId)) return finish(st, SzsStatus::Theorem);
    }
  }

  // given-clause loop
  for (std::uint64_t iter = 0; iter < st.cfg.iterationCap; ++iter) {
    st.iterations = iter;
    if (st.timed_out()) return finish(st, SzsStatus::Timeout);
    if (st.queue.empty()) return finish(st, SzsStatus::GaveUp);
    std::uint64_t gid = st.queue.pick();
    gid = contract_given(st, gid);
    if (gid == 0) continue;
    if (st.step(gid).clause.empty()) {
      st.disp[gid - 1] = ProverState::Disp::Empty;
      st.emptyId = gid;
      return finish(st, SzsStatus::Theorem);
    }
    st.active.push_back(gid);
    st.disp[gid - 1] = ProverState::Disp::Active;

    // generating inferences
    for (std::uint64_t aid : st.active) {
      if (st.timed_out()) return finish(st, SzsStatus::Timeout);
      const Clause& a = st.step(aid).clause;
      {
        FreshGen::Snapshot snap = st.fresh.snapshot();
        Clause fromR = rename_apart(st.step(gid).clause, st.fresh);
        auto outs = paramodulate(fromR, a);
        if (record_outputs(st, Rule::Para, {gid, aid}, std::move(outs), snap))
          return finish(st, SzsStatus::Theorem);
      }
      if (aid != gid) {
        FreshGen::Snapshot snap = st.fresh.snapshot();
        Clause fromR = rename_apart(st.step(aid).clause, st.fresh);
        auto outs = paramodulate(fromR, st.step(gid).clause);
        if (record_outputs(st, Rule::Para, {aid, gid}, std::move(outs), snap))
          return finish(st, SzsStatus::Theorem);
      }
    }
    {
      FreshGen::Snapshot snap = st.fresh.snapshot();
      if (record_outputs(st, Rule::EqFac, {gid},
                         equality_factor(st.step(gid).clause), snap))
        return finish(st, SzsStatus::Theorem);
    }
    if (st.step(gid).clause.lits.size() <= 2 && st.step(gid).clause.ps_count < 2) {
      FreshGen::Snapshot snap = st.fresh.snapshot();
      if (record_outputs(st, Rule::PS, {gid},
                         primitive_substitution(st.step(gid).clause, st.gb, st.fresh),
                         snap))
        return finish(st, SzsStatus::Theorem);
    }
    {
      FreshGen::Snapshot snap = st.fresh.snapshot();
      if (auto ro = func_ext(st.step(gid).clause, st.fresh)) {
        std::vector<RuleOutput> outs;
        outs.push_back(std::move(*ro));
        if (record_outputs(st, Rule::FuncExt, {gid}, std::move(outs), snap))
          return finish(st, SzsStatus::Theorem);
      } else {
        st.fresh.restore(snap);
      }
    }
    {
      FreshGen::Snapshot snap = st.fresh.snapshot();
      if (record_outputs(st, Rule::BoolExt, {gid}, bool_ext(st.step(gid).clause),
                         snap))
        return finish(st, SzsStatus::Theorem);
    }
    {
      FreshGen::Snapshot snap = st.fresh.snapshot();
      auto outs = choice_rule(st.step(gid).clause, st.fresh);
      std::vector<RuleOutput> freshOnes;
      for (RuleOutput& ro : outs) {
        std::size_t h = clause_canonical_hash(ro.clause);
        if (st.choiceSeen.count(h)) continue;
        st.choiceSeen.insert(h);
        freshOnes.push_back(std::move(ro));
      }
      if (record_outputs(st, Rule::Choice, {gid}, std::move(freshOnes), snap))
        return finish(st, SzsStatus::Theorem);
    }
    {
      FreshGen::Snapshot snap = st.fresh.snapshot();
      if (auto ro = inj_rule(st.step(gid).clause, st.fresh)) {
        std::vector<RuleOutput> outs;
        outs.push_back(std::move(*ro));
        if (record_outputs(st, Rule::INJ, {gid}, std::move(outs), snap))
          return finish(st, SzsStatus::Theorem);
      } else {
        st.fresh.restore(snap);
      }
    }
    if (solve_negative_literals(st, gid)) return finish(st, SzsStatus::Theorem);
    if (try_func_synth(st, gid)) return finish(st, SzsStatus::Theorem);
  }
  return finish(st, SzsStatus::Timeout);
}

}  // namespace

ProverResult saturate(const Problem& p, const Config& cfg) {
  if (p.logicSpec)
    throw std::logic_error("saturate expects a classical problem; embed first");
  ProverState st(cfg);
  st.problemName = p.sourcePath;
  st.fresh.avoid = p.usedNames;
  st.derivationAvoid = p.usedNames;
  try {
    std::vector<std::uint64_t> inputs;
    for (const auto& af : p.formulas) {
      if (af.role != Role::Axiom && af.role != Role::Definition &&
          af.role != Role::Conjecture && af.role != Role::NegatedConjecture)
        continue;
      check_types(af.formula);
      Step s;
      s.rule = Rule::Input;
      s.role = af.role;
      s.inputName = af.name;
      s.formula = af.formula;
      inputs.push_back(st.add_step(std::move(s)));
    }
    return run_saturation(st, inputs);
  } catch (const std::exception& e) {
    ProverResult r;
    r.status = SzsStatus::Error;
    r.message = e.what();
    return r;
  }
}

ProverResult prove(const Problem& p, const Config& cfg) {
  if (!p.logicSpec) return saturate(p, cfg);
  ProverState st(cfg);
  st.problemName = p.sourcePath;
  st.logicSpec = p.logicSpec;
  st.derivationAvoid = p.usedNames;
  try {
    EmbedOutput emb = embed_problem(p);
    st.fresh.avoid = emb.classical.usedNames;
    std::vector<std::uint64_t> inputs;
    // original modal statements, rendered as comments in the certificate
    std::vector<std::uint64_t> modalIds;
    std::size_t k = 0;
    for (const auto& af : p.formulas) {
      if (af.role != Role::Axiom && af.role != Role::Definition &&
          af.role != Role::Conjecture && af.role != Role::NegatedConjecture)
        continue;
      Step s;
      s.rule = Rule::Input;
      s.role = af.role;
      s.inputName = af.name;
      s.formula = af.formula;
      s.printable = false;
      std::uint64_t id = st.add_step(std::move(s));
      modalIds.push_back(id);
      Step e;
      e.rule = Rule::Embed;
      e.role = af.role;
      e.isClause = false;
      e.formula = emb.embedded[k++];
      e.parents = {id};
      inputs.push_back(st.add_step(std::move(e)));
    }
    for (const auto& [name, ax] : emb.extraAxioms) {
      Step e;
      e.rule = Rule::Embed;
      e.role = Role::Axiom;
      e.formula = ax;
      e.inputName = name;
      inputs.push_back(st.add_step(std::move(e)));
    }
    return run_saturation(st, inputs);
  } catch (const std::exception& e) {
    ProverResult r;
    r.status = SzsStatus::Error;
    r.message = e.what();
    return r;
  }
}

}  // namespace hop
