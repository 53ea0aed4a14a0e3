#include "hop/modal.hpp"

#include <algorithm>

namespace hop {

namespace {

std::string pick_name(const std::set<std::string>& avoid, std::string base) {
  while (avoid.count(base)) base += "_";
  return base;
}

struct Embedder {
  LogicSpec spec;
  std::set<std::string> used;
  Type mu;
  Symbol muSym;
  Term rel;   // null for S5
  Term cw;    // null unless local consequence
  // lazily minted existence guards per lifted type, in minting order
  std::vector<std::pair<Type, Term>> eiw;
  int eiwCounter = 1;

  Embedder(const LogicSpec& s, const std::set<std::string>& avoid)
      : spec(s), used(avoid) {
    std::string muName = pick_name(used, "mworld");
    used.insert(muName);
    muSym = intern(muName);
    mu = base_type(muSym);
    if (spec.system != ModalSystem::S5) {
      std::string rn = pick_name(used, "mrel");
      used.insert(rn);
      rel = mk_const(intern(rn), fun_type(mu, fun_type(mu, type_o())));
    }
    if (spec.consequence == Consequence::Local) {
      std::string cn = pick_name(used, "mcur");
      used.insert(cn);
      cw = mk_const(intern(cn), mu);
    }
  }

  Type lift_type(Type t) {
    if (t == type_o()) return fun_type(mu, type_o());
    if (t->is_base()) return t;
    return fun_type(lift_type(t->arg()), lift_type(t->result()));
  }

  Term existence_guard(Type liftedTau) {
    for (const auto& [ty, c] : eiw)
      if (ty == liftedTau) return c;
    std::string n = pick_name(used, "meiw" + std::to_string(eiwCounter++));
    used.insert(n);
    Term c = mk_const(intern(n), fun_type(liftedTau, fun_type(mu, type_o())));
    eiw.emplace_back(liftedTau, c);
    return c;
  }

  // combinators for the lifted logical heads; each takes lifted operands
  Term lifted_not() {
    Type p = fun_type(mu, type_o());
    // \a w. ~(a w)
    return mk_lam(p, mk_lam(mu, mk_not(mk_app1(mk_bound(1, p), mk_bound(0, mu)))));
  }
  Term lifted_or() {
    Type p = fun_type(mu, type_o());
    return mk_lam(
        p, mk_lam(p, mk_lam(mu, mk_or(mk_app1(mk_bound(2, p), mk_bound(0, mu)),
                                      mk_app1(mk_bound(1, p), mk_bound(0, mu))))));
  }
  Term lifted_box() {
    Type p = fun_type(mu, type_o());
    if (spec.system == ModalSystem::S5) {
      // \a w. ! [v]: a v   (universal accessibility)
      return mk_lam(p, mk_lam(mu, mk_forall(mu, mk_app1(mk_bound(2, p),
                                                        mk_bound(0, mu)))));
    }
    // \a w. ! [v]: ~(rel w v) | a v
    return mk_lam(
        p, mk_lam(mu, mk_forall(mu, mk_or(mk_not(mk_app(shift(rel, 3),
                                                        {mk_bound(1, mu),
                                                         mk_bound(0, mu)})),
                                          mk_app1(mk_bound(2, p), mk_bound(0, mu))))));
  }
  Term lifted_dia() {
    Type p = fun_type(mu, type_o());
    Term inner = mk_app1(shift(lifted_not(), 1), mk_bound(0, p));
    Term boxed = mk_app1(shift(lifted_box(), 1), inner);
    return mk_lam(p, mk_app1(shift(lifted_not(), 1), boxed));
  }
  Term lifted_pi(Type tau) {
    Type ltau = lift_type(tau);
    Type p = fun_type(ltau, fun_type(mu, type_o()));
    if (spec.quantification == Quantification::Constant) {
      // \a w. ! [x: ltau]: a x w
      return mk_lam(
          p, mk_lam(mu, mk_forall(ltau, mk_app(mk_bound(2, p),
                                               {mk_bound(0, ltau), mk_bound(1, mu)}))));
    }
    Term guard = existence_guard(ltau);
    // \a w. ! [x]: ~(eiw x w) | a x w
    return mk_lam(
        p,
        mk_lam(mu, mk_forall(ltau, mk_or(mk_not(mk_app(shift(guard, 3),
                                                       {mk_bound(0, ltau),
                                                        mk_bound(1, mu)})),
                                         mk_app(mk_bound(2, p),
                                                {mk_bound(0, ltau), mk_bound(1, mu)})))));
  }
  Term lifted_eq(Type tau) {
    Type ltau = lift_type(tau);
    // \x y w. x = y
    return mk_lam(
        ltau, mk_lam(ltau, mk_lam(mu, mk_equation(mk_bound(2, ltau),
                                                  mk_bound(1, ltau)))));
  }
  Term lifted_true() { return mk_lam(mu, shift(t_true(), 1)); }

  Term lift(const Term& t) {
    switch (t->tag()) {
      case Tag::Const: {
        Symbol s = t->sym();
        if (s == sym_true()) return lifted_true();
        if (s == sym_not()) return lifted_not();
        if (s == sym_or()) return lifted_or();
        if (s == sym_box()) return lifted_box();
        if (s == sym_dia()) return lifted_dia();
        if (s == sym_pi()) return lifted_pi(t->type()->arg()->arg());
        if (s == sym_eq()) return lifted_eq(t->type()->arg());
        if (s == sym_choice())
          throw std::logic_error("choice operator not supported in modal problems");
        return mk_const(s, lift_type(t->type()));
      }
      case Tag::Free:
        return mk_free(t->var_id(), lift_type(t->type()));
      case Tag::Bound:
        return mk_bound(t->index(), lift_type(t->type()));
      case Tag::Lam:
        return mk_lam(lift_type(t->binder_type()), lift(t->body()));
      case Tag::App: {
        Term h = lift(t->head());
        std::vector<Term> sp;
        for (const Term& a : t->spine()) sp.push_back(lift(a));
        return mk_app(h, std::move(sp));
      }
    }
    throw std::logic_error("unreachable");
  }

  // formula of type $o  ->  wrapped classical formula of type $o
  Term embed(const Term& f) {
    Term lifted = beta_eta_normalize(lift(f));
    if (spec.consequence == Consequence::Global)
      return beta_eta_normalize(mk_app1(t_pi(mu), lifted));
    return beta_eta_normalize(mk_app1(lifted, cw));
  }

  std::vector<std::pair<std::string, Term>> frame_axioms() {
    std::vector<std::pair<std::string, Term>> out;
    auto relApp = [&](const Term& w, const Term& v) { return mk_app(rel, {w, v}); };
    switch (spec.system) {
      case ModalSystem::K:
      case ModalSystem::S5:
        break;
      case ModalSystem::D: {
        // ! [w]: ? [v]: rel w v
        Term f = mk_forall(
            mu, mk_exists(mu, relApp(mk_bound(1, mu), mk_bound(0, mu))));
        out.emplace_back("frame_serial", beta_eta_normalize(f));
        break;
      }
      case ModalSystem::T: {
        Term f = mk_forall(mu, relApp(mk_bound(0, mu), mk_bound(0, mu)));
        out.emplace_back("frame_reflexive", beta_eta_normalize(f));
        break;
      }
      case ModalSystem::S4: {
        Term refl = mk_forall(mu, relApp(mk_bound(0, mu), mk_bound(0, mu)));
        out.emplace_back("frame_reflexive", beta_eta_normalize(refl));
        // ! [w u v]: ~(r w u) | ~(r u v) | r w v
        Term tr = mk_forall(
            mu,
            mk_forall(mu, mk_forall(mu, mk_or(mk_or(mk_not(relApp(mk_bound(2, mu),
                                                                  mk_bound(1, mu))),
                                                    mk_not(relApp(mk_bound(1, mu),
                                                                  mk_bound(0, mu)))),
                                              relApp(mk_bound(2, mu),
                                                     mk_bound(0, mu))))));
        out.emplace_back("frame_transitive", beta_eta_normalize(tr));
        break;
      }
    }
    return out;
  }

  std::vector<std::pair<std::string, Term>> domain_axioms() {
    std::vector<std::pair<std::string, Term>> out;
    int i = 1;
    for (const auto& [ltau, guard] : eiw) {
      std::string suffix = std::to_string(i++);
      if (spec.quantification == Quantification::Cumulative) {
        Term mono;
        if (spec.system == ModalSystem::S5) {
          // ! [x w v]: ~(eiw x w) | eiw x v
          mono = mk_forall(
              ltau,
              mk_forall(mu, mk_forall(mu, mk_or(mk_not(mk_app(shift(guard, 3),
                                                              {mk_bound(2, ltau),
                                                               mk_bound(1, mu)})),
                                                mk_app(shift(guard, 3),
                                                       {mk_bound(2, ltau),
                                                        mk_bound(0, mu)})))));
        } else {
          // ! [x w v]: ~(eiw x w) | ~(rel w v) | eiw x v
          mono = mk_forall(
              ltau,
              mk_forall(
                  mu,
                  mk_forall(mu, mk_or(mk_or(mk_not(mk_app(shift(guard, 3),
                                                          {mk_bound(2, ltau),
                                                           mk_bound(1, mu)})),
                                            mk_not(mk_app(shift(rel, 3),
                                                          {mk_bound(1, mu),
                                                           mk_bound(0, mu)}))),
                                      mk_app(shift(guard, 3),
                                             {mk_bound(2, ltau), mk_bound(0, mu)})))));
        }
        out.emplace_back("domain_cumulative_" + suffix, beta_eta_normalize(mono));
      }
      // ! [w]: ? [x]: eiw x w
      Term nonempty = mk_forall(
          mu, mk_exists(ltau, mk_app(shift(guard, 2),
                                     {mk_bound(0, ltau), mk_bound(1, mu)})));
      out.emplace_back("domain_nonempty_" + suffix, beta_eta_normalize(nonempty));
    }
    return out;
  }
};

void forbid_modal_heads(const Term& t) {
  switch (t->tag()) {
    case Tag::Const:
      if (t->sym() == sym_box() || t->sym() == sym_dia())
        throw std::logic_error("modal operator survived the embedding");
      return;
    case Tag::Free:
    case Tag::Bound:
      return;
    case Tag::Lam:
      forbid_modal_heads(t->body());
      return;
    case Tag::App:
      forbid_modal_heads(t->head());
      for (const Term& a : t->spine()) forbid_modal_heads(a);
      return;
  }
}

}  // namespace

EmbedOutput embed_formulas(const std::vector<std::pair<Role, Term>>& inputs,
                           const LogicSpec& spec,
                           std::shared_ptr<const std::set<std::string>> avoid,
                           const std::string& problemName) {
  static const std::set<std::string> empty;
  Embedder emb(spec, avoid ? *avoid : empty);
  EmbedOutput out;
  for (const auto& [role, f] : inputs) {
    (void)role;
    Term e = emb.embed(f);
    forbid_modal_heads(e);
    check_types(e);
    out.embedded.push_back(e);
  }
  out.extraAxioms = emb.frame_axioms();
  for (auto& a : emb.domain_axioms()) out.extraAxioms.push_back(a);
  for (auto& [n, f] : out.extraAxioms) {
    forbid_modal_heads(f);
    check_types(f);
  }

  // assemble the classical problem
  Problem& cp = out.classical;
  cp.sourcePath = problemName;
  cp.usedNames = std::make_shared<std::set<std::string>>(emb.used);
  cp.baseTypes.insert(emb.muSym);
  cp.baseTypeOrder.push_back(emb.muSym);
  std::size_t k = 0;
  for (auto& [n, f] : out.extraAxioms) {
    AnnotatedFormula af;
    af.name = n;
    af.role = Role::Axiom;
    af.formula = f;
    cp.formulas.push_back(af);
    ++k;
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    AnnotatedFormula af;
    af.name = "lifted_" + std::to_string(i + 1);
    af.role = inputs[i].first;
    af.formula = out.embedded[i];
    cp.formulas.push_back(af);
  }
  return out;
}

EmbedOutput embed_problem(const Problem& p) {
  if (!p.logicSpec) throw std::logic_error("problem has no logic specification");
  std::vector<std::pair<Role, Term>> inputs;
  std::vector<std::string> names;
  for (const auto& af : p.formulas) {
    if (af.role == Role::Axiom || af.role == Role::Definition ||
        af.role == Role::Conjecture || af.role == Role::NegatedConjecture) {
      inputs.emplace_back(af.role, af.formula);
      names.push_back(af.name);
    }
  }
  EmbedOutput out = embed_formulas(inputs, *p.logicSpec, p.usedNames, p.sourcePath);
  // keep the original names on the lifted formulas
  std::size_t lifted = 0;
  for (auto& af : out.classical.formulas)
    if (af.name.rfind("lifted_", 0) == 0) af.name = names[lifted++];
  // user base types carry over
  for (Symbol b : p.baseTypeOrder) {
    out.classical.baseTypes.insert(b);
    out.classical.baseTypeOrder.push_back(b);
  }
  return out;
}

bool kripke_eval(const Term& f, const KripkeModel& m, int world) {
  Term t = beta_eta_normalize(f);
  if (is_true(t)) return true;
  if (t->tag() == Tag::Const) {
    auto it = m.valuation.find(t->sym());
    if (it == m.valuation.end())
      throw std::logic_error("kripke_eval: unknown atom " + symbol_name(t->sym()));
    return it->second[world];
  }
  if (const Term* a = as_not(t)) return !kripke_eval(*a, m, world);
  Term a, b;
  if (as_or(t, a, b)) return kripke_eval(a, m, world) || kripke_eval(b, m, world);
  if (as_eq(t, a, b) && a->type() == type_o())
    return kripke_eval(a, m, world) == kripke_eval(b, m, world);
  if (t->tag() == Tag::App && t->head()->tag() == Tag::Const &&
      t->spine().size() == 1) {
    if (t->head()->sym() == sym_box()) {
      for (int v = 0; v < m.worlds; ++v)
        if (m.rel[world][v] && !kripke_eval(t->spine()[0], m, v)) return false;
      return true;
    }
    if (t->head()->sym() == sym_dia()) {
      for (int v = 0; v < m.worlds; ++v)
        if (m.rel[world][v] && kripke_eval(t->spine()[0], m, v)) return true;
      return false;
    }
  }
  throw std::logic_error("kripke_eval: not a propositional modal formula");
}

}  // namespace hop
