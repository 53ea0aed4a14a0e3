#include "hop/calculus.hpp"

#include <algorithm>

namespace hop {

namespace {

// closed subterm positions of t in pre-order, root first. Flexible-headed
// applications are neither targets nor descended into: rewriting below a
// free-variable head is subsumed by instantiating the head.
void enumerate_positions(const Term& t, Position& cur,
                         std::vector<std::pair<Position, Term>>& out) {
  if (t->tag() == Tag::App && t->head()->tag() == Tag::Free) return;
  if (t->loose() == 0) out.emplace_back(cur, t);
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Free:
    case Tag::Bound:
      return;
    case Tag::Lam:
      cur.push_back(0);
      enumerate_positions(t->body(), cur, out);
      cur.pop_back();
      return;
    case Tag::App:
      cur.push_back(0);
      enumerate_positions(t->head(), cur, out);
      cur.pop_back();
      for (std::uint32_t i = 0; i < t->spine().size(); ++i) {
        cur.push_back(i + 1);
        enumerate_positions(t->spine()[i], cur, out);
        cur.pop_back();
      }
      return;
  }
}

std::vector<std::pair<Position, Term>> closed_positions(const Term& t) {
  std::vector<std::pair<Position, Term>> out;
  Position cur;
  enumerate_positions(t, cur, out);
  return out;
}

std::vector<Literal> without(const std::vector<Literal>& lits, std::size_t idx) {
  std::vector<Literal> out;
  out.reserve(lits.size() - 1);
  for (std::size_t i = 0; i < lits.size(); ++i)
    if (i != idx) out.push_back(lits[i]);
  return out;
}

}  // namespace

namespace {

// cheap pre-filter: can sub conceivably unify with l?
bool heads_compatible(const Term& sub, const Term& l) {
  const TermNode* hs = sub->tag() == Tag::App ? sub->head().get() : sub.get();
  const TermNode* hl = l->tag() == Tag::App ? l->head().get() : l.get();
  if (hs->tag() == Tag::Free || hl->tag() == Tag::Free) return true;
  if (hs->tag() == Tag::Lam || hl->tag() == Tag::Lam || sub->tag() == Tag::Lam ||
      l->tag() == Tag::Lam)
    return true;
  if (hs->tag() == Tag::Const && hl->tag() == Tag::Const)
    return hs->sym() == hl->sym();
  if (hs->tag() == Tag::Bound || hl->tag() == Tag::Bound) return false;
  return true;
}

}  // namespace

std::vector<RuleOutput> paramodulate(const Clause& from, const Clause& into) {
  std::vector<RuleOutput> out;
  for (std::uint32_t fi = 0; fi < from.lits.size(); ++fi) {
    const Literal& eq = from.lits[fi];
    if (!eq.pos) continue;
    for (std::uint32_t orient = 0; orient < 2; ++orient) {
      if (orient == 1 && eq.oriented) break;  // only the oriented direction
      Term l = orient == 0 ? eq.lhs : eq.rhs;
      Term r = orient == 0 ? eq.rhs : eq.lhs;
      if (l->tag() == Tag::Free || is_true(l)) continue;
      for (std::uint32_t ii = 0; ii < into.lits.size(); ++ii) {
        const Literal& target = into.lits[ii];
        if (target.constraint) continue;
        for (std::uint32_t side = 0; side < 2; ++side) {
          Term s = side == 0 ? target.lhs : target.rhs;
          Term other = side == 0 ? target.rhs : target.lhs;
          if (is_true(s)) continue;
          for (const auto& [pos, sub] : closed_positions(s)) {
            if (sub->type() != l->type()) continue;
            if (is_true(sub)) continue;
            if (!heads_compatible(sub, l)) continue;
            // rewriting a proper subterm to $true only buries the truth
            // value inside a term; restrict those steps to whole sides
            if (is_true(r) && !pos.empty()) continue;
            Term replaced = beta_eta_normalize(replace_at(s, pos, r));
            RuleOutput ro;
            ro.clause.lits = without(from.lits, fi);
            for (std::size_t k = 0; k < into.lits.size(); ++k)
              if (k != ii) ro.clause.lits.push_back(into.lits[k]);
            ro.clause.lits.push_back(
                mk_literal(replaced, other, target.pos, target.constraint));
            ro.clause.lits.push_back(mk_literal(sub, l, false, /*constraint=*/true));
            ro.clause.ps_count = std::max(from.ps_count, into.ps_count);
            ro.coords = {fi, orient, ii, side};
            ro.path = pos;
            out.push_back(std::move(ro));
          }
        }
      }
    }
  }
  return out;
}

std::vector<RuleOutput> equality_factor(const Clause& c) {
  std::vector<RuleOutput> out;
  if (c.lits.size() < 2) return out;
  for (std::uint32_t i = 0; i < c.lits.size(); ++i) {
    for (std::uint32_t j = 0; j < c.lits.size(); ++j) {
      if (i == j) continue;
      const Literal& keep = c.lits[i];    // [l ~ r]
      const Literal& gone = c.lits[j];    // [s ~ t], folded into constraints
      if (keep.pos != gone.pos) continue;
      for (std::uint32_t oi = 0; oi < 2; ++oi) {
        Term l = oi == 0 ? keep.lhs : keep.rhs;
        Term r = oi == 0 ? keep.rhs : keep.lhs;
        for (std::uint32_t oj = 0; oj < 2; ++oj) {
          Term s = oj == 0 ? gone.lhs : gone.rhs;
          Term t = oj == 0 ? gone.rhs : gone.lhs;
          if (l->type() != s->type() || r->type() != t->type()) continue;
          RuleOutput ro;
          ro.clause.lits = without(c.lits, j);
          ro.clause.lits.push_back(mk_literal(l, s, false, /*constraint=*/true));
          ro.clause.lits.push_back(mk_literal(r, t, false, /*constraint=*/true));
          ro.clause.ps_count = c.ps_count;
          ro.coords = {i, j, oi, oj};
          bool dup = false;
          for (const RuleOutput& prev : out)
            if (clause_alpha_eq(prev.clause, ro.clause)) dup = true;
          if (!dup) out.push_back(std::move(ro));
        }
      }
    }
  }
  return out;
}

std::vector<Term> general_bindings(Type target, const GeneralBindingSpec& gb,
                                   FreshGen& fresh) {
  std::vector<Type> argTys = arg_types(target);
  std::uint32_t n = static_cast<std::uint32_t>(argTys.size());
  if (final_result(target) != type_o()) return {};
  auto freshApplied = [&](Type resTy) {
    Term h = fresh.fresh_var(fun_type(argTys, resTy));
    std::vector<Term> xs;
    for (std::uint32_t i = 0; i < n; ++i) xs.push_back(mk_bound(n - 1 - i, argTys[i]));
    return xs.empty() ? shift(h, static_cast<int>(n))
                      : mk_app(shift(h, static_cast<int>(n)), xs);
  };
  auto close = [&](const Term& body) {
    Term t = body;
    for (std::size_t i = argTys.size(); i-- > 0;) t = mk_lam(argTys[i], t);
    return beta_eta_normalize(t);
  };
  std::vector<Term> out;
  if (gb.useNot) out.push_back(close(mk_not(freshApplied(type_o()))));
  if (gb.useOr)
    out.push_back(close(mk_or(freshApplied(type_o()), freshApplied(type_o()))));
  for (Type tau : gb.types) {
    if (gb.usePi) {
      // body: Pi (\y. H xs y)
      Term applied = freshApplied(fun_type(tau, type_o()));
      Term piBody = mk_forall(tau, mk_app1(shift(applied, 1), mk_bound(0, tau)));
      out.push_back(close(piBody));
    }
    if (gb.useEq)
      out.push_back(close(mk_equation(freshApplied(tau), freshApplied(tau))));
  }
  return out;
}

std::vector<RuleOutput> primitive_substitution(const Clause& c,
                                               const GeneralBindingSpec& gb,
                                               FreshGen& fresh) {
  std::vector<RuleOutput> out;
  std::vector<std::uint64_t> done;
  for (std::uint32_t li = 0; li < c.lits.size(); ++li) {
    const Literal& l = c.lits[li];
    if (!lit_is_prop(l)) continue;
    const Term& s = l.lhs;
    const TermNode* h = s->tag() == Tag::App ? s->head().get() : s.get();
    if (h->tag() != Tag::Free) continue;
    if (std::find(done.begin(), done.end(), h->var_id()) != done.end()) continue;
    done.push_back(h->var_id());
    for (const Term& p : general_bindings(h->type(), gb, fresh)) {
      Substitution sigma;
      sigma.bind(h->var_id(), h->type(), p);
      RuleOutput ro;
      ro.clause = apply_substitution(c, sigma);
      ro.clause.ps_count = c.ps_count + 1;
      ro.subst = sigma;
      ro.coords = {li};
      out.push_back(std::move(ro));
    }
  }
  return out;
}

std::optional<RuleOutput> func_ext(const Clause& c, FreshGen& fresh) {
  bool applicable = false;
  for (const Literal& l : c.lits)
    if (l.lhs->type()->is_fun()) applicable = true;
  if (!applicable) return std::nullopt;
  RuleOutput ro;
  ro.clause.ps_count = c.ps_count;
  for (const Literal& l : c.lits) {
    if (!l.lhs->type()->is_fun()) {
      ro.clause.lits.push_back(l);
      continue;
    }
    Term lhs = l.lhs, rhs = l.rhs;
    if (l.pos) {
      while (lhs->type()->is_fun()) {
        Term x = fresh.fresh_var(lhs->type()->arg());
        lhs = beta_eta_normalize(mk_app1(lhs, x));
        rhs = beta_eta_normalize(mk_app1(rhs, x));
      }
    } else {
      std::vector<std::pair<std::uint64_t, Type>> fvs;
      collect_free_vars(l.lhs, fvs);
      collect_free_vars(l.rhs, fvs);
      std::vector<Type> argTys;
      std::vector<Term> args;
      for (const auto& [id, ty] : fvs) {
        argTys.push_back(ty);
        args.push_back(mk_free(id, ty));
      }
      while (lhs->type()->is_fun()) {
        Term sk = fresh.fresh_const("sk__", fun_type(argTys, lhs->type()->arg()));
        Term skTerm = args.empty() ? sk : mk_app(sk, args);
        lhs = beta_eta_normalize(mk_app1(lhs, skTerm));
        rhs = beta_eta_normalize(mk_app1(rhs, skTerm));
      }
    }
    ro.clause.lits.push_back(mk_literal(lhs, rhs, l.pos, l.constraint));
  }
  return ro;
}

std::vector<RuleOutput> bool_ext(const Clause& c) {
  std::vector<RuleOutput> out;
  for (std::uint32_t li = 0; li < c.lits.size(); ++li) {
    const Literal& l = c.lits[li];
    if (l.lhs->type() != type_o()) continue;
    if (is_true(l.lhs) || is_true(l.rhs)) continue;  // shorthand literal
    auto rest = without(c.lits, li);
    for (std::uint32_t branch = 0; branch < 2; ++branch) {
      RuleOutput ro;
      ro.clause.lits = rest;
      ro.clause.ps_count = c.ps_count;
      if (l.pos) {
        // p = q: (~p | q) and (p | ~q)
        ro.clause.lits.push_back(mk_prop_literal(l.lhs, branch == 1));
        ro.clause.lits.push_back(mk_prop_literal(l.rhs, branch == 0));
      } else {
        // p != q: (p | q) and (~p | ~q)
        ro.clause.lits.push_back(mk_prop_literal(l.lhs, branch == 0));
        ro.clause.lits.push_back(mk_prop_literal(l.rhs, branch == 0));
      }
      ro.coords = {li, branch};
      out.push_back(std::move(ro));
    }
  }
  return out;
}

namespace {

bool choice_operator_type(Type ty, Type& tau) {
  // (tau > $o) > tau
  if (!ty->is_fun()) return false;
  Type a = ty->arg();
  if (!a->is_fun() || a->result() != type_o()) return false;
  if (ty->result() != a->arg()) return false;
  tau = a->arg();
  return true;
}

void collect_choice_terms(const Term& t, std::vector<Term>& out) {
  if (t->tag() == Tag::App) {
    const Term& h = t->head();
    bool isChoiceHead = false;
    Type tau = nullptr;
    if (h->tag() == Tag::Const && h->sym() == sym_choice()) {
      isChoiceHead = choice_operator_type(h->type(), tau);
    } else if (h->tag() == Tag::Free) {
      isChoiceHead = choice_operator_type(h->type(), tau);
    }
    if (isChoiceHead && !t->spine().empty()) {
      const Term& arg = t->spine()[0];
      if (arg->loose() == 0) {
        bool seen = false;
        for (const Term& x : out)
          if (term_eq(x, arg)) seen = true;
        if (!seen) out.push_back(arg);
      }
    }
    collect_choice_terms(h, out);
    for (const Term& a : t->spine()) collect_choice_terms(a, out);
    return;
  }
  if (t->tag() == Tag::Lam) collect_choice_terms(t->body(), out);
}

}  // namespace

std::vector<RuleOutput> choice_rule(const Clause& c, FreshGen& fresh) {
  std::vector<Term> ts;
  for (const Literal& l : c.lits) {
    collect_choice_terms(l.lhs, ts);
    collect_choice_terms(l.rhs, ts);
  }
  std::vector<RuleOutput> out;
  for (const Term& t : ts) {
    Type tau = t->type()->arg();
    Term x = fresh.fresh_var(tau);
    Term eps = mk_app1(t_choice(tau), t);
    RuleOutput ro;
    ro.clause.lits.push_back(
        mk_prop_literal(beta_eta_normalize(mk_app1(t, x)), false));
    ro.clause.lits.push_back(
        mk_prop_literal(beta_eta_normalize(mk_app1(t, eps)), true));
    out.push_back(std::move(ro));
  }
  return out;
}

std::optional<RuleOutput> func_synth(const Clause& c, FreshGen& fresh) {
  (void)fresh;
  // all flexible-headed negative literals must share one head variable
  std::uint64_t sharedHead = 0;
  for (const Literal& l : c.lits) {
    if (l.pos) continue;
    for (int side = 0; side < 2; ++side) {
      const Term& f = side == 0 ? l.lhs : l.rhs;
      if (f->tag() == Tag::App && f->head()->tag() == Tag::Free) {
        std::uint64_t v = f->head()->var_id();
        if (sharedHead != 0 && sharedHead != v) return std::nullopt;
        sharedHead = v;
        break;
      }
    }
  }
  if (sharedHead == 0) return std::nullopt;
  for (std::uint32_t li = 0; li < c.lits.size(); ++li) {
    const Literal& l = c.lits[li];
    if (l.pos) continue;
    for (int side = 0; side < 2; ++side) {
      Term f = side == 0 ? l.lhs : l.rhs;
      if (f->tag() != Tag::App || f->head()->tag() != Tag::Free) continue;
      const Term& hv = f->head();
      std::uint32_t arity = static_cast<std::uint32_t>(arg_types(hv->type()).size());
      if (f->spine().size() != arity) continue;
      // collect all rows for this head
      struct Row {
        std::vector<Term> args;
        Term value;
      };
      std::vector<Row> rows;
      bool ok = true;
      for (const Literal& m : c.lits) {
        if (m.pos) continue;
        for (int ms = 0; ms < 2; ++ms) {
          Term g = ms == 0 ? m.lhs : m.rhs;
          Term v = ms == 0 ? m.rhs : m.lhs;
          if (g->tag() != Tag::App || g->head()->tag() != Tag::Free) continue;
          if (g->head()->var_id() != hv->var_id()) continue;
          if (g->spine().size() != arity) { ok = false; break; }
          if (occurs_free(v, hv->var_id())) { ok = false; break; }
          for (const Term& a : g->spine())
            if (occurs_free(a, hv->var_id())) ok = false;
          rows.push_back({g->spine(), v});
          break;
        }
        if (!ok) break;
      }
      if (!ok || rows.empty()) continue;
      // binding: \X1..Xn. choice (\Z. And_k ((And_j Xj = s_kj) -> Z = t_k))
      std::vector<Type> argTys = arg_types(hv->type());
      Type resTy = final_result(hv->type());
      std::uint32_t n = arity;
      Term conj;
      for (const Row& row : rows) {
        Term cond;
        for (std::uint32_t j = 0; j < n; ++j) {
          Term xj = mk_bound(n - j, argTys[j]);  // under n+1 binders
          Term sj = shift(row.args[j], static_cast<int>(n) + 1);
          Term eqj = mk_equation(xj, sj);
          cond = cond ? mk_and(cond, eqj) : eqj;
        }
        Term z = mk_bound(0, resTy);
        Term concl = mk_equation(z, shift(row.value, static_cast<int>(n) + 1));
        Term rowF = cond ? mk_implies(cond, concl) : concl;
        conj = conj ? mk_and(conj, rowF) : rowF;
      }
      Term table = mk_app1(t_choice(resTy), mk_lam(resTy, conj));
      Term binding = table;
      for (std::size_t i = argTys.size(); i-- > 0;) binding = mk_lam(argTys[i], binding);
      binding = beta_eta_normalize(binding);
      Substitution sigma;
      sigma.bind(hv->var_id(), hv->type(), binding);
      RuleOutput ro;
      ro.clause = apply_substitution(c, sigma);
      ro.clause.ps_count = c.ps_count;
      ro.subst = sigma;
      ro.coords = {li};
      return ro;
    }
  }
  return std::nullopt;
}

std::optional<RuleOutput> inj_rule(const Clause& c, FreshGen& fresh) {
  if (c.lits.size() != 2) return std::nullopt;
  for (int neg = 0; neg < 2; ++neg) {
    const Literal& ln = c.lits[neg];
    const Literal& lp = c.lits[1 - neg];
    if (ln.pos || !lp.pos) continue;
    // ln: [f X ~ f Y]^ff, lp: [X ~ Y]^tt
    if (lp.lhs->tag() != Tag::Free || lp.rhs->tag() != Tag::Free) continue;
    std::uint64_t x = lp.lhs->var_id(), y = lp.rhs->var_id();
    if (x == y) continue;
    auto sideVar = [](const Term& t, Symbol& fsym, Type& fty) -> std::uint64_t {
      if (t->tag() != Tag::App || t->spine().size() != 1) return 0;
      if (t->head()->tag() != Tag::Const) return 0;
      if (t->spine()[0]->tag() != Tag::Free) return 0;
      fsym = t->head()->sym();
      fty = t->head()->type();
      return t->spine()[0]->var_id();
    };
    Symbol f1 = 0, f2 = 0;
    Type ft1 = nullptr, ft2 = nullptr;
    std::uint64_t v1 = sideVar(ln.lhs, f1, ft1);
    std::uint64_t v2 = sideVar(ln.rhs, f2, ft2);
    if (!v1 || !v2 || f1 != f2 || ft1 != ft2) continue;
    if (!((v1 == x && v2 == y) || (v1 == y && v2 == x))) continue;
    Type tau = ft1->arg();
    Type ups = ft1->result();
    Term sk = fresh.fresh_const("sk__", fun_type(ups, tau));
    Term xv = fresh.fresh_var(tau);
    Term fx = mk_app1(mk_const(f1, ft1), xv);
    RuleOutput ro;
    ro.clause.lits.push_back(mk_literal(mk_app1(sk, fx), xv, true));
    return ro;
  }
  return std::nullopt;
}

namespace {

// Leibniz: Pi (\P. ~(P s) | P t)  -->  s = t   (also the or-swapped form)
// Andrews: Pi (\q. ~(q s s) | q s t)  -->  s = t
// plus the unapplied lambda forms of both.
Term match_defined_eq(const Term& t) {
  Term arg;
  if (as_forall(t, arg) && arg->tag() == Tag::Lam) {
    Type pty = arg->binder_type();
    Term a, b;
    if (!as_or(arg->body(), a, b)) return nullptr;
    for (int sw = 0; sw < 2; ++sw) {
      Term negSide = sw == 0 ? a : b;
      Term posSide = sw == 0 ? b : a;
      const Term* inner = as_not(negSide);
      if (!inner) continue;
      // Leibniz: inner = P s, posSide = P t
      if (pty->is_fun() && pty->result() == type_o() && !pty->arg()->is_fun()) {}
      if ((*inner)->tag() == Tag::App && posSide->tag() == Tag::App &&
          (*inner)->head()->tag() == Tag::Bound && (*inner)->head()->index() == 0 &&
          posSide->head()->tag() == Tag::Bound && posSide->head()->index() == 0) {
        const auto& si = (*inner)->spine();
        const auto& ti = posSide->spine();
        if (si.size() == 1 && ti.size() == 1 && !has_loose(si[0], 0) &&
            !has_loose(ti[0], 0)) {
          Term s = shift(si[0], -1);
          Term u = shift(ti[0], -1);
          return beta_eta_normalize(mk_equation(s, u));
        }
        if (si.size() == 2 && ti.size() == 2 && !has_loose(si[0], 0) &&
            !has_loose(si[1], 0) && !has_loose(ti[0], 0) && !has_loose(ti[1], 0)) {
          // Andrews: q s s on the negative side, q s t positive
          if (term_eq(si[0], si[1]) && term_eq(ti[0], si[0])) {
            Term s = shift(si[0], -1);
            Term u = shift(ti[1], -1);
            return beta_eta_normalize(mk_equation(s, u));
          }
        }
      }
    }
    return nullptr;
  }
  // unapplied: \x.\y. Pi (\P. ~(P x) | P y) and the Andrews variant
  if (t->tag() == Tag::Lam && t->body()->tag() == Tag::Lam) {
    Type tau = t->binder_type();
    if (t->body()->binder_type() != tau) return nullptr;
    Term inner = t->body()->body();
    Term eq = match_defined_eq(inner);
    if (!eq) return nullptr;
    Term a, b;
    if (!as_eq(eq, a, b)) return nullptr;
    if (a->tag() == Tag::Bound && a->index() == 1 && b->tag() == Tag::Bound &&
        b->index() == 0)
      return t_eq(tau);
    return nullptr;
  }
  // half applied: \y. Pi (\P. ~(P s) | P y), the eta-expansion of (= s)
  if (t->tag() == Tag::Lam) {
    Type tau = t->binder_type();
    Term eq = match_defined_eq(t->body());
    if (!eq) return nullptr;
    Term a, b;
    if (!as_eq(eq, a, b)) return nullptr;
    if (b->tag() == Tag::Bound && b->index() == 0 && !has_loose(a, 0))
      return beta_eta_normalize(mk_app1(t_eq(tau), shift(a, -1)));
    return nullptr;
  }
  return nullptr;
}

Term replace_defined_eq(const Term& t, bool& changed) {
  if (Term r = match_defined_eq(t)) {
    changed = true;
    return r;
  }
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Free:
    case Tag::Bound:
      return t;
    case Tag::Lam: {
      Term b = replace_defined_eq(t->body(), changed);
      return b.get() == t->body().get() ? t : mk_lam(t->binder_type(), b);
    }
    case Tag::App: {
      bool ch = false;
      Term h = replace_defined_eq(t->head(), ch);
      std::vector<Term> sp;
      for (const Term& a : t->spine()) sp.push_back(replace_defined_eq(a, ch));
      if (!ch) return t;
      changed = true;
      return mk_app(h, std::move(sp));
    }
  }
  return t;
}

}  // namespace

std::optional<RuleOutput> defined_eq_replace_clause(const Clause& c) {
  bool changed = false;
  RuleOutput ro;
  ro.clause.ps_count = c.ps_count;
  for (const Literal& l : c.lits) {
    Term lhs = replace_defined_eq(l.lhs, changed);
    Term rhs = replace_defined_eq(l.rhs, changed);
    ro.clause.lits.push_back(mk_literal(beta_eta_normalize(lhs),
                                        beta_eta_normalize(rhs), l.pos, l.constraint));
  }
  if (!changed) return std::nullopt;
  return ro;
}

ContractOutcome simp_trivial(const Clause& c) {
  std::vector<Literal> lits;
  bool changed = false;
  for (const Literal& l : c.lits) {
    if (lit_trivially_false(l)) {
      changed = true;
      continue;
    }
    if (lit_trivially_true(l)) return {ContractOutcome::Status::Redundant, {}};
    bool dup = false;
    for (const Literal& x : lits) {
      if (lit_eq(x, l)) dup = true;
      if (lit_eq(x, negate_literal(l)))
        return {ContractOutcome::Status::Redundant, {}};
    }
    if (dup) {
      changed = true;
      continue;
    }
    lits.push_back(l);
  }
  if (!changed) return {ContractOutcome::Status::Unchanged, c};
  Clause out;
  out.lits = std::move(lits);
  out.ps_count = c.ps_count;
  out.id = c.id;
  return {ContractOutcome::Status::Simplified, std::move(out)};
}

ContractOutcome der_destructive(const Clause& c) {
  Clause cur = c;
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < cur.lits.size(); ++i) {
      const Literal& l = cur.lits[i];
      if (l.pos) continue;
      for (int side = 0; side < 2; ++side) {
        Term v = side == 0 ? l.lhs : l.rhs;
        Term t = side == 0 ? l.rhs : l.lhs;
        if (v->tag() != Tag::Free || occurs_free(t, v->var_id())) continue;
        Substitution sigma;
        sigma.bind(v->var_id(), v->type(), t);
        Clause next;
        next.ps_count = cur.ps_count;
        next.id = cur.id;
        for (std::size_t k = 0; k < cur.lits.size(); ++k)
          if (k != i) next.lits.push_back(apply_substitution(cur.lits[k], sigma));
        cur = std::move(next);
        changed = true;
        again = true;
        break;
      }
      if (again) break;
    }
  }
  if (!changed) return {ContractOutcome::Status::Unchanged, c};
  return {ContractOutcome::Status::Simplified, std::move(cur)};
}

namespace {

// one rewrite pass of u -> r sigma at any closed subterm
bool rewrite_term(Term& t, const Term& l, const Term& r) {
  for (const auto& [pos, sub] : closed_positions(t)) {
    if (sub->type() != l->type()) continue;
    Substitution sigma;
    if (!match_term(l, sub, sigma)) continue;
    Term image = substitute(r, sigma);
    if (term_eq(image, sub)) continue;
    t = beta_eta_normalize(replace_at(t, pos, image));
    return true;
  }
  return false;
}

}  // namespace

ContractOutcome rewrite_with_units(const Clause& c, std::span<const UnitPremise> units,
                                   std::vector<std::uint64_t>& used) {
  Clause cur = c;
  bool changed = false;
  int guard = 1000;
  for (bool again = true; again && guard-- > 0;) {
    again = false;
    for (const UnitPremise& u : units) {
      if (u.clause->lits.size() != 1) continue;
      const Literal& ul = u.clause->lits[0];
      if (!ul.pos || !ul.oriented) continue;
      for (Literal& l : cur.lits) {
        if (l.constraint) continue;  // constraints are solved by unification
        Term lhs = l.lhs, rhs = l.rhs;
        bool hit = rewrite_term(lhs, ul.lhs, ul.rhs);
        bool hit2 = rewrite_term(rhs, ul.lhs, ul.rhs);
        if (hit || hit2) {
          l = mk_literal(lhs, rhs, l.pos, l.constraint);
          if (std::find(used.begin(), used.end(), u.id) == used.end())
            used.push_back(u.id);
          changed = true;
          again = true;
        }
      }
    }
  }
  if (!changed) return {ContractOutcome::Status::Unchanged, c};
  cur.id = c.id;
  return {ContractOutcome::Status::Simplified, std::move(cur)};
}

ContractOutcome unit_cut(const Clause& c, std::span<const UnitPremise> units,
                         std::vector<std::uint64_t>& used) {
  std::vector<Literal> lits;
  bool changed = false;
  for (const Literal& l : c.lits) {
    bool cut = false;
    for (const UnitPremise& u : units) {
      if (u.clause->lits.size() != 1) continue;
      const Literal& ul = u.clause->lits[0];
      if (ul.pos == l.pos) continue;  // a literal contradicted by the unit
      Substitution sigma;
      bool m = (match_term(ul.lhs, l.lhs, sigma) && match_term(ul.rhs, l.rhs, sigma));
      if (!m) {
        sigma = Substitution();
        m = (match_term(ul.lhs, l.rhs, sigma) && match_term(ul.rhs, l.lhs, sigma));
      }
      if (m) {
        cut = true;
        if (std::find(used.begin(), used.end(), u.id) == used.end())
          used.push_back(u.id);
        break;
      }
    }
    if (cut) {
      changed = true;
      continue;
    }
    lits.push_back(l);
  }
  if (!changed) return {ContractOutcome::Status::Unchanged, c};
  Clause out;
  out.lits = std::move(lits);
  out.ps_count = c.ps_count;
  out.id = c.id;
  return {ContractOutcome::Status::Simplified, std::move(out)};
}

}  // namespace hop
