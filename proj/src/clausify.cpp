#include "hop/clausify.hpp"

#include <algorithm>

namespace hop {

namespace {

Term not_of(const Term& t) {
  if (const Term* a = as_not(t)) return *a;
  return mk_not(t);
}

}  // namespace

Term miniscope(const Term& f) {
  Term t = beta_eta_normalize(f);
  if (const Term* a = as_not(t)) {
    Term inner = miniscope(*a);
    if (const Term* b = as_not(inner)) return *b;
    return beta_eta_normalize(mk_not(inner));
  }
  Term a, b;
  if (as_or(t, a, b))
    return beta_eta_normalize(mk_or(miniscope(a), miniscope(b)));
  Term arg;
  if (as_forall(t, arg) && arg->tag() == Tag::Lam) {
    Type tau = arg->binder_type();
    Term body = miniscope(arg->body());
    if (!has_loose(body, 0)) return shift(body, -1);  // vacuous quantifier
    Term p, q;
    if (as_or(body, p, q)) {
      bool px = has_loose(p, 0), qx = has_loose(q, 0);
      if (px && !qx)
        return beta_eta_normalize(
            mk_or(miniscope(mk_forall(tau, p)), shift(q, -1)));
      if (!px && qx)
        return beta_eta_normalize(
            mk_or(shift(p, -1), miniscope(mk_forall(tau, q))));
    }
    if (const Term* neg = as_not(body)) {
      Term na, nb;
      if (as_or(*neg, na, nb)) {
        // forall distributes over the encoded conjunction
        Term left = miniscope(mk_forall(tau, not_of(na)));
        Term right = miniscope(mk_forall(tau, not_of(nb)));
        return beta_eta_normalize(mk_and(left, right));
      }
    }
    return beta_eta_normalize(mk_forall(tau, body));
  }
  return t;
}

namespace {

constexpr std::uint64_t kCountCap = 1u << 30;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountCap / b) return kCountCap;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return std::min(kCountCap, a + b);
}

// number of clauses a naive distribution would produce
std::uint64_t cnf_count(const Term& t, bool pos) {
  if (const Term* a = as_not(t)) return cnf_count(*a, !pos);
  Term a, b;
  if (as_or(t, a, b))
    return pos ? sat_mul(cnf_count(a, pos), cnf_count(b, pos))
               : sat_add(cnf_count(a, pos), cnf_count(b, pos));
  Term arg;
  if (as_forall(t, arg)) {
    Term body = arg->tag() == Tag::Lam
                    ? arg->body()
                    : mk_app1(shift(arg, 1), mk_bound(0, arg->type()->arg()));
    return cnf_count(beta_eta_normalize(body), pos);
  }
  if (is_true(t)) return pos ? 0 : 1;
  return 1;
}

struct Clausifier {
  FreshGen& fresh;
  ClausifyMode mode;
  std::uint32_t factor;
  std::vector<std::vector<Literal>> defs;

  using LitSet = std::vector<std::vector<Literal>>;

  static bool clause_tautology(const std::vector<Literal>& lits) {
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (lit_trivially_true(lits[i])) return true;
      for (std::size_t j = i + 1; j < lits.size(); ++j)
        if (lit_eq(lits[i], negate_literal(lits[j]))) return true;
    }
    return false;
  }

  static void add_literal(std::vector<Literal>& c, const Literal& l) {
    for (const Literal& x : c)
      if (lit_eq(x, l)) return;
    c.push_back(l);
  }

  LitSet product(const LitSet& x, const LitSet& y) {
    LitSet out;
    for (const auto& cx : x)
      for (const auto& cy : y) {
        std::vector<Literal> c = cx;
        for (const Literal& l : cy) add_literal(c, l);
        if (!clause_tautology(c)) out.push_back(std::move(c));
      }
    return out;
  }

  void flatten_disjuncts(const Term& t, std::vector<Term>& out) {
    Term a, b;
    if (as_or(t, a, b)) {
      flatten_disjuncts(a, out);
      flatten_disjuncts(b, out);
      return;
    }
    out.push_back(t);
  }

  LitSet run(const Term& t0, bool pos, std::vector<Term>& univ) {
    Term t = beta_eta_normalize(t0);
    if (t->tag() == Tag::App && t->head()->tag() == Tag::Const &&
        (t->head()->sym() == sym_box() || t->head()->sym() == sym_dia()))
      throw std::logic_error("modal operator reached the classical clausifier");
    if (const Term* a = as_not(t)) return run(*a, !pos, univ);
    Term a, b;
    if (as_or(t, a, b)) {
      if (!pos) {
        LitSet left = run(a, false, univ);
        LitSet right = run(b, false, univ);
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
      std::vector<Term> ds;
      flatten_disjuncts(t, ds);
      std::vector<std::uint64_t> counts;
      counts.reserve(ds.size());
      for (const Term& d : ds) counts.push_back(cnf_count(d, true));
      LitSet acc{{}};
      for (std::size_t i = 0; i < ds.size(); ++i) {
        std::uint64_t siblings = 1;
        for (std::size_t j = 0; j < ds.size(); ++j)
          if (j != i) siblings = sat_mul(siblings, counts[j]);
        LitSet di;
        if (mode == ClausifyMode::Definitional && counts[i] > 1 && siblings > factor)
          di = name_subformula(ds[i], univ);
        else
          di = run(ds[i], true, univ);
        acc = product(acc, di);
      }
      return acc;
    }
    Term arg;
    if (as_forall(t, arg)) {
      Type tau = arg->type()->arg();
      Term body = arg->tag() == Tag::Lam
                      ? arg->body()
                      : mk_app1(shift(arg, 1), mk_bound(0, tau));
      if (pos) {
        Term v = fresh.fresh_var(tau);
        univ.push_back(v);
        LitSet r = run(bsubst(body, {v}), true, univ);
        univ.pop_back();
        return r;
      }
      std::vector<Type> argTys;
      for (const Term& u : univ) argTys.push_back(u->type());
      Term sk = fresh.fresh_const("sk__", fun_type(argTys, tau));
      Term skTerm = univ.empty() ? sk : mk_app(sk, univ);
      return run(bsubst(body, {skTerm}), false, univ);
    }
    if (is_true(t)) {
      if (pos) return {};
      return {{}};
    }
    return {{mk_prop_literal(t, pos)}};
  }

  // polarity-aware naming: def -> subformula, subformula occurrence replaced
  // by the def atom
  LitSet name_subformula(const Term& d, std::vector<Term>& univ) {
    std::vector<std::pair<std::uint64_t, Type>> fvs;
    collect_free_vars(d, fvs);
    std::vector<Type> argTys;
    std::vector<Term> args;
    for (const auto& [id, ty] : fvs) {
      argTys.push_back(ty);
      args.push_back(mk_free(id, ty));
    }
    Term defC = fresh.fresh_const("def__", fun_type(argTys, type_o()));
    Term atom = args.empty() ? defC : mk_app(defC, args);
    Literal negDef = mk_prop_literal(atom, false);
    for (auto& cl : run(d, true, univ)) {
      std::vector<Literal> c = cl;
      add_literal(c, negDef);
      if (!clause_tautology(c)) defs.push_back(std::move(c));
    }
    return {{mk_prop_literal(atom, true)}};
  }
};

}  // namespace

std::vector<Clause> clausify(const Term& f, ClausifyMode mode, FreshGen& fresh,
                             std::uint32_t defFactor) {
  Clausifier cl{fresh, mode, defFactor, {}};
  std::vector<Term> univ;
  auto main = cl.run(f, true, univ);
  std::vector<Clause> out;
  for (auto& lits : cl.defs) {
    Clause c;
    c.lits = std::move(lits);
    out.push_back(std::move(c));
  }
  for (auto& lits : main) {
    if (Clausifier::clause_tautology(lits)) continue;
    Clause c;
    c.lits = std::move(lits);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Clause> renormalize(const Clause& c0, FreshGen& fresh) {
  std::vector<Clause> out;
  std::vector<std::vector<Literal>> pending{c0.lits};
  while (!pending.empty()) {
    std::vector<Literal> lits = std::move(pending.back());
    pending.pop_back();
    bool discard = false;
    bool changed = true;
    while (changed && !discard) {
      changed = false;
      for (std::size_t i = 0; i < lits.size(); ++i) {
        const Literal l = lits[i];
        if (lit_trivially_false(l)) {
          lits.erase(lits.begin() + i);
          changed = true;
          break;
        }
        if (lit_trivially_true(l)) {
          discard = true;
          break;
        }
        if (!lit_is_prop(l)) continue;
        Term a, b, arg;
        if (as_or(l.lhs, a, b)) {
          lits.erase(lits.begin() + i);
          if (l.pos) {
            lits.insert(lits.begin() + i, mk_prop_literal(a, true));
            lits.insert(lits.begin() + i + 1, mk_prop_literal(b, true));
          } else {
            std::vector<Literal> other = lits;
            other.insert(other.begin() + i, mk_prop_literal(b, false));
            pending.push_back(std::move(other));
            lits.insert(lits.begin() + i, mk_prop_literal(a, false));
          }
          changed = true;
          break;
        }
        if (as_forall(l.lhs, arg)) {
          Term inst;
          if (l.pos) {
            inst = mk_app1(arg, fresh.fresh_var(arg->type()->arg()));
          } else {
            std::vector<std::pair<std::uint64_t, Type>> fvs;
            for (const Literal& x : lits) {
              collect_free_vars(x.lhs, fvs);
              collect_free_vars(x.rhs, fvs);
            }
            std::vector<Type> argTys;
            std::vector<Term> args;
            for (const auto& [id, ty] : fvs) {
              argTys.push_back(ty);
              args.push_back(mk_free(id, ty));
            }
            Term sk = fresh.fresh_const("sk__", fun_type(argTys, arg->type()->arg()));
            inst = mk_app1(arg, args.empty() ? sk : mk_app(sk, args));
          }
          lits[i] = mk_prop_literal(beta_eta_normalize(inst), l.pos, l.constraint);
          changed = true;
          break;
        }
      }
    }
    if (discard) continue;
    // duplicate merge and complementary check
    std::vector<Literal> dedup;
    bool taut = false;
    for (const Literal& l : lits) {
      bool dup = false;
      for (const Literal& x : dedup) {
        if (lit_eq(x, l)) dup = true;
        if (lit_eq(x, negate_literal(l))) taut = true;
      }
      if (!dup) dedup.push_back(l);
    }
    if (taut) continue;
    Clause c;
    c.lits = std::move(dedup);
    c.ps_count = c0.ps_count;
    out.push_back(std::move(c));
  }
  std::reverse(out.begin(), out.end());  // restore split order
  return out;
}

std::vector<std::pair<Clause, Substitution>> heuristic_instantiate(const Clause& c) {
  std::vector<std::pair<std::uint64_t, Type>> fvs;
  collect_free_vars(c, fvs);
  Type oo = fun_type(type_o(), type_o());
  std::vector<std::pair<std::uint64_t, Type>> targets;
  for (const auto& v : fvs)
    if (v.second == type_o() || v.second == oo) targets.push_back(v);
  if (targets.empty()) return {};

  const std::vector<Term> boolVals = {t_true(), t_false()};
  const std::vector<Term> funVals = {
      mk_lam(type_o(), shift(t_true(), 1)),
      mk_lam(type_o(), shift(t_false(), 1)),
      beta_eta_normalize(mk_lam(type_o(), mk_bound(0, type_o()))),
      mk_lam(type_o(), mk_not(mk_bound(0, type_o())))};

  std::vector<std::pair<Clause, Substitution>> out;
  std::vector<std::size_t> idx(targets.size(), 0);
  for (;;) {
    Substitution sigma;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto& [id, ty] = targets[i];
      const auto& pool = ty == type_o() ? boolVals : funVals;
      sigma.bind(id, ty, beta_eta_normalize(pool[idx[i]]));
    }
    out.emplace_back(apply_substitution(c, sigma), sigma);
    std::size_t k = 0;
    for (; k < targets.size(); ++k) {
      std::size_t limit = targets[k].second == type_o() ? 2 : 4;
      if (++idx[k] < limit) break;
      idx[k] = 0;
    }
    if (k == targets.size()) break;
  }
  return out;
}

}  // namespace hop
