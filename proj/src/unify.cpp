#include "hop/unify.hpp"

#include <algorithm>
#include <deque>

namespace hop {

namespace {

Term wrap_lams(const std::vector<Type>& binders, const Term& body) {
  Term t = body;
  for (std::size_t i = binders.size(); i-- > 0;) t = mk_lam(binders[i], t);
  return beta_eta_normalize(t);
}

// Peel both sides to non-lambda bodies under a shared binder prefix,
// eta-expanding the shorter side.
void peel(Term& s, Term& t, std::vector<Type>& binders) {
  for (;;) {
    if (s->tag() == Tag::Lam && t->tag() == Tag::Lam) {
      binders.push_back(s->binder_type());
      s = s->body();
      t = t->body();
      continue;
    }
    if (s->tag() == Tag::Lam) {
      Type tau = s->binder_type();
      t = beta_eta_normalize(mk_app1(shift(t, 1), mk_bound(0, tau)));
      binders.push_back(tau);
      s = s->body();
      continue;
    }
    if (t->tag() == Tag::Lam) {
      Type tau = t->binder_type();
      s = beta_eta_normalize(mk_app1(shift(s, 1), mk_bound(0, tau)));
      binders.push_back(tau);
      t = t->body();
      continue;
    }
    return;
  }
}

const TermNode* head_of(const Term& t) {
  return t->tag() == Tag::App ? t->head().get() : t.get();
}

std::vector<Term> spine_of(const Term& t) {
  return t->tag() == Tag::App ? t->spine() : std::vector<Term>{};
}

bool rigid_heads_equal(const TermNode* a, const TermNode* b) {
  if (a->tag() != b->tag()) return false;
  if (a->tag() == Tag::Const) return a->sym() == b->sym() && a->type() == b->type();
  if (a->tag() == Tag::Bound) return a->index() == b->index();
  return false;
}

// ---------------- pattern unification ----------------

struct PatternAbort {};   // non-pattern structure encountered
struct PatternFail {};    // definite clash / occurs failure

struct PatternSolver {
  FreshGen& fresh;
  Substitution sigma;

  Term norm(const Term& t) { return substitute(t, sigma); }

  void bind(std::uint64_t id, Type ty, const Term& value) {
    Substitution one;
    one.bind(id, ty, value);
    sigma = one.compose(sigma);
  }

  // pattern argument lists: distinct bound variables
  static bool pattern_args(const std::vector<Term>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i]->tag() != Tag::Bound) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (args[j]->index() == args[i]->index()) return false;
    }
    return true;
  }

  // Transport t into the binding body for X applied to bvars `xs` (indices
  // relative to the constraint's binder depth). Maps outer bound variables
  // through the inverse of xs; prunes flexible subterms whose arguments fall
  // outside the range.
  Term transport(const Term& t, const std::vector<std::uint32_t>& xs,
                 std::uint32_t localDepth, std::uint64_t selfId) {
    switch (t->tag()) {
      case Tag::Const:
        return t;
      case Tag::Free: {
        if (t->var_id() == selfId) throw PatternFail{};
        return t;
      }
      case Tag::Bound: {
        if (t->index() < localDepth) return t;
        std::uint32_t outer = t->index() - localDepth;
        for (std::size_t j = 0; j < xs.size(); ++j)
          if (xs[j] == outer)
            return mk_bound(
                static_cast<std::uint32_t>(xs.size() - 1 - j) + localDepth,
                t->type());
        throw PatternFail{};  // rigid occurrence of an out-of-range variable
      }
      case Tag::Lam:
        return mk_lam(t->binder_type(),
                      transport(t->body(), xs, localDepth + 1, selfId));
      case Tag::App: {
        const Term& h = t->head();
        if (h->tag() == Tag::Free) {
          if (h->var_id() == selfId) throw PatternFail{};
          // flexible subterm: prune arguments that cannot be transported
          const auto& args = t->spine();
          if (!pattern_args(args)) throw PatternAbort{};
          std::vector<Term> kept;
          std::vector<Type> keptTys;
          bool pruned = false;
          for (const Term& a : args) {
            bool ok = a->index() < localDepth;
            if (!ok) {
              std::uint32_t outer = a->index() - localDepth;
              for (std::uint32_t x : xs)
                if (x == outer) ok = true;
            }
            if (ok) {
              kept.push_back(a);
              keptTys.push_back(a->type());
            } else {
              pruned = true;
            }
          }
          if (pruned) {
            Type resTy = t->type();
            Term fresher = fresh.fresh_var(fun_type(keptTys, resTy));
            // h := \args. fresher(kept)
            std::vector<Type> allTys;
            for (const Term& a : args) allTys.push_back(a->type());
            std::vector<Term> body_args;
            for (std::size_t i = 0; i < args.size(); ++i) {
              // position of args[i] within the new lambda prefix
              for (std::size_t k = 0; k < kept.size(); ++k)
                if (kept[k].get() == args[i].get())
                  body_args.push_back(mk_bound(
                      static_cast<std::uint32_t>(args.size() - 1 - i), args[i]->type()));
            }
            Term body = body_args.empty()
                            ? shift(fresher, static_cast<int>(args.size()))
                            : mk_app(shift(fresher, static_cast<int>(args.size())),
                                     body_args);
            bind(h->var_id(), h->type(), wrap_lams(allTys, body));
            Term pruneApplied =
                kept.empty() ? fresher : mk_app(fresher, kept);
            return transport(beta_eta_normalize(pruneApplied), xs, localDepth, selfId);
          }
          std::vector<Term> mapped;
          for (const Term& a : args)
            mapped.push_back(transport(a, xs, localDepth, selfId));
          return mk_app(h, std::move(mapped));
        }
        Term nh = transport(h, xs, localDepth, selfId);
        std::vector<Term> sp;
        for (const Term& a : t->spine())
          sp.push_back(transport(a, xs, localDepth, selfId));
        return mk_app(nh, std::move(sp));
      }
    }
    throw PatternAbort{};
  }

  void solve(std::deque<std::pair<Term, Term>> work) {
    while (!work.empty()) {
      auto [s0, t0] = work.front();
      work.pop_front();
      Term s = norm(s0);
      Term t = norm(t0);
      if (term_eq(s, t)) continue;
      std::vector<Type> binders;
      peel(s, t, binders);
      const TermNode* hs = head_of(s);
      const TermNode* ht = head_of(t);
      bool fs = hs->tag() == Tag::Free;
      bool ft = ht->tag() == Tag::Free;
      if (!fs && !ft) {
        if (!rigid_heads_equal(hs, ht)) throw PatternFail{};
        auto ss = spine_of(s);
        auto ts = spine_of(t);
        if (ss.size() != ts.size()) throw PatternFail{};
        for (std::size_t i = 0; i < ss.size(); ++i)
          work.emplace_back(wrap_lams(binders, ss[i]), wrap_lams(binders, ts[i]));
        continue;
      }
      if (fs && ft && hs->var_id() == ht->var_id()) {
        // X xs == X ys: keep positions where they agree
        auto xs = spine_of(s);
        auto ys = spine_of(t);
        if (!pattern_args(xs) || !pattern_args(ys)) throw PatternAbort{};
        if (xs.size() != ys.size()) throw PatternFail{};
        std::vector<Type> allTys;
        std::vector<Term> kept;
        std::vector<std::size_t> keptPos;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          allTys.push_back(xs[i]->type());
          if (xs[i]->index() == ys[i]->index()) keptPos.push_back(i);
        }
        std::vector<Type> keptTys;
        for (std::size_t i : keptPos) keptTys.push_back(xs[i]->type());
        Type resTy = s->type();
        Term z = fresh.fresh_var(fun_type(keptTys, resTy));
        std::vector<Term> bodyArgs;
        for (std::size_t i : keptPos)
          bodyArgs.push_back(
              mk_bound(static_cast<std::uint32_t>(xs.size() - 1 - i), xs[i]->type()));
        Term body = bodyArgs.empty() ? shift(z, static_cast<int>(xs.size()))
                                     : mk_app(shift(z, static_cast<int>(xs.size())),
                                              bodyArgs);
        bind(hs->var_id(), hs->type(), wrap_lams(allTys, body));
        continue;
      }
      if (fs && ft) {
        // X xs == Y ys, distinct variables
        auto xs = spine_of(s);
        auto ys = spine_of(t);
        if (!pattern_args(xs) || !pattern_args(ys)) throw PatternAbort{};
        std::vector<Type> xTys, yTys;
        for (const Term& a : xs) xTys.push_back(a->type());
        for (const Term& a : ys) yTys.push_back(a->type());
        // common arguments in xs order
        std::vector<std::size_t> xPos, yPos;
        for (std::size_t i = 0; i < xs.size(); ++i)
          for (std::size_t j = 0; j < ys.size(); ++j)
            if (xs[i]->index() == ys[j]->index()) {
              xPos.push_back(i);
              yPos.push_back(j);
            }
        std::vector<Type> zTys;
        for (std::size_t i : xPos) zTys.push_back(xs[i]->type());
        Type resTy = s->type();
        Term z = fresh.fresh_var(fun_type(zTys, resTy));
        auto mkBinding = [&](const std::vector<Type>& tys,
                             const std::vector<std::size_t>& pos) {
          std::vector<Term> bodyArgs;
          for (std::size_t p : pos)
            bodyArgs.push_back(
                mk_bound(static_cast<std::uint32_t>(tys.size() - 1 - p), tys[p]));
          Term body = bodyArgs.empty()
                          ? shift(z, static_cast<int>(tys.size()))
                          : mk_app(shift(z, static_cast<int>(tys.size())), bodyArgs);
          return wrap_lams(tys, body);
        };
        bind(hs->var_id(), hs->type(), mkBinding(xTys, xPos));
        bind(ht->var_id(), ht->type(), mkBinding(yTys, yPos));
        continue;
      }
      // flex-rigid: make s the flexible side
      if (!fs) {
        std::swap(s, t);
        std::swap(hs, ht);
      }
      auto args = spine_of(s);
      if (!pattern_args(args)) throw PatternAbort{};
      std::vector<std::uint32_t> xs;
      std::vector<Type> argTys;
      for (const Term& a : args) {
        xs.push_back(a->index());
        argTys.push_back(a->type());
      }
      Term image = transport(t, xs, 0, hs->var_id());
      bind(hs->var_id(), hs->type(), wrap_lams(argTys, image));
    }
  }
};

}  // namespace

PatternStatus pattern_unify(const UnificationProblem& p, FreshGen& fresh,
                            Substitution& out) {
  FreshGen::Snapshot snap = fresh.snapshot();
  PatternSolver solver{fresh, {}};
  std::deque<std::pair<Term, Term>> work;
  for (const auto& [s, t] : p.constraints) {
    if (s->type() != t->type())
      throw TypeError("unification constraint between different types");
    work.emplace_back(beta_eta_normalize(s), beta_eta_normalize(t));
  }
  try {
    solver.solve(std::move(work));
  } catch (const PatternFail&) {
    fresh.restore(snap);
    return PatternStatus::Fail;
  } catch (const PatternAbort&) {
    fresh.restore(snap);
    return PatternStatus::NotPattern;
  }
  out = std::move(solver.sigma);
  return PatternStatus::MGU;
}

// ---------------- Huet pre-unification ----------------

struct PreUnifyIter::Impl {
  FreshGen& fresh;
  struct State {
    std::vector<std::pair<Term, Term>> cs;
    Substitution sigma;
    std::uint32_t budget;
  };
  std::vector<State> stack;

  explicit Impl(UnificationProblem p, FreshGen& f) : fresh(f) {
    State init;
    for (const auto& [s, t] : p.constraints) {
      if (s->type() != t->type())
        throw TypeError("unification constraint between different types");
      init.cs.emplace_back(beta_eta_normalize(s), beta_eta_normalize(t));
    }
    init.budget = p.depth;
    stack.push_back(std::move(init));
  }

  static Term eta_long_binding(Type varTy, const Term& rigidHead,
                               FreshGen& fresh) {
    std::vector<Type> argTys = arg_types(varTy);
    std::uint32_t n = static_cast<std::uint32_t>(argTys.size());
    std::vector<Type> headArgTys = arg_types(rigidHead->type());
    std::vector<Term> hs;
    for (Type g : headArgTys) {
      Term h = fresh.fresh_var(fun_type(argTys, g));
      std::vector<Term> xs;
      for (std::uint32_t i = 0; i < n; ++i)
        xs.push_back(mk_bound(n - 1 - i, argTys[i]));
      hs.push_back(xs.empty() ? shift(h, static_cast<int>(n))
                              : mk_app(shift(h, static_cast<int>(n)), xs));
    }
    Term body = hs.empty() ? shift(rigidHead, static_cast<int>(n))
                           : mk_app(shift(rigidHead, static_cast<int>(n)), hs);
    return wrap_lams(argTys, body);
  }

  static Term projection_binding(Type varTy, std::uint32_t arg, FreshGen& fresh) {
    std::vector<Type> argTys = arg_types(varTy);
    std::uint32_t n = static_cast<std::uint32_t>(argTys.size());
    Type ti = argTys[arg];
    std::vector<Type> innerTys = arg_types(ti);
    std::vector<Term> hs;
    for (Type g : innerTys) {
      Term h = fresh.fresh_var(fun_type(argTys, g));
      std::vector<Term> xs;
      for (std::uint32_t i = 0; i < n; ++i)
        xs.push_back(mk_bound(n - 1 - i, argTys[i]));
      hs.push_back(xs.empty() ? shift(h, static_cast<int>(n))
                              : mk_app(shift(h, static_cast<int>(n)), xs));
    }
    Term xi = mk_bound(n - 1 - arg, ti);
    Term body = hs.empty() ? xi : mk_app(xi, hs);
    return wrap_lams(argTys, body);
  }

  std::optional<PreUnifier> advance() {
    while (!stack.empty()) {
      State st = std::move(stack.back());
      stack.pop_back();
      bool dead = false;
      bool branched = false;
      // simplification to fixpoint
      for (bool again = true; again && !dead && !branched;) {
        again = false;
        std::size_t flexRigidIdx = st.cs.size();
        for (std::size_t i = 0; i < st.cs.size(); ++i) {
          Term s = substitute(st.cs[i].first, st.sigma);
          Term t = substitute(st.cs[i].second, st.sigma);
          st.cs[i] = {s, t};
          if (term_eq(s, t)) {
            st.cs.erase(st.cs.begin() + i);
            again = true;
            break;
          }
          // bare variable elimination
          if (s->tag() == Tag::Free && !occurs_free(t, s->var_id())) {
            Substitution one;
            one.bind(s->var_id(), s->type(), t);
            st.sigma = one.compose(st.sigma);
            st.cs.erase(st.cs.begin() + i);
            again = true;
            break;
          }
          if (t->tag() == Tag::Free && !occurs_free(s, t->var_id())) {
            Substitution one;
            one.bind(t->var_id(), t->type(), s);
            st.sigma = one.compose(st.sigma);
            st.cs.erase(st.cs.begin() + i);
            again = true;
            break;
          }
          std::vector<Type> binders;
          Term sb = s, tb = t;
          peel(sb, tb, binders);
          const TermNode* hs = head_of(sb);
          const TermNode* ht = head_of(tb);
          bool fs = hs->tag() == Tag::Free;
          bool ft = ht->tag() == Tag::Free;
          if (!fs && !ft) {
            if (!rigid_heads_equal(hs, ht)) {
              dead = true;
              break;
            }
            auto ss = spine_of(sb);
            auto ts = spine_of(tb);
            if (ss.size() != ts.size()) {
              dead = true;
              break;
            }
            st.cs.erase(st.cs.begin() + i);
            for (std::size_t k = 0; k < ss.size(); ++k)
              st.cs.emplace_back(wrap_lams(binders, ss[k]),
                                 wrap_lams(binders, ts[k]));
            again = true;
            break;
          }
          if (fs != ft && flexRigidIdx == st.cs.size()) flexRigidIdx = i;
        }
        if (dead) break;
        if (again) continue;
        // no simplification applied: branch on the first flex-rigid pair
        if (flexRigidIdx < st.cs.size()) {
          branched = true;
          if (st.budget == 0) {
            dead = true;
            break;
          }
          Term s = st.cs[flexRigidIdx].first;
          Term t = st.cs[flexRigidIdx].second;
          std::vector<Type> binders;
          peel(s, t, binders);
          if (head_of(s)->tag() != Tag::Free) std::swap(s, t);
          const TermNode* flexHead = head_of(s);
          const TermNode* rigidHead = head_of(t);
          std::vector<Term> bindings;
          if (rigidHead->tag() == Tag::Const) {
            Term rh = mk_const(rigidHead->sym(), rigidHead->type());
            bindings.push_back(eta_long_binding(flexHead->type(), rh, fresh));
          }
          std::vector<Type> argTys = arg_types(flexHead->type());
          for (std::uint32_t i = 0; i < argTys.size(); ++i) {
            if (final_result(argTys[i]) == final_result(flexHead->type()))
              bindings.push_back(projection_binding(flexHead->type(), i, fresh));
          }
          // push in reverse so imitation is explored first
          for (std::size_t k = bindings.size(); k-- > 0;) {
            State child = st;
            Substitution one;
            one.bind(flexHead->var_id(), flexHead->type(), bindings[k]);
            child.sigma = one.compose(child.sigma);
            child.budget = st.budget - 1;
            stack.push_back(std::move(child));
          }
        }
      }
      if (dead || branched) continue;
      // solved: only flex-flex constraints remain
      PreUnifier result;
      result.subst = st.sigma;
      for (auto& [s, t] : st.cs)
        result.residual.emplace_back(substitute(s, st.sigma), substitute(t, st.sigma));
      return result;
    }
    return std::nullopt;
  }
};

PreUnifyIter::PreUnifyIter(UnificationProblem p, FreshGen& fresh)
    : impl_(new Impl(std::move(p), fresh)) {}

PreUnifyIter::~PreUnifyIter() { delete impl_; }

std::optional<PreUnifier> PreUnifyIter::next() { return impl_->advance(); }

std::vector<PreUnifier> preunify_all(const UnificationProblem& p, FreshGen& fresh,
                                     std::size_t maxResults) {
  PreUnifyIter it(p, fresh);
  std::vector<PreUnifier> out;
  while (out.size() < maxResults) {
    auto u = it.next();
    if (!u) break;
    out.push_back(std::move(*u));
  }
  return out;
}

}  // namespace hop
