#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hop/unify.hpp"
#include "support/term_gen.hpp"

using namespace hop;

namespace {

Type ti() { return type_i(); }

FreshGen mk_fresh(std::uint64_t base = 100000) {
  FreshGen g;
  g.next_var = base;
  g.avoid = std::make_shared<std::set<std::string>>();
  return g;
}

// replace the free variables of t by frozen constants so a later unification
// treats them as rigid
Term freeze(const Term& t) {
  std::vector<std::pair<std::uint64_t, Type>> vars;
  collect_free_vars(t, vars);
  Substitution sigma;
  for (const auto& [id, ty] : vars)
    sigma.bind(id, ty, mk_const("frz_" + std::to_string(id), ty));
  return substitute(t, sigma);
}

// theta is an instance of sigma on the given variables
bool instance_of(const std::vector<std::pair<std::uint64_t, Type>>& vars,
                 const Substitution& sigma, const Substitution& theta) {
  UnificationProblem up;
  for (const auto& [id, ty] : vars) {
    Term v = mk_free(id, ty);
    up.constraints.emplace_back(substitute(v, sigma), freeze(substitute(v, theta)));
  }
  up.depth = 12;
  FreshGen g = mk_fresh(900000);
  return !preunify_all(up, g, 1).empty();
}

bool unifier_sound(const UnificationProblem& p, const PreUnifier& u) {
  for (const auto& [s, t] : p.constraints) {
    Term a = substitute(s, u.subst);
    Term b = substitute(t, u.subst);
    bool solvedHere = term_eq(a, b);
    if (!solvedHere) {
      // must be covered by a residual flex-flex pair
      bool residual = false;
      for (const auto& [rs, rt] : u.residual)
        if ((term_eq(a, rs) && term_eq(b, rt)) || (term_eq(a, rt) && term_eq(b, rs)))
          residual = true;
      if (!residual) return false;
    }
  }
  for (const auto& [rs, rt] : u.residual) {
    const Term& hs = rs->tag() == Tag::App ? rs->head() : rs;
    const Term& ht = rt->tag() == Tag::App ? rt->head() : rt;
    if (hs->tag() != Tag::Free || ht->tag() != Tag::Free) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pattern: F x y unifies with g y x") {
  Type ii = fun_type(ti(), fun_type(ti(), ti()));
  Term F = mk_free(1, ii);
  Term g = mk_const("ug", ii);
  // both sides closed under \x.\y.
  Term lhs = beta_eta_normalize(
      mk_lam(ti(), mk_lam(ti(), mk_app(shift(F, 2), {mk_bound(1, ti()), mk_bound(0, ti())}))));
  Term rhs = beta_eta_normalize(
      mk_lam(ti(), mk_lam(ti(), mk_app(shift(g, 2), {mk_bound(0, ti()), mk_bound(1, ti())}))));
  UnificationProblem p;
  p.constraints = {{lhs, rhs}};
  FreshGen fg = mk_fresh();
  Substitution mgu;
  REQUIRE(pattern_unify(p, fg, mgu) == PatternStatus::MGU);
  CHECK(term_eq(substitute(lhs, mgu), substitute(rhs, mgu)));
  // expected binding: \x.\y. g y x
  Term expect = beta_eta_normalize(
      mk_lam(ti(), mk_lam(ti(), mk_app(shift(g, 2), {mk_bound(0, ti()), mk_bound(1, ti())}))));
  REQUIRE(mgu.find(1) != nullptr);
  CHECK(term_eq(*mgu.find(1), expect));
  // generality: every depth-3 pre-unifier is an instance of the MGU
  FreshGen fg2 = mk_fresh(200000);
  UnificationProblem p3 = p;
  p3.depth = 3;
  auto all = preunify_all(p3, fg2, 16);
  REQUIRE(!all.empty());
  std::vector<std::pair<std::uint64_t, Type>> vars{{1, ii}};
  for (const auto& u : all) CHECK(instance_of(vars, mgu, u.subst));
}

TEST_CASE("pattern: occurs check fails") {
  Type it = fun_type(ti(), ti());
  Term F = mk_free(2, it);
  Term g = mk_const("ug1", it);
  // \x. F x  vs  \x. g (F x)
  Term lhs = beta_eta_normalize(mk_lam(ti(), mk_app1(shift(F, 1), mk_bound(0, ti()))));
  Term rhs = beta_eta_normalize(
      mk_lam(ti(), mk_app1(shift(g, 1), mk_app1(shift(F, 1), mk_bound(0, ti())))));
  UnificationProblem p;
  p.constraints = {{lhs, rhs}};
  FreshGen fg = mk_fresh();
  Substitution mgu;
  CHECK(pattern_unify(p, fg, mgu) == PatternStatus::Fail);
}

TEST_CASE("pattern: constant argument is not a pattern") {
  Term a = mk_const("ua", ti());
  Term F = mk_free(3, fun_type(ti(), ti()));
  UnificationProblem p;
  p.constraints = {{beta_eta_normalize(mk_app1(F, a)), a}};
  FreshGen fg = mk_fresh();
  Substitution mgu;
  CHECK(pattern_unify(p, fg, mgu) == PatternStatus::NotPattern);
}

TEST_CASE("preunify: F a = a has exactly the imitation and the projection") {
  Term a = mk_const("ua", ti());
  Term F = mk_free(4, fun_type(ti(), ti()));
  UnificationProblem p;
  p.constraints = {{beta_eta_normalize(mk_app1(F, a)), a}};
  p.depth = 4;
  FreshGen fg = mk_fresh();
  auto us = preunify_all(p, fg, 16);
  REQUIRE(us.size() == 2);
  Term idT = beta_eta_normalize(mk_lam(ti(), mk_bound(0, ti())));
  Term constA = beta_eta_normalize(mk_lam(ti(), shift(a, 1)));
  std::vector<Term> bindings;
  for (const auto& u : us) {
    REQUIRE(u.residual.empty());
    REQUIRE(u.subst.find(4) != nullptr);
    bindings.push_back(substitute(mk_free(4, fun_type(ti(), ti())), u.subst));
  }
  // imitation explored before projection
  CHECK(term_eq(bindings[0], constA));
  CHECK(term_eq(bindings[1], idT));
}

TEST_CASE("preunify: rigid head clash yields nothing") {
  Term a = mk_const("ua", ti());
  Term f = mk_const("uf1", fun_type(ti(), ti()));
  Term g = mk_const("ug1", fun_type(ti(), ti()));
  UnificationProblem p;
  p.constraints = {{mk_app1(f, a), mk_app1(g, a)}};
  FreshGen fg = mk_fresh();
  CHECK(preunify_all(p, fg, 16).empty());
}

TEST_CASE("preunify: flex-flex stays residual") {
  Term a = mk_const("ua", ti());
  Term b = mk_const("ub", ti());
  Term F = mk_free(5, fun_type(ti(), ti()));
  Term G = mk_free(6, fun_type(ti(), ti()));
  UnificationProblem p;
  p.constraints = {{beta_eta_normalize(mk_app1(F, a)), beta_eta_normalize(mk_app1(G, b))}};
  FreshGen fg = mk_fresh();
  auto us = preunify_all(p, fg, 16);
  REQUIRE(us.size() == 1);
  CHECK(us[0].subst.empty());
  REQUIRE(us[0].residual.size() == 1);
}

TEST_CASE("preunify budget: zero depth prunes flex-rigid search") {
  Term a = mk_const("ua", ti());
  Term F = mk_free(7, fun_type(ti(), ti()));
  UnificationProblem p;
  p.constraints = {{beta_eta_normalize(mk_app1(F, a)), a}};
  p.depth = 0;
  FreshGen fg = mk_fresh();
  CHECK(preunify_all(p, fg, 16).empty());
}

TEST_CASE("property: pre-unifiers are sound on random problems") {
  hoptest::TermGen gen(1234);
  int unifiable = 0;
  for (int i = 0; i < 300; ++i) {
    auto [s, t] = gen.gen_pair(8);
    UnificationProblem p;
    p.constraints = {{s, t}};
    p.depth = 6;
    FreshGen fg = mk_fresh(500000 + i * 100);
    auto us = preunify_all(p, fg, 8);
    for (const auto& u : us) {
      ++unifiable;
      CHECK(unifier_sound(p, u));
    }
  }
  CHECK(unifiable > 50);
}

TEST_CASE("property: pattern MGUs subsume every pre-unifier") {
  hoptest::TermGen gen(77);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 60; ++i) {
    auto [lhs, rhs] = gen.gen_pattern_pair(6);
    UnificationProblem p;
    p.constraints = {{lhs, rhs}};
    p.depth = 5;
    FreshGen fg = mk_fresh(600000 + i * 100);
    Substitution mgu;
    PatternStatus st = pattern_unify(p, fg, mgu);
    if (st != PatternStatus::MGU) continue;
    CHECK(term_eq(substitute(lhs, mgu), substitute(rhs, mgu)));
    FreshGen fg2 = mk_fresh(700000 + i * 100);
    auto us = preunify_all(p, fg2, 8);
    std::vector<std::pair<std::uint64_t, Type>> vars;
    collect_free_vars(lhs, vars);
    collect_free_vars(rhs, vars);
    for (const auto& u : us) {
      if (!u.residual.empty()) continue;
      ++checked;
      CHECK(instance_of(vars, mgu, u.subst));
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("determinism: enumeration order is reproducible") {
  Term a = mk_const("ua", ti());
  Term f = mk_const("uf2", fun_type(ti(), fun_type(ti(), ti())));
  Term F = mk_free(8, fun_type(ti(), ti()));
  Term lhs = beta_eta_normalize(mk_app1(F, a));
  Term rhs = beta_eta_normalize(mk_app(f, {a, mk_app1(F, a)}));
  auto run = [&]() {
    UnificationProblem p;
    p.constraints = {{lhs, rhs}};
    p.depth = 4;
    FreshGen fg = mk_fresh(800000);
    std::vector<std::string> out;
    for (const auto& u : preunify_all(p, fg, 32))
      out.push_back(show_term(substitute(mk_free(8, fun_type(ti(), ti())), u.subst)));
    return out;
  };
  auto r1 = run();
  auto r2 = run();
  CHECK(r1 == r2);
}
