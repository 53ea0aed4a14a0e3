#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hop/calculus.hpp"
#include "hop/clausify.hpp"
#include "hop/unify.hpp"
#include "support/finite_model.hpp"

using namespace hop;

namespace {

Type ti() { return type_i(); }
Type to() { return type_o(); }

FreshGen mk_fresh(std::uint64_t base = 1000) {
  FreshGen g;
  g.next_var = base;
  g.avoid = std::make_shared<std::set<std::string>>();
  return g;
}

Clause mk_clause(std::vector<Literal> lits) {
  Clause c;
  c.lits = std::move(lits);
  return c;
}

bool contains_clause(const std::vector<RuleOutput>& outs, const Clause& want) {
  for (const RuleOutput& ro : outs)
    if (clause_alpha_eq(ro.clause, want)) return true;
  return false;
}

}  // namespace

TEST_CASE("paramodulation: ground rewrite emits the trivial constraint") {
  Term a = mk_const("pa", ti());
  Term b = mk_const("pb", ti());
  Term p = mk_const("pp", fun_type(ti(), to()));
  Clause from = mk_clause({mk_literal(a, b, true)});
  Clause into = mk_clause({mk_prop_literal(mk_app1(p, a), true)});
  auto outs = paramodulate(from, into);
  Clause want = mk_clause({mk_prop_literal(mk_app1(p, b), true),
                           mk_literal(a, a, false, true)});
  CHECK(contains_clause(outs, want));
}

TEST_CASE("paramodulation at a variable position leaves a solvable constraint") {
  Term a = mk_const("pa", ti());
  Term b = mk_const("pb", ti());
  Term p = mk_const("pp", fun_type(ti(), to()));
  Term x = mk_free(1, ti());
  Clause from = mk_clause({mk_literal(a, b, true)});
  Clause into = mk_clause({mk_prop_literal(mk_app1(p, x), true)});
  auto outs = paramodulate(from, into);
  Clause want = mk_clause({mk_prop_literal(mk_app1(p, b), true),
                           mk_literal(x, a, false, true)});
  REQUIRE(contains_clause(outs, want));
  // the emitted constraint solves with X -> a
  for (const RuleOutput& ro : outs) {
    if (!clause_alpha_eq(ro.clause, want)) continue;
    for (const Literal& l : ro.clause.lits) {
      if (!l.constraint) continue;
      UnificationProblem up;
      up.constraints = {{l.lhs, l.rhs}};
      FreshGen fg = mk_fresh(5000);
      auto us = preunify_all(up, fg, 4);
      REQUIRE(!us.empty());
      CHECK(term_eq(substitute(l.lhs, us[0].subst), substitute(l.rhs, us[0].subst)));
    }
  }
}

TEST_CASE("paramodulation: no positive equation, no conclusions") {
  Term a = mk_const("pa", ti());
  Term b = mk_const("pb", ti());
  Clause from = mk_clause({mk_literal(a, b, false)});
  Clause into = mk_clause({mk_literal(a, b, true)});
  CHECK(paramodulate(from, into).empty());
}

TEST_CASE("equality factoring merges unifiable literals") {
  Term a = mk_const("pa", ti());
  Term p = mk_const("pp", fun_type(ti(), to()));
  Term x = mk_free(2, ti());
  Clause c = mk_clause({mk_prop_literal(mk_app1(p, x), true),
                        mk_prop_literal(mk_app1(p, a), true)});
  auto outs = equality_factor(c);
  REQUIRE(!outs.empty());
  // some factored clause solves to the unit [p a]
  bool foundUnit = false;
  for (const RuleOutput& ro : outs) {
    // drop trivial constraints, solve the rest
    std::vector<Literal> constraints;
    std::vector<Literal> kept;
    for (const Literal& l : ro.clause.lits) {
      if (lit_trivially_false(l)) continue;
      if (l.constraint && !l.pos)
        constraints.push_back(l);
      else
        kept.push_back(l);
    }
    if (constraints.size() != 1 || kept.size() != 1) continue;
    UnificationProblem up;
    up.constraints = {{constraints[0].lhs, constraints[0].rhs}};
    FreshGen fg = mk_fresh(6000);
    for (auto& u : preunify_all(up, fg, 4)) {
      Clause solved = mk_clause({apply_substitution(kept[0], u.subst)});
      Clause want = mk_clause({mk_prop_literal(mk_app1(p, a), true)});
      if (clause_alpha_eq(solved, want)) foundUnit = true;
    }
  }
  CHECK(foundUnit);
}

TEST_CASE("equality factoring needs two equal-polarity literals") {
  Term p = mk_const("pq1", to());
  Term q = mk_const("pq2", to());
  CHECK(equality_factor(mk_clause({mk_prop_literal(p, true)})).empty());
  CHECK(equality_factor(mk_clause({mk_prop_literal(q, true),
                                   mk_prop_literal(p, false)}))
            .empty());
}

TEST_CASE("general bindings: boolean head set shapes") {
  FreshGen g = mk_fresh(2000);
  GeneralBindingSpec gb;
  gb.types = {ti()};
  // target: bare boolean variable
  auto bs0 = general_bindings(to(), gb, g);
  REQUIRE(bs0.size() == 4);  // not, or, pi_i, eq_i
  CHECK(term_eq(bs0[0], mk_not(mk_free(2000, to()))));  // ~Y with Y fresh

  // target i>o: contains "\z. ! [y]: H z y" and "\z. (H1 z) = (H2 z)"
  auto bs1 = general_bindings(fun_type(ti(), to()), gb, g);
  REQUIRE(bs1.size() == 4);
  bool foundPi = false, foundEq = false;
  for (const Term& b : bs1) {
    CHECK(type_of(b) == fun_type(ti(), to()));
    Term body = b->tag() == Tag::Lam ? b->body() : b;
    Term arg;
    if (as_forall(body, arg)) foundPi = true;
    Term l, r;
    if (as_eq(body, l, r)) foundEq = true;
  }
  CHECK(foundPi);
  CHECK(foundEq);
}

TEST_CASE("primitive substitution instantiates a boolean head") {
  FreshGen g = mk_fresh(3000);
  Term x = mk_free(1, to());
  Clause c = mk_clause({mk_prop_literal(x, true)});
  GeneralBindingSpec gb;
  gb.useOr = gb.usePi = gb.useEq = false;  // negation only
  auto outs = primitive_substitution(c, gb, g);
  REQUIRE(outs.size() == 1);
  REQUIRE(outs[0].clause.lits.size() == 1);
  const Literal& l = outs[0].clause.lits[0];
  // [~Y]^tt is stored as [Y]^ff
  CHECK_FALSE(l.pos);
  CHECK(l.lhs->tag() == Tag::Free);
}

TEST_CASE("functional extensionality on both polarities") {
  Type io = fun_type(ti(), to());
  Term f = mk_const("xf", io);
  Term gc = mk_const("xg", io);
  FreshGen g = mk_fresh(4000);
  auto neg = func_ext(mk_clause({mk_literal(f, gc, false)}), g);
  REQUIRE(neg.has_value());
  REQUIRE(neg->clause.lits.size() == 1);
  const Literal& ln = neg->clause.lits[0];
  CHECK_FALSE(ln.pos);
  REQUIRE(ln.lhs->tag() == Tag::App);
  CHECK(ln.lhs->spine()[0]->tag() == Tag::Const);             // skolem constant
  CHECK(is_minted(ln.lhs->spine()[0]->sym()));
  CHECK(term_eq(ln.lhs->spine()[0], ln.rhs->spine()[0]));     // same argument

  auto pos = func_ext(mk_clause({mk_literal(f, gc, true)}), g);
  REQUIRE(pos.has_value());
  const Literal& lp = pos->clause.lits[0];
  CHECK(lp.pos);
  CHECK(lp.lhs->spine()[0]->tag() == Tag::Free);              // fresh variable

  CHECK_FALSE(func_ext(mk_clause({mk_literal(mk_const("xa", ti()),
                                             mk_const("xb", ti()), true)}),
                       g)
                  .has_value());
}

TEST_CASE("boolean extensionality expands to the iff clauses") {
  Term p = mk_const("bp", to());
  Term q = mk_const("bq", to());
  auto outs = bool_ext(mk_clause({mk_literal(p, q, true)}));
  REQUIRE(outs.size() == 2);
  Clause c1 = mk_clause({mk_prop_literal(p, false), mk_prop_literal(q, true)});
  Clause c2 = mk_clause({mk_prop_literal(p, true), mk_prop_literal(q, false)});
  CHECK(contains_clause(outs, c1));
  CHECK(contains_clause(outs, c2));
  // shorthand literals are not expanded
  CHECK(bool_ext(mk_clause({mk_prop_literal(p, true)})).empty());
}

TEST_CASE("choice rule instantiates the predicate of a choice application") {
  Term p = mk_const("cp", fun_type(ti(), to()));
  Term r = mk_const("cr", fun_type(ti(), to()));
  Term eps = mk_app1(t_choice(ti()), p);
  Clause c = mk_clause({mk_prop_literal(mk_app1(r, eps), true)});
  FreshGen g = mk_fresh(7000);
  auto outs = choice_rule(c, g);
  REQUIRE(outs.size() == 1);
  REQUIRE(outs[0].clause.lits.size() == 2);
  // {[p X]^ff, [p (eps p)]^tt}
  const Literal& l0 = outs[0].clause.lits[0];
  const Literal& l1 = outs[0].clause.lits[1];
  CHECK_FALSE(l0.pos);
  CHECK(l0.lhs->spine()[0]->tag() == Tag::Free);
  CHECK(l1.pos);
  CHECK(term_eq(l1.lhs, beta_eta_normalize(mk_app1(p, eps))));

  // free variable of choice-operator type also triggers
  Term E = mk_free(9, fun_type(fun_type(ti(), to()), ti()));
  Clause c2 = mk_clause({mk_prop_literal(mk_app1(r, mk_app1(E, p)), true)});
  auto outs2 = choice_rule(c2, g);
  REQUIRE(outs2.size() == 1);
  CHECK(outs2[0].clause.lits.size() == 2);

  // no choice-typed subterm, no instances
  Clause c3 = mk_clause({mk_prop_literal(mk_app1(r, mk_const("cc", ti())), true)});
  CHECK(choice_rule(c3, g).empty());
}

TEST_CASE("function synthesis builds the lookup table") {
  Term a = mk_const("fa", ti());
  Term b = mk_const("fb", ti());
  Type ii = fun_type(ti(), ti());
  Term F = mk_free(1, ii);
  FreshGen g = mk_fresh(8000);
  // single row
  Clause c1 = mk_clause({mk_literal(beta_eta_normalize(mk_app1(F, a)), b, false)});
  auto r1 = func_synth(c1, g);
  REQUIRE(r1.has_value());
  REQUIRE(r1->subst.find(1) != nullptr);
  Term expect = beta_eta_normalize(mk_lam(
      ti(), mk_app1(t_choice(ti()),
                    mk_lam(ti(), mk_implies(mk_equation(mk_bound(1, ti()), shift(a, 2)),
                                            mk_equation(mk_bound(0, ti()), shift(b, 2)))))));
  CHECK(term_eq(*r1->subst.find(1), expect));

  // two rows share the head: a two-row table
  Clause c2 = mk_clause({mk_literal(beta_eta_normalize(mk_app1(F, a)), b, false),
                         mk_literal(beta_eta_normalize(mk_app1(F, b)), a, false)});
  auto r2 = func_synth(c2, g);
  REQUIRE(r2.has_value());
  Term binding = *r2->subst.find(1);
  // conjunction of two implications: two occurrences of the row shape
  std::string s = show_term(binding);
  CHECK(s.find("$choice") != std::string::npos);

  // different head variables leave the clause alone
  Term G = mk_free(2, ii);
  Clause c3 = mk_clause({mk_literal(beta_eta_normalize(mk_app1(F, a)), b, false),
                         mk_literal(beta_eta_normalize(mk_app1(G, b)), a, false)});
  CHECK_FALSE(func_synth(c3, g).has_value());
}

TEST_CASE("injectivity postulates a left inverse") {
  FreshGen g = mk_fresh(9000);
  Type ii = fun_type(ti(), ti());
  Term f = mk_const("jf", ii);
  Term x = mk_free(1, ti());
  Term y = mk_free(2, ti());
  Clause c = mk_clause({mk_literal(mk_app1(f, x), mk_app1(f, y), false),
                        mk_literal(x, y, true)});
  auto r = inj_rule(c, g);
  REQUIRE(r.has_value());
  REQUIRE(r->clause.lits.size() == 1);
  const Literal& l = r->clause.lits[0];
  CHECK(l.pos);
  // sk (f X') = X' with sk : i>i
  REQUIRE(l.lhs->tag() == Tag::App);
  CHECK(type_of(l.lhs->head()) == ii);
  CHECK(is_minted(l.lhs->head()->sym()));

  // extra literals block the (deliberately strict) match
  Clause c2 = c;
  c2.lits.push_back(mk_prop_literal(mk_const("jp", to()), true));
  CHECK_FALSE(inj_rule(c2, g).has_value());

  // type bookkeeping: f : i>o gives sk : o>i
  Term fo = mk_const("jg", fun_type(ti(), to()));
  Clause c3 = mk_clause({mk_literal(mk_app1(fo, x), mk_app1(fo, y), false),
                         mk_literal(x, y, true)});
  auto r3 = inj_rule(c3, g);
  REQUIRE(r3.has_value());
  CHECK(type_of(r3->clause.lits[0].lhs->head()) == fun_type(to(), ti()));
}

TEST_CASE("contraction: trivial literals, destructive resolution, rewriting") {
  Term a = mk_const("pa", ti());
  Term b = mk_const("pb", ti());
  Term p = mk_const("pp", fun_type(ti(), to()));
  // {[a != a], [p a]} -> {[p a]}
  Clause c1 = mk_clause({mk_literal(a, a, false), mk_prop_literal(mk_app1(p, a), true)});
  auto r1 = simp_trivial(c1);
  CHECK(r1.status == ContractOutcome::Status::Simplified);
  CHECK(r1.clause.lits.size() == 1);

  // {[X != a], [p X]} -> {[p a]}
  Term x = mk_free(1, ti());
  Clause c2 = mk_clause({mk_literal(x, a, false), mk_prop_literal(mk_app1(p, x), true)});
  auto r2 = der_destructive(c2);
  CHECK(r2.status == ContractOutcome::Status::Simplified);
  Clause want = mk_clause({mk_prop_literal(mk_app1(p, a), true)});
  CHECK(clause_alpha_eq(r2.clause, want));

  // oriented unit a = b rewrites instances of a only
  Clause unit = mk_clause({mk_literal(a, b, true)});
  unit.id = 77;
  REQUIRE(unit.lits[0].oriented);        // a was declared first, so a > b
  REQUIRE(term_eq(unit.lits[0].lhs, a)); // oriented left-to-right
  std::vector<UnitPremise> units{{77, &unit}};
  Clause c3 = mk_clause({mk_prop_literal(mk_app1(p, a), true)});
  std::vector<std::uint64_t> used;
  auto r3 = rewrite_with_units(c3, units, used);
  CHECK(r3.status == ContractOutcome::Status::Simplified);
  CHECK(clause_alpha_eq(r3.clause, mk_clause({mk_prop_literal(mk_app1(p, b), true)})));
  CHECK(used == std::vector<std::uint64_t>{77});
  // and the right-hand side stays put
  Clause c4 = mk_clause({mk_prop_literal(mk_app1(p, b), true)});
  used.clear();
  CHECK(rewrite_with_units(c4, units, used).status ==
        ContractOutcome::Status::Unchanged);

  // unit cutting removes a contradicted literal
  Clause c5 = mk_clause({mk_literal(a, b, false), mk_prop_literal(mk_app1(p, b), true)});
  used.clear();
  auto r5 = unit_cut(c5, units, used);
  CHECK(r5.status == ContractOutcome::Status::Simplified);
  CHECK(r5.clause.lits.size() == 1);

  // tautologies are redundant
  Clause c6 = mk_clause({mk_literal(a, a, true)});
  CHECK(simp_trivial(c6).status == ContractOutcome::Status::Redundant);
}

TEST_CASE("subsumption via one-substitution multiset matching") {
  Term a = mk_const("pa", ti());
  Term p = mk_const("pp", fun_type(ti(), to()));
  Term q = mk_const("pq1", to());
  Term x = mk_free(1, ti());
  Clause general = mk_clause({mk_prop_literal(mk_app1(p, x), true)});
  Clause specific = mk_clause({mk_prop_literal(mk_app1(p, a), true),
                               mk_prop_literal(q, true)});
  CHECK(subsumes(general, specific));
  CHECK_FALSE(subsumes(specific, general));
  // a variable cannot match two different terms
  Term b = mk_const("pb", ti());
  Clause g2 = mk_clause({mk_prop_literal(mk_app1(p, x), true),
                         mk_literal(x, b, false)});
  Clause s2 = mk_clause({mk_prop_literal(mk_app1(p, a), true),
                         mk_literal(b, b, false)});
  CHECK_FALSE(subsumes(g2, s2));
}

TEST_CASE("defined equality: Leibniz shapes become primitive equality") {
  Term a = mk_const("la", ti());
  Term b = mk_const("lb", ti());
  Type io = fun_type(ti(), to());
  // applied: Pi (\P. ~(P a) | P b)  ->  a = b
  Term leib = mk_forall(io, mk_or(mk_not(mk_app1(mk_bound(0, io), shift(a, 1))),
                                  mk_app1(mk_bound(0, io), shift(b, 1))));
  Clause c = mk_clause({mk_prop_literal(leib, true)});
  auto r = defined_eq_replace_clause(c);
  REQUIRE(r.has_value());
  CHECK(clause_alpha_eq(r->clause, mk_clause({mk_literal(a, b, true)})));
  // the replacement is justified: finite-model equivalence
  auto sizes = std::map<Symbol, std::size_t>{{intern("$i"), 2}};
  CHECK(hoptest::finite_equivalent(beta_eta_normalize(leib),
                                   beta_eta_normalize(mk_equation(a, b)), sizes) ==
        hoptest::OracleStatus::Valid);

  // the unapplied lambda form inside a definition literal
  Term leibFun = mk_lam(ti(), mk_lam(ti(), mk_forall(io,
      mk_or(mk_not(mk_app1(mk_bound(0, io), mk_bound(2, ti()))),
            mk_app1(mk_bound(0, io), mk_bound(1, ti()))))));
  Term eqc = mk_const("leq", fun_type(ti(), fun_type(ti(), to())));
  Clause d = mk_clause({mk_literal(eqc, beta_eta_normalize(leibFun), true)});
  auto rd = defined_eq_replace_clause(d);
  REQUIRE(rd.has_value());
  CHECK(clause_alpha_eq(rd->clause, mk_clause({mk_literal(eqc, t_eq(ti()), true)})));

  // half-applied form
  Term half = mk_lam(ti(), mk_forall(io,
      mk_or(mk_not(mk_app1(mk_bound(0, io), shift(a, 2))),
            mk_app1(mk_bound(0, io), mk_bound(1, ti())))));
  Term rc = mk_const("lr", fun_type(fun_type(ti(), to()), to()));
  Clause h = mk_clause({mk_prop_literal(mk_app1(rc, beta_eta_normalize(half)), true)});
  auto rh = defined_eq_replace_clause(h);
  REQUIRE(rh.has_value());
  Clause wantH = mk_clause({mk_prop_literal(
      mk_app1(rc, beta_eta_normalize(mk_app1(t_eq(ti()), a))), true)});
  CHECK(clause_alpha_eq(rh->clause, wantH));

  // Andrews shape: Pi (\q. ~(q a a) | q a b)  ->  a = b
  Type iio = fun_type(ti(), fun_type(ti(), to()));
  Term andrews = mk_forall(iio,
      mk_or(mk_not(mk_app(mk_bound(0, iio), {shift(a, 1), shift(a, 1)})),
            mk_app(mk_bound(0, iio), {shift(a, 1), shift(b, 1)})));
  Clause ac = mk_clause({mk_prop_literal(andrews, true)});
  auto ra = defined_eq_replace_clause(ac);
  REQUIRE(ra.has_value());
  CHECK(clause_alpha_eq(ra->clause, mk_clause({mk_literal(a, b, true)})));

  // no Leibniz shape, no change
  Clause n = mk_clause({mk_prop_literal(mk_app1(mk_const("pp", io), a), true)});
  CHECK_FALSE(defined_eq_replace_clause(n).has_value());
}

TEST_CASE("rule outputs are well typed") {
  Term a = mk_const("pa", ti());
  Term b = mk_const("pb", ti());
  Term p = mk_const("pp", fun_type(ti(), to()));
  Term x = mk_free(1, ti());
  Clause from = mk_clause({mk_literal(a, b, true)});
  Clause into = mk_clause({mk_prop_literal(mk_app1(p, x), true),
                           mk_literal(mk_app1(mk_const("jf", fun_type(ti(), ti())), x), a, false)});
  for (const auto& ro : paramodulate(from, into))
    for (const Literal& l : ro.clause.lits) {
      CHECK(check_types(l.lhs) == type_of(l.lhs));
      CHECK(check_types(l.rhs) == type_of(l.rhs));
      CHECK(type_of(l.lhs) == type_of(l.rhs));
    }
  for (const auto& ro : equality_factor(into))
    for (const Literal& l : ro.clause.lits) {
      CHECK(check_types(l.lhs) == type_of(l.lhs));
      CHECK(type_of(l.lhs) == type_of(l.rhs));
    }
}
