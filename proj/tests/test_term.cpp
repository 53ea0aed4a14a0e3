#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hop/order.hpp"
#include "hop/term.hpp"
#include "support/term_gen.hpp"

using namespace hop;

namespace {

Type ti() { return type_i(); }
Type to() { return type_o(); }

}  // namespace

TEST_CASE("beta reduction: identity application") {
  // (\x. x) a  ->  a
  Term a = mk_const("a", ti());
  Term id = mk_lam(ti(), mk_bound(0, ti()));
  Term t = mk_app1(id, a);
  CHECK(term_eq(beta_eta_normalize(t), a));
}

TEST_CASE("eta contraction: \\x. f x -> f") {
  Term f = mk_const("f", fun_type(ti(), ti()));
  Term t = mk_lam(ti(), mk_app1(shift(f, 1), mk_bound(0, ti())));
  CHECK(term_eq(beta_eta_normalize(t), f));
}

TEST_CASE("K combinator: (\\x.\\y. x) a b -> a") {
  Term a = mk_const("a", ti());
  Term b = mk_const("b", ti());
  Term k = mk_lam(ti(), mk_lam(ti(), mk_bound(1, ti())));
  Term t = mk_app(k, {a, b});
  CHECK(term_eq(beta_eta_normalize(t), a));
}

TEST_CASE("normalization is idempotent, pointer-exact") {
  hoptest::TermGen gen(42);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.gen_closed(gen.random_type(2), 10);
    Term n1 = beta_eta_normalize(t);
    Term n2 = beta_eta_normalize(n1);
    CHECK(n1.get() == n2.get());
  }
}

TEST_CASE("substitute: X a with X -> \\y. y") {
  Term a = mk_const("a", ti());
  Term x = mk_free(1, fun_type(ti(), ti()));
  Term t = mk_app1(x, a);
  Substitution sigma;
  sigma.bind(x, beta_eta_normalize(mk_lam(ti(), mk_bound(0, ti()))));
  CHECK(term_eq(substitute(t, sigma), a));
}

TEST_CASE("substitute under a binder cannot capture") {
  // \z. X  with X -> c  gives \z. c
  Term c = mk_const("c", ti());
  Term x = mk_free(2, ti());
  Term t = mk_lam(ti(), shift(x, 1));
  Substitution sigma;
  sigma.bind(x, c);
  Term r = substitute(t, sigma);
  REQUIRE(r->tag() == Tag::Lam);
  CHECK(term_eq(r->body(), c));
}

TEST_CASE("substitute: empty substitution is identity") {
  Term x = mk_free(3, ti());
  CHECK(term_eq(substitute(x, Substitution()), x));
}

TEST_CASE("substitution rejects ill-typed bindings") {
  Substitution sigma;
  CHECK_THROWS_AS(sigma.bind(7, ti(), t_true()), TypeError);
}

TEST_CASE("positions: subterm_at and replace_at") {
  Term a = mk_const("a", ti());
  Term b = mk_const("b", ti());
  Term f = mk_const("f2", fun_type(ti(), fun_type(ti(), ti())));
  Term t = mk_app(f, {a, b});
  CHECK(term_eq(subterm_at(t, {2}), b));
  CHECK(term_eq(subterm_at(t, {0}), f));

  Term g = mk_const("g1", fun_type(ti(), ti()));
  Term fa = mk_app1(g, a);
  CHECK(term_eq(replace_at(fa, {1}, b), mk_app1(g, b)));
  CHECK(term_eq(replace_at(fa, {}, b), b));  // root replacement
  // round trip: subterm_at(replace_at(t, p, r), p) == r
  CHECK(term_eq(subterm_at(replace_at(t, {1}, b), {1}), b));

  CHECK_THROWS_AS(subterm_at(a, {1}), PositionError);
  CHECK_THROWS_AS(replace_at(fa, {1}, t_true()), TypeError);
}

TEST_CASE("type_of on the logical signature") {
  CHECK(type_of(t_not()) == fun_type(to(), to()));
  // choice at individuals: (i>o)>i
  CHECK(type_of(t_choice(ti())) == fun_type(fun_type(ti(), to()), ti()));
  Term f = mk_const("pf", fun_type(ti(), to()));
  Term a = mk_const("a", ti());
  CHECK(type_of(mk_app1(f, a)) == to());
  CHECK_THROWS_AS(mk_app1(a, a), TypeError);
}

TEST_CASE("type preservation under normalize, substitute, replace") {
  hoptest::TermGen gen(7);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.gen_closed(gen.random_type(2), 12);
    Term n = beta_eta_normalize(t);
    CHECK(type_of(n) == type_of(t));
    CHECK(check_types(n) == type_of(t));
    Substitution sigma = gen.gen_substitution(n, 6);
    Term s = substitute(n, sigma);
    CHECK(type_of(s) == type_of(t));
    CHECK(check_types(s) == type_of(t));
  }
}

TEST_CASE("substitution composition agrees with sequential application") {
  hoptest::TermGen gen(11);
  int done = 0;
  for (int i = 0; i < 400 && done < 200; ++i) {
    Term t = beta_eta_normalize(gen.gen_closed(gen.random_type(2), 10));
    Substitution sigma = gen.gen_substitution(t, 5);
    Term mid = substitute(t, sigma);
    Substitution theta = gen.gen_substitution(mid, 5);
    if (sigma.empty() && theta.empty()) continue;
    ++done;
    Term seq = substitute(substitute(t, sigma), theta);
    Term comp = substitute(t, theta.compose(sigma));
    CHECK(term_eq(seq, comp));
  }
  CHECK(done > 50);
}

TEST_CASE("substitution application is idempotent on disjoint ranges") {
  hoptest::TermGen gen(13);
  for (int i = 0; i < 200; ++i) {
    Term t = beta_eta_normalize(gen.gen_closed(gen.random_type(2), 10));
    Substitution sigma = gen.gen_substitution(t, 5);
    Term once = substitute(t, sigma);
    CHECK(term_eq(once, substitute(once, sigma)));
  }
}

TEST_CASE("nameless representation: alpha-variants are structurally equal") {
  // \x. f x x built twice has one representation; renaming is impossible to
  // express, so equality of independently built copies is the check
  Term f = mk_const("f2", fun_type(ti(), fun_type(ti(), ti())));
  Term one = mk_lam(ti(), mk_app(shift(f, 1), {mk_bound(0, ti()), mk_bound(0, ti())}));
  Term two = mk_lam(ti(), mk_app(shift(f, 1), {mk_bound(0, ti()), mk_bound(0, ti())}));
  CHECK(term_eq(one, two));
  CHECK(one->hash() == two->hash());
}

TEST_CASE("term ordering orients by declaration order on ties") {
  Term a = mk_const("a", ti());
  Term b = mk_const("b", ti());
  CHECK(term_cmp(a, b) == Cmp::GT);  // a interned first
  CHECK(term_cmp(b, a) == Cmp::LT);
  Term x = mk_free(900, ti());
  CHECK(term_cmp(x, a) == Cmp::NC);
  Term fa = mk_app1(mk_const("g1", fun_type(ti(), ti())), a);
  CHECK(term_cmp(fa, a) == Cmp::GT);  // heavier and variable-closed
}
