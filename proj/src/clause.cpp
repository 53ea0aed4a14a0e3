#include "hop/clause.hpp"

#include <algorithm>
#include <map>

namespace hop {

namespace {

std::size_t hash_mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace

Literal mk_literal(const Term& s, const Term& t, bool pos, bool constraint) {
  Term lhs = beta_eta_normalize(s);
  Term rhs = beta_eta_normalize(t);
  if (lhs->type() != rhs->type())
    throw TypeError("literal equates terms of different types");
  for (;;) {
    if (is_true(lhs) && !is_true(rhs)) std::swap(lhs, rhs);
    if (!is_true(rhs)) break;
    // boolean shorthand: strip negation, unfold a primitive-equality head
    if (const Term* a = as_not(lhs)) {
      lhs = *a;
      pos = !pos;
      continue;
    }
    Term a, b;
    if (as_eq(lhs, a, b)) {
      lhs = a;
      rhs = b;
      continue;
    }
    break;
  }
  Literal l;
  l.pos = pos;
  l.constraint = constraint;
  Cmp c = term_cmp(lhs, rhs);
  if (c == Cmp::LT) {
    l.lhs = rhs;
    l.rhs = lhs;
    l.oriented = true;
  } else {
    l.lhs = lhs;
    l.rhs = rhs;
    l.oriented = (c == Cmp::GT);
  }
  return l;
}

Literal mk_prop_literal(const Term& s, bool pos, bool constraint) {
  return mk_literal(s, t_true(), pos, constraint);
}

Literal negate_literal(const Literal& l) {
  Literal r = l;
  r.pos = !l.pos;
  return r;
}

bool lit_eq(const Literal& a, const Literal& b) {
  if (a.pos != b.pos) return false;
  return (term_eq(a.lhs, b.lhs) && term_eq(a.rhs, b.rhs)) ||
         (term_eq(a.lhs, b.rhs) && term_eq(a.rhs, b.lhs));
}

std::size_t lit_hash(const Literal& l) {
  std::size_t h = l.lhs->hash() ^ l.rhs->hash();  // symmetric in the sides
  return hash_mix(h, l.pos ? 0x51u : 0xA3u);
}

bool lit_trivially_true(const Literal& l) { return l.pos && term_eq(l.lhs, l.rhs); }
bool lit_trivially_false(const Literal& l) { return !l.pos && term_eq(l.lhs, l.rhs); }
bool lit_is_prop(const Literal& l) { return is_true(l.rhs); }

std::uint32_t lit_weight(const Literal& l) { return l.lhs->weight() + l.rhs->weight(); }

Literal apply_substitution(const Literal& l, const Substitution& sigma) {
  return mk_literal(substitute(l.lhs, sigma), substitute(l.rhs, sigma), l.pos,
                    l.constraint);
}

std::uint32_t Clause::weight() const {
  std::uint32_t w = 0;
  for (const Literal& l : lits) w += lit_weight(l);
  return w;
}

Clause apply_substitution(const Clause& c, const Substitution& sigma) {
  Clause out;
  out.id = c.id;
  out.ps_count = c.ps_count;
  out.lits.reserve(c.lits.size());
  for (const Literal& l : c.lits) out.lits.push_back(apply_substitution(l, sigma));
  return out;
}

void collect_free_vars(const Clause& c, std::vector<std::pair<std::uint64_t, Type>>& out) {
  for (const Literal& l : c.lits) {
    collect_free_vars(l.lhs, out);
    collect_free_vars(l.rhs, out);
  }
}

Clause rename_apart(const Clause& c, FreshGen& fresh) {
  std::vector<std::pair<std::uint64_t, Type>> vars;
  collect_free_vars(c, vars);
  if (vars.empty()) return c;
  Substitution sigma;
  for (const auto& [id, ty] : vars) sigma.bind(id, ty, fresh.fresh_var(ty));
  return apply_substitution(c, sigma);
}

namespace {

// canonical renaming: free variables numbered by first occurrence
Substitution canonical_renaming(const Clause& c) {
  std::vector<std::pair<std::uint64_t, Type>> vars;
  collect_free_vars(c, vars);
  Substitution sigma;
  std::uint64_t n = 1;
  for (const auto& [id, ty] : vars) sigma.bind(id, ty, mk_free(n++, ty));
  return sigma;
}

}  // namespace

bool clause_alpha_eq(const Clause& a, const Clause& b) {
  if (a.lits.size() != b.lits.size()) return false;
  Clause ca = apply_substitution(a, canonical_renaming(a));
  Clause cb = apply_substitution(b, canonical_renaming(b));
  std::vector<bool> used(cb.lits.size(), false);
  for (const Literal& la : ca.lits) {
    bool found = false;
    for (std::size_t j = 0; j < cb.lits.size(); ++j) {
      if (!used[j] && lit_eq(la, cb.lits[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::size_t clause_canonical_hash(const Clause& c) {
  Clause cc = apply_substitution(c, canonical_renaming(c));
  std::vector<std::size_t> hs;
  hs.reserve(cc.lits.size());
  for (const Literal& l : cc.lits) hs.push_back(lit_hash(l));
  std::sort(hs.begin(), hs.end());
  std::size_t h = 0x2545F4914F6CDD1DULL;
  for (std::size_t x : hs) h = hash_mix(h, x);
  return h;
}

namespace {

bool match_rec(const Term& p, const Term& t, Substitution& sigma, std::uint32_t depth) {
  if (p->type() != t->type()) return false;
  switch (p->tag()) {
    case Tag::Free: {
      if (const Term* bound = sigma.find(p->var_id())) {
        Term want = shift(*bound, static_cast<int>(depth));
        return term_eq(want, t);
      }
      // the image may not capture bound variables of the context
      if (t->loose() > depth) return false;
      sigma.bind(p->var_id(), p->type(), shift(t, -static_cast<int>(depth)));
      return true;
    }
    case Tag::Const:
      return t->tag() == Tag::Const && t->sym() == p->sym();
    case Tag::Bound:
      return t->tag() == Tag::Bound && t->index() == p->index();
    case Tag::Lam:
      return t->tag() == Tag::Lam && p->binder_type() == t->binder_type() &&
             match_rec(p->body(), t->body(), sigma, depth + 1);
    case Tag::App: {
      if (p->head()->tag() == Tag::Free) return false;  // flexible applied head
      if (t->tag() != Tag::App) return false;
      if (p->spine().size() != t->spine().size()) return false;
      if (!match_rec(p->head(), t->head(), sigma, depth)) return false;
      for (std::size_t i = 0; i < p->spine().size(); ++i)
        if (!match_rec(p->spine()[i], t->spine()[i], sigma, depth)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

bool match_term(const Term& pattern, const Term& target, Substitution& sigma) {
  Substitution attempt = sigma;
  if (!match_rec(pattern, target, attempt, 0)) return false;
  sigma = attempt;
  return true;
}

namespace {

bool match_literal(const Literal& g, const Literal& s, Substitution& sigma) {
  if (g.pos != s.pos) return false;
  Substitution a = sigma;
  if (match_term(g.lhs, s.lhs, a) && match_term(g.rhs, s.rhs, a)) {
    sigma = a;
    return true;
  }
  Substitution b = sigma;
  if (match_term(g.lhs, s.rhs, b) && match_term(g.rhs, s.lhs, b)) {
    sigma = b;
    return true;
  }
  return false;
}

bool subsume_rec(const Clause& g, const Clause& s, std::size_t i,
                 std::vector<bool>& used, Substitution& sigma) {
  if (i == g.lits.size()) return true;
  for (std::size_t j = 0; j < s.lits.size(); ++j) {
    if (used[j]) continue;
    Substitution attempt = sigma;
    if (match_literal(g.lits[i], s.lits[j], attempt)) {
      used[j] = true;
      if (subsume_rec(g, s, i + 1, used, attempt)) {
        sigma = attempt;
        return true;
      }
      used[j] = false;
    }
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& general, const Clause& specific) {
  if (general.lits.size() > specific.lits.size()) return false;
  std::vector<bool> used(specific.lits.size(), false);
  Substitution sigma;
  return subsume_rec(general, specific, 0, used, sigma);
}

Term clause_to_formula(const Clause& c) {
  Term body;
  for (const Literal& l : c.lits) {
    Term lf;
    if (lit_is_prop(l))
      lf = l.pos ? l.lhs : mk_not(l.lhs);
    else {
      lf = mk_equation(l.lhs, l.rhs);
      if (!l.pos) lf = mk_not(lf);
    }
    body = body ? mk_or(body, lf) : lf;
  }
  if (!body) body = t_false();
  std::vector<std::pair<std::uint64_t, Type>> vars;
  collect_free_vars(c, vars);
  // close from the last variable inward so the first one is outermost;
  // substitute shifts the bound index by the binder depth it crosses
  for (std::size_t i = vars.size(); i-- > 0;) {
    const auto& [id, ty] = vars[i];
    Substitution sigma;
    sigma.bind(id, ty, mk_bound(0, ty));
    body = mk_forall(ty, substitute(body, sigma));
  }
  return beta_eta_normalize(body);
}

std::string show_clause(const Clause& c) {
  if (c.lits.empty()) return "[]";
  std::string out;
  for (std::size_t i = 0; i < c.lits.size(); ++i) {
    const Literal& l = c.lits[i];
    if (i) out += " | ";
    out += "[" + show_term(l.lhs) + (l.pos ? " = " : " != ") + show_term(l.rhs) + "]";
  }
  return out;
}

}  // namespace hop
