#include "hop/order.hpp"

#include <map>

namespace hop {

int precedence_rank(Symbol s) {
  if (is_minted(s)) return 2;
  if (is_logical_symbol(s)) return 0;
  return 1;
}

namespace {

void var_occurrences(const Term& t, std::map<std::uint64_t, std::uint32_t>& out) {
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Bound:
      return;
    case Tag::Free:
      out[t->var_id()]++;
      return;
    case Tag::Lam:
      var_occurrences(t->body(), out);
      return;
    case Tag::App:
      var_occurrences(t->head(), out);
      for (const Term& a : t->spine()) var_occurrences(a, out);
      return;
  }
}

// true when every variable occurs in small at most as often as in big
bool covers(const std::map<std::uint64_t, std::uint32_t>& big,
            const std::map<std::uint64_t, std::uint32_t>& small) {
  for (const auto& [id, n] : small) {
    auto it = big.find(id);
    if (it == big.end() || it->second < n) return false;
  }
  return true;
}

Cmp cmp_heads(const Term& s, const Term& t) {
  // only called on atoms of the same weight class
  if (s->tag() != t->tag()) return Cmp::NC;
  switch (s->tag()) {
    case Tag::Const: {
      if (s->sym() == t->sym()) return s->type() == t->type() ? Cmp::EQ : Cmp::NC;
      int rs = precedence_rank(s->sym());
      int rt = precedence_rank(t->sym());
      if (rs != rt) return rs > rt ? Cmp::GT : Cmp::LT;
      // earlier interned symbol is greater
      return s->sym() < t->sym() ? Cmp::GT : Cmp::LT;
    }
    case Tag::Free:
      return s->var_id() == t->var_id() ? Cmp::EQ : Cmp::NC;
    case Tag::Bound:
      return s->index() == t->index() ? Cmp::EQ : Cmp::NC;
    default:
      return Cmp::NC;
  }
}

Cmp cmp_structural(const Term& s, const Term& t) {
  if (term_eq(s, t)) return Cmp::EQ;
  if (s->tag() == Tag::Lam && t->tag() == Tag::Lam) {
    if (s->binder_type() != t->binder_type()) return Cmp::NC;
    return cmp_structural(s->body(), t->body());
  }
  if (s->tag() == Tag::App && t->tag() == Tag::App) {
    Cmp h = s->head()->tag() == Tag::App || t->head()->tag() == Tag::App
                ? Cmp::NC
                : cmp_heads(s->head(), t->head());
    if (h == Cmp::GT || h == Cmp::LT) return h;
    if (h != Cmp::EQ) return Cmp::NC;
    if (s->spine().size() != t->spine().size()) return Cmp::NC;
    for (std::size_t i = 0; i < s->spine().size(); ++i) {
      Cmp c = term_cmp(s->spine()[i], t->spine()[i]);
      if (c == Cmp::EQ) continue;
      return c;
    }
    return Cmp::EQ;
  }
  if (s->tag() == Tag::App || t->tag() == Tag::App || s->tag() == Tag::Lam ||
      t->tag() == Tag::Lam)
    return Cmp::NC;
  return cmp_heads(s, t);
}

}  // namespace

Cmp term_cmp(const Term& s, const Term& t) {
  if (term_eq(s, t)) return Cmp::EQ;
  std::map<std::uint64_t, std::uint32_t> vs, vt;
  var_occurrences(s, vs);
  var_occurrences(t, vt);
  if (s->weight() > t->weight()) return covers(vs, vt) ? Cmp::GT : Cmp::NC;
  if (t->weight() > s->weight()) return covers(vt, vs) ? Cmp::LT : Cmp::NC;
  if (!covers(vs, vt) || !covers(vt, vs)) return Cmp::NC;
  return cmp_structural(s, t);
}

}  // namespace hop
