#include "hop/term.hpp"

#include <algorithm>

namespace hop {

namespace {

std::size_t hash_mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace

struct TermFactory {
  static Term atom(Tag tag, Type ty, Symbol sym, std::uint64_t id, std::uint32_t idx) {
    auto n = std::shared_ptr<TermNode>(new TermNode());
    n->tag_ = tag;
    n->type_ = ty;
    n->sym_ = sym;
    n->id_ = id;
    n->idx_ = idx;
    n->loose_ = tag == Tag::Bound ? idx + 1 : 0;
    n->normal_ = true;
    n->weight_ = 1;
    std::size_t h = hash_mix(static_cast<std::size_t>(tag),
                             reinterpret_cast<std::size_t>(ty));
    h = hash_mix(h, static_cast<std::size_t>(sym));
    h = hash_mix(h, static_cast<std::size_t>(id));
    h = hash_mix(h, static_cast<std::size_t>(idx));
    n->hash_ = h;
    return n;
  }

  static Term lam(Type binder, const Term& body, bool markNormal) {
    auto n = std::shared_ptr<TermNode>(new TermNode());
    n->tag_ = Tag::Lam;
    n->type_ = fun_type(binder, body->type());
    n->body_ = body;
    n->loose_ = body->loose() > 0 ? body->loose() - 1 : 0;
    n->normal_ = markNormal;
    n->weight_ = 1 + body->weight();
    std::size_t h = hash_mix(static_cast<std::size_t>(Tag::Lam),
                             reinterpret_cast<std::size_t>(binder));
    n->hash_ = hash_mix(h, body->hash());
    return n;
  }

  static Term app(const Term& head, std::vector<Term> spine, bool markNormal) {
    if (spine.empty()) return head;
    Term h = head;
    if (head->tag() == Tag::App) {
      std::vector<Term> merged = head->spine();
      merged.insert(merged.end(), spine.begin(), spine.end());
      spine = std::move(merged);
      h = head->head();
    }
    Type ty = h->type();
    for (const Term& a : spine) {
      if (!ty->is_fun())
        throw TypeError("application of non-function term");
      if (ty->arg() != a->type())
        throw TypeError("argument type mismatch: expected " + show_type(ty->arg()) +
                        ", got " + show_type(a->type()));
      ty = ty->result();
    }
    auto n = std::shared_ptr<TermNode>(new TermNode());
    n->tag_ = Tag::App;
    n->type_ = ty;
    n->head_ = h;
    n->spine_ = std::move(spine);
    std::uint32_t loose = h->loose();
    std::uint32_t w = h->weight();
    std::size_t hash = hash_mix(static_cast<std::size_t>(Tag::App), h->hash());
    for (const Term& a : n->spine_) {
      loose = std::max(loose, a->loose());
      w += a->weight();
      hash = hash_mix(hash, a->hash());
    }
    n->loose_ = loose;
    n->weight_ = w;
    n->hash_ = hash;
    n->normal_ = markNormal;
    return n;
  }
};

Term mk_const(Symbol s, Type ty) { return TermFactory::atom(Tag::Const, ty, s, 0, 0); }
Term mk_const(std::string_view name, Type ty) { return mk_const(intern(name), ty); }
Term mk_free(std::uint64_t id, Type ty) { return TermFactory::atom(Tag::Free, ty, 0, id, 0); }
Term mk_bound(std::uint32_t index, Type ty) { return TermFactory::atom(Tag::Bound, ty, 0, 0, index); }
Term mk_lam(Type binder, const Term& body) { return TermFactory::lam(binder, body, false); }
Term mk_app(const Term& head, std::vector<Term> spine) {
  return TermFactory::app(head, std::move(spine), false);
}
Term mk_app1(const Term& head, const Term& arg) { return mk_app(head, {arg}); }

Symbol sym_true() { static Symbol s = intern("$true"); return s; }
Symbol sym_not() { static Symbol s = intern("$not"); return s; }
Symbol sym_or() { static Symbol s = intern("$or"); return s; }
Symbol sym_pi() { static Symbol s = intern("$pi"); return s; }
Symbol sym_eq() { static Symbol s = intern("$eq"); return s; }
Symbol sym_choice() { static Symbol s = intern("$choice"); return s; }
Symbol sym_box() { static Symbol s = intern("$box"); return s; }
Symbol sym_dia() { static Symbol s = intern("$dia"); return s; }

bool is_logical_symbol(Symbol s) {
  return s == sym_true() || s == sym_not() || s == sym_or() || s == sym_pi() ||
         s == sym_eq() || s == sym_choice() || s == sym_box() || s == sym_dia();
}

Term t_true() {
  static Term t = mk_const(sym_true(), type_o());
  return t;
}
Term t_not() {
  static Term t = mk_const(sym_not(), fun_type(type_o(), type_o()));
  return t;
}
Term t_or() {
  static Term t = mk_const(sym_or(), fun_type(type_o(), fun_type(type_o(), type_o())));
  return t;
}
Term t_pi(Type tau) {
  return mk_const(sym_pi(), fun_type(fun_type(tau, type_o()), type_o()));
}
Term t_eq(Type tau) {
  return mk_const(sym_eq(), fun_type(tau, fun_type(tau, type_o())));
}
Term t_choice(Type tau) {
  return mk_const(sym_choice(), fun_type(fun_type(tau, type_o()), tau));
}
Term t_box() {
  static Term t = mk_const(sym_box(), fun_type(type_o(), type_o()));
  return t;
}
Term t_dia() {
  static Term t = mk_const(sym_dia(), fun_type(type_o(), type_o()));
  return t;
}

Term mk_not(const Term& a) { return mk_app1(t_not(), a); }
Term mk_or(const Term& a, const Term& b) { return mk_app(t_or(), {a, b}); }
Term mk_and(const Term& a, const Term& b) { return mk_not(mk_or(mk_not(a), mk_not(b))); }
Term mk_implies(const Term& a, const Term& b) { return mk_or(mk_not(a), b); }
Term mk_equation(const Term& a, const Term& b) {
  if (a->type() != b->type()) throw TypeError("equation between different types");
  return mk_app(t_eq(a->type()), {a, b});
}
Term mk_forall(Type tau, const Term& lamBody) {
  return mk_app1(t_pi(tau), mk_lam(tau, lamBody));
}
Term mk_exists(Type tau, const Term& lamBody) {
  return mk_not(mk_forall(tau, mk_not(lamBody)));
}
Term t_false() {
  static Term t = mk_not(t_true());
  return t;
}

bool is_true(const Term& t) { return t->tag() == Tag::Const && t->sym() == sym_true(); }
bool is_false(const Term& t) {
  const Term* a = as_not(t);
  return a && is_true(*a);
}

const Term* as_not(const Term& t) {
  if (t->tag() == Tag::App && t->spine().size() == 1 &&
      t->head()->tag() == Tag::Const && t->head()->sym() == sym_not())
    return &t->spine()[0];
  return nullptr;
}

bool as_or(const Term& t, Term& a, Term& b) {
  if (t->tag() == Tag::App && t->spine().size() == 2 &&
      t->head()->tag() == Tag::Const && t->head()->sym() == sym_or()) {
    a = t->spine()[0];
    b = t->spine()[1];
    return true;
  }
  return false;
}

bool as_eq(const Term& t, Term& a, Term& b) {
  if (t->tag() == Tag::App && t->spine().size() == 2 &&
      t->head()->tag() == Tag::Const && t->head()->sym() == sym_eq()) {
    a = t->spine()[0];
    b = t->spine()[1];
    return true;
  }
  return false;
}

bool as_forall(const Term& t, Term& arg) {
  if (t->tag() == Tag::App && t->spine().size() == 1 &&
      t->head()->tag() == Tag::Const && t->head()->sym() == sym_pi()) {
    arg = t->spine()[0];
    return true;
  }
  return false;
}

bool term_eq(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash() || a->tag() != b->tag() || a->type() != b->type())
    return false;
  switch (a->tag()) {
    case Tag::Const: return a->sym() == b->sym();
    case Tag::Free: return a->var_id() == b->var_id();
    case Tag::Bound: return a->index() == b->index();
    case Tag::Lam: return term_eq(a->body(), b->body());
    case Tag::App: {
      if (a->spine().size() != b->spine().size()) return false;
      if (!term_eq(a->head(), b->head())) return false;
      for (std::size_t i = 0; i < a->spine().size(); ++i)
        if (!term_eq(a->spine()[i], b->spine()[i])) return false;
      return true;
    }
  }
  return false;
}

Term shift(const Term& t, int delta, std::uint32_t cutoff) {
  if (t->loose() <= cutoff || delta == 0) return t;
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Free:
      return t;
    case Tag::Bound: {
      if (t->index() < cutoff) return t;
      long idx = static_cast<long>(t->index()) + delta;
      if (idx < 0) throw PositionError("negative bound index after shift");
      Term r = mk_bound(static_cast<std::uint32_t>(idx), t->type());
      return r;
    }
    case Tag::Lam: {
      Term nb = shift(t->body(), delta, cutoff + 1);
      return TermFactory::lam(t->binder_type(), nb, t->normal() && nb->normal());
    }
    case Tag::App: {
      Term nh = shift(t->head(), delta, cutoff);
      std::vector<Term> sp;
      sp.reserve(t->spine().size());
      for (const Term& a : t->spine()) sp.push_back(shift(a, delta, cutoff));
      return TermFactory::app(nh, std::move(sp), false);
    }
  }
  return t;
}

namespace {

// Replace Bound(depth+i) for i < k by args[k-1-i] shifted by depth; decrement
// indices above depth+k.
Term bsubst_rec(const Term& t, const std::vector<Term>& args, std::uint32_t depth) {
  std::uint32_t k = static_cast<std::uint32_t>(args.size());
  if (t->loose() <= depth) return t;
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Free:
      return t;
    case Tag::Bound: {
      std::uint32_t j = t->index();
      if (j < depth) return t;
      if (j < depth + k) return shift(args[k - 1 - (j - depth)], static_cast<int>(depth));
      return mk_bound(j - k, t->type());
    }
    case Tag::Lam:
      return mk_lam(t->binder_type(), bsubst_rec(t->body(), args, depth + 1));
    case Tag::App: {
      Term nh = bsubst_rec(t->head(), args, depth);
      std::vector<Term> sp;
      sp.reserve(t->spine().size());
      for (const Term& a : t->spine()) sp.push_back(bsubst_rec(a, args, depth));
      return mk_app(nh, std::move(sp));
    }
  }
  return t;
}

}  // namespace

Term bsubst(const Term& body, const std::vector<Term>& args) {
  if (args.empty()) return body;
  return bsubst_rec(body, args, 0);
}

bool has_loose(const Term& t, std::uint32_t index) {
  if (t->loose() <= index) return false;
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Free:
      return false;
    case Tag::Bound:
      return t->index() == index;
    case Tag::Lam:
      return has_loose(t->body(), index + 1);
    case Tag::App: {
      if (has_loose(t->head(), index)) return true;
      for (const Term& a : t->spine())
        if (has_loose(a, index)) return true;
      return false;
    }
  }
  return false;
}

Term beta_eta_normalize(const Term& t) {
  if (t->normal()) return t;
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Free:
    case Tag::Bound:
      return t;
    case Tag::Lam: {
      Term nb = beta_eta_normalize(t->body());
      // eta: \x. (h s1..sn x) contracts when x is not loose elsewhere
      if (nb->tag() == Tag::App && nb->spine().back()->tag() == Tag::Bound &&
          nb->spine().back()->index() == 0) {
        bool clean = !has_loose(nb->head(), 0);
        for (std::size_t i = 0; clean && i + 1 < nb->spine().size(); ++i)
          clean = !has_loose(nb->spine()[i], 0);
        if (clean) {
          std::vector<Term> sp(nb->spine().begin(), nb->spine().end() - 1);
          Term contracted = TermFactory::app(nb->head(), std::move(sp), false);
          return beta_eta_normalize(shift(contracted, -1));
        }
      }
      return TermFactory::lam(t->binder_type(), nb, true);
    }
    case Tag::App: {
      Term h = t->head();
      std::vector<Term> spine = t->spine();
      // beta loop at the head
      for (;;) {
        h = beta_eta_normalize(h);
        if (h->tag() == Tag::App) {
          std::vector<Term> merged = h->spine();
          merged.insert(merged.end(), spine.begin(), spine.end());
          spine = std::move(merged);
          h = h->head();
          continue;
        }
        if (h->tag() != Tag::Lam || spine.empty()) break;
        // count leading lambdas
        std::size_t k = 0;
        Term body = h;
        while (body->tag() == Tag::Lam && k < spine.size()) {
          body = body->body();
          ++k;
        }
        std::vector<Term> args(spine.begin(), spine.begin() + k);
        spine.erase(spine.begin(), spine.begin() + k);
        h = bsubst(body, args);
      }
      if (spine.empty()) return h;
      std::vector<Term> nsp;
      nsp.reserve(spine.size());
      for (const Term& a : spine) nsp.push_back(beta_eta_normalize(a));
      return TermFactory::app(h, std::move(nsp), true);
    }
  }
  return t;
}

void Substitution::bind(std::uint64_t id, Type varType, const Term& value) {
  if (value->type() != varType)
    throw TypeError("substitution binds variable to term of different type");
  map_[id] = value;
}

void Substitution::bind(const Term& freeVar, const Term& value) {
  if (freeVar->tag() != Tag::Free)
    throw TypeError("substitution domain must be a free variable");
  bind(freeVar->var_id(), freeVar->type(), value);
}

const Term* Substitution::find(std::uint64_t id) const {
  auto it = map_.find(id);
  return it == map_.end() ? nullptr : &it->second;
}

Substitution Substitution::compose(const Substitution& inner) const {
  Substitution out;
  for (const auto& [id, val] : inner.map_) out.map_[id] = substitute(val, *this);
  for (const auto& [id, val] : map_)
    if (!out.map_.count(id)) out.map_[id] = val;
  return out;
}

namespace {

Term substitute_rec(const Term& t, const Substitution& sigma, std::uint32_t depth,
                    bool& changed) {
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Bound:
      return t;
    case Tag::Free: {
      if (const Term* v = sigma.find(t->var_id())) {
        changed = true;
        return shift(*v, static_cast<int>(depth));
      }
      return t;
    }
    case Tag::Lam: {
      bool ch = false;
      Term nb = substitute_rec(t->body(), sigma, depth + 1, ch);
      if (!ch) return t;
      changed = true;
      return mk_lam(t->binder_type(), nb);
    }
    case Tag::App: {
      bool ch = false;
      Term nh = substitute_rec(t->head(), sigma, depth, ch);
      std::vector<Term> sp;
      sp.reserve(t->spine().size());
      for (const Term& a : t->spine()) sp.push_back(substitute_rec(a, sigma, depth, ch));
      if (!ch) return t;
      changed = true;
      return mk_app(nh, std::move(sp));
    }
  }
  return t;
}

}  // namespace

Term substitute(const Term& t, const Substitution& sigma) {
  if (sigma.empty()) return beta_eta_normalize(t);
  bool changed = false;
  Term r = substitute_rec(t, sigma, 0, changed);
  return beta_eta_normalize(r);
}

Term subterm_at(const Term& t, const Position& pos) {
  Term cur = t;
  for (std::uint32_t sel : pos) {
    if (cur->tag() == Tag::Lam) {
      if (sel != 0) throw PositionError("lambda position selector must be 0");
      cur = cur->body();
    } else if (cur->tag() == Tag::App) {
      if (sel == 0)
        cur = cur->head();
      else if (sel <= cur->spine().size())
        cur = cur->spine()[sel - 1];
      else
        throw PositionError("spine index out of range");
    } else {
      throw PositionError("position descends into an atom");
    }
  }
  return cur;
}

namespace {

Term replace_rec(const Term& t, const Position& pos, std::size_t i, const Term& r) {
  if (i == pos.size()) {
    if (r->type() != t->type())
      throw TypeError("replacement changes the type of the subterm");
    return r;
  }
  std::uint32_t sel = pos[i];
  if (t->tag() == Tag::Lam) {
    if (sel != 0) throw PositionError("lambda position selector must be 0");
    return mk_lam(t->binder_type(), replace_rec(t->body(), pos, i + 1, r));
  }
  if (t->tag() == Tag::App) {
    if (sel == 0) return mk_app(replace_rec(t->head(), pos, i + 1, r), t->spine());
    if (sel > t->spine().size()) throw PositionError("spine index out of range");
    std::vector<Term> sp = t->spine();
    sp[sel - 1] = replace_rec(sp[sel - 1], pos, i + 1, r);
    return mk_app(t->head(), std::move(sp));
  }
  throw PositionError("position descends into an atom");
}

}  // namespace

Term replace_at(const Term& t, const Position& pos, const Term& r) {
  return replace_rec(t, pos, 0, r);
}

Type type_of(const Term& t) { return t->type(); }

namespace {

Type check_types_rec(const Term& t, std::vector<Type>& binders) {
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Free:
      return t->type();
    case Tag::Bound: {
      if (t->index() >= binders.size())
        throw TypeError("bound variable index exceeds binder depth");
      Type b = binders[binders.size() - 1 - t->index()];
      if (b != t->type()) throw TypeError("bound variable type disagrees with binder");
      return t->type();
    }
    case Tag::Lam: {
      binders.push_back(t->binder_type());
      Type bodyTy = check_types_rec(t->body(), binders);
      binders.pop_back();
      Type full = fun_type(t->binder_type(), bodyTy);
      if (full != t->type()) throw TypeError("lambda type cache mismatch");
      return full;
    }
    case Tag::App: {
      if (t->head()->tag() == Tag::App) throw TypeError("nested application head");
      Type ty = check_types_rec(t->head(), binders);
      for (const Term& a : t->spine()) {
        Type at = check_types_rec(a, binders);
        if (!ty->is_fun() || ty->arg() != at)
          throw TypeError("ill-typed application");
        ty = ty->result();
      }
      if (ty != t->type()) throw TypeError("application type cache mismatch");
      return ty;
    }
  }
  throw TypeError("unknown tag");
}

}  // namespace

Type check_types(const Term& t) {
  std::vector<Type> binders;
  return check_types_rec(t, binders);
}

void collect_free_vars(const Term& t, std::vector<std::pair<std::uint64_t, Type>>& out) {
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Bound:
      return;
    case Tag::Free: {
      for (const auto& [id, ty] : out)
        if (id == t->var_id()) return;
      out.emplace_back(t->var_id(), t->type());
      return;
    }
    case Tag::Lam:
      collect_free_vars(t->body(), out);
      return;
    case Tag::App:
      collect_free_vars(t->head(), out);
      for (const Term& a : t->spine()) collect_free_vars(a, out);
      return;
  }
}

bool occurs_free(const Term& t, std::uint64_t id) {
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Bound:
      return false;
    case Tag::Free:
      return t->var_id() == id;
    case Tag::Lam:
      return occurs_free(t->body(), id);
    case Tag::App: {
      if (occurs_free(t->head(), id)) return true;
      for (const Term& a : t->spine())
        if (occurs_free(a, id)) return true;
      return false;
    }
  }
  return false;
}

std::uint32_t count_free_occurrences(const Term& t, std::uint64_t id) {
  switch (t->tag()) {
    case Tag::Const:
    case Tag::Bound:
      return 0;
    case Tag::Free:
      return t->var_id() == id ? 1 : 0;
    case Tag::Lam:
      return count_free_occurrences(t->body(), id);
    case Tag::App: {
      std::uint32_t n = count_free_occurrences(t->head(), id);
      for (const Term& a : t->spine()) n += count_free_occurrences(a, id);
      return n;
    }
  }
  return 0;
}

std::string show_term(const Term& t) {
  switch (t->tag()) {
    case Tag::Const:
      return symbol_name(t->sym());
    case Tag::Free:
      return "V" + std::to_string(t->var_id());
    case Tag::Bound:
      return "#" + std::to_string(t->index());
    case Tag::Lam:
      return "(\\:" + show_type(t->binder_type()) + ". " + show_term(t->body()) + ")";
    case Tag::App: {
      std::string s = "(" + show_term(t->head());
      for (const Term& a : t->spine()) s += " " + show_term(a);
      return s + ")";
    }
  }
  return "?";
}

}  // namespace hop
