#include "support/finite_model.hpp"

#include <algorithm>

namespace hoptest {

using namespace hop;

std::size_t Universe::type_size(Type t) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  std::size_t n;
  if (t->is_base()) {
    if (t == type_o()) {
      n = 2;
    } else {
      auto b = baseSizes.find(t->base());
      if (b == baseSizes.end())
        throw std::runtime_error("no size for base type " + symbol_name(t->base()));
      n = b->second;
    }
  } else {
    std::size_t dom = type_size(t->arg());
    std::size_t cod = type_size(t->result());
    n = 1;
    for (std::size_t i = 0; i < dom; ++i) {
      if (n > cap / cod) throw UniverseTooBig();
      n *= cod;
    }
  }
  if (n == 0 || n > cap) throw UniverseTooBig();
  memo[t] = n;
  return n;
}

Value apply_value(Universe& u, Type fnTy, Value f, Value arg) {
  u.type_size(fnTy);  // reject tables too large to encode
  std::size_t cod = u.type_size(fnTy->result());
  Value p = 1;
  for (Value i = 0; i < arg; ++i) p *= cod;
  return (f / p) % cod;
}

Value make_fun(Universe& u, Type fnTy, const std::function<Value(Value)>& fn) {
  u.type_size(fnTy);  // reject tables too large to encode
  std::size_t dom = u.type_size(fnTy->arg());
  std::size_t cod = u.type_size(fnTy->result());
  Value v = 0;
  Value p = 1;
  for (std::size_t a = 0; a < dom; ++a) {
    v += fn(a) * p;
    p *= cod;
  }
  return v;
}

namespace {

Value logical_value(Universe& u, const Term& t) {
  Symbol s = t->sym();
  Type ty = t->type();
  if (s == sym_true()) return 1;
  if (s == sym_not()) return make_fun(u, ty, [](Value a) { return a ? 0 : 1; });
  if (s == sym_or())
    return make_fun(u, ty, [&](Value a) {
      return make_fun(u, ty->result(), [&](Value b) { return (a || b) ? 1 : 0; });
    });
  if (s == sym_eq())
    return make_fun(u, ty, [&](Value a) {
      return make_fun(u, ty->result(), [&](Value b) { return a == b ? 1 : 0; });
    });
  if (s == sym_pi())
    return make_fun(u, ty, [&](Value p) {
      std::size_t dom = u.type_size(ty->arg()->arg());
      for (std::size_t x = 0; x < dom; ++x)
        if (apply_value(u, ty->arg(), p, x) == 0) return Value(0);
      return Value(1);
    });
  if (s == sym_choice())
    return make_fun(u, ty, [&](Value p) {
      std::size_t dom = u.type_size(ty->arg()->arg());
      for (std::size_t x = 0; x < dom; ++x)
        if (apply_value(u, ty->arg(), p, x) == 1) return Value(x);
      return Value(0);
    });
  throw std::runtime_error("cannot evaluate symbol " + symbol_name(s));
}

}  // namespace

Value eval_term(Universe& u, const Interp& in, const Term& t,
                std::vector<Value>& env) {
  switch (t->tag()) {
    case Tag::Const: {
      if (is_logical_symbol(t->sym())) return logical_value(u, t);
      auto it = in.consts.find(t->sym());
      if (it == in.consts.end())
        throw std::runtime_error("no interpretation for " + symbol_name(t->sym()));
      return it->second;
    }
    case Tag::Free: {
      auto it = in.vars.find(t->var_id());
      if (it == in.vars.end())
        throw std::runtime_error("no assignment for variable");
      return it->second;
    }
    case Tag::Bound:
      return env[env.size() - 1 - t->index()];
    case Tag::Lam: {
      // build the result table by evaluating the body pointwise
      return make_fun(u, t->type(), [&](Value a) {
        env.push_back(a);
        Value r = eval_term(u, in, t->body(), env);
        env.pop_back();
        return r;
      });
    }
    case Tag::App: {
      // applied logical heads are computed structurally so quantifiers over
      // large types never materialize their own function tables
      const Term& h = t->head();
      if (h->tag() == Tag::Const && is_logical_symbol(h->sym())) {
        Symbol s = h->sym();
        const auto& sp = t->spine();
        if (s == sym_not() && sp.size() == 1)
          return eval_term(u, in, sp[0], env) ? 0 : 1;
        if (s == sym_or() && sp.size() == 2) {
          Value a = eval_term(u, in, sp[0], env);
          Value b = eval_term(u, in, sp[1], env);
          return (a || b) ? 1 : 0;
        }
        if (s == sym_eq() && sp.size() == 2)
          return eval_term(u, in, sp[0], env) == eval_term(u, in, sp[1], env) ? 1
                                                                              : 0;
        if (s == sym_pi() && sp.size() == 1) {
          Value p = eval_term(u, in, sp[0], env);
          Type pt = sp[0]->type();
          std::size_t dom = u.type_size(pt->arg());
          for (std::size_t x = 0; x < dom; ++x)
            if (apply_value(u, pt, p, x) == 0) return 0;
          return 1;
        }
        if (s == sym_choice() && sp.size() >= 1) {
          Value p = eval_term(u, in, sp[0], env);
          Type pt = sp[0]->type();
          std::size_t dom = u.type_size(pt->arg());
          Value witness = 0;
          for (std::size_t x = 0; x < dom; ++x)
            if (apply_value(u, pt, p, x) == 1) {
              witness = x;
              break;
            }
          Value f = witness;
          Type ty = h->type()->result();
          for (std::size_t i = 1; i < sp.size(); ++i) {
            Value av = eval_term(u, in, sp[i], env);
            f = apply_value(u, ty, f, av);
            ty = ty->result();
          }
          return f;
        }
      }
      Value f = eval_term(u, in, t->head(), env);
      Type ty = t->head()->type();
      for (const Term& a : t->spine()) {
        Value av = eval_term(u, in, a, env);
        f = apply_value(u, ty, f, av);
        ty = ty->result();
      }
      return f;
    }
  }
  throw std::runtime_error("unreachable");
}

bool eval_formula(Universe& u, const Interp& in, const Term& f) {
  std::vector<Value> env;
  return eval_term(u, in, f, env) == 1;
}

bool eval_clause(Universe& u, Interp in, const Clause& c) {
  std::vector<std::pair<std::uint64_t, Type>> vars;
  collect_free_vars(c, vars);
  std::vector<std::size_t> sizes;
  for (const auto& [id, ty] : vars) sizes.push_back(u.type_size(ty));
  std::vector<Value> idx(vars.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) in.vars[vars[i].first] = idx[i];
    bool some = false;
    for (const hop::Literal& l : c.lits) {
      std::vector<Value> env;
      bool eq = eval_term(u, in, l.lhs, env) == eval_term(u, in, l.rhs, env);
      if (eq == l.pos) {
        some = true;
        break;
      }
    }
    if (!some) return false;
    std::size_t k = 0;
    for (; k < vars.size(); ++k) {
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
    }
    if (k == vars.size()) break;
    if (vars.empty()) break;
  }
  return true;
}

void collect_constants(const Term& t, std::vector<std::pair<Symbol, Type>>& out) {
  switch (t->tag()) {
    case Tag::Const: {
      if (is_logical_symbol(t->sym())) return;
      for (const auto& [s, ty] : out)
        if (s == t->sym()) return;
      out.emplace_back(t->sym(), t->type());
      return;
    }
    case Tag::Free:
    case Tag::Bound:
      return;
    case Tag::Lam:
      collect_constants(t->body(), out);
      return;
    case Tag::App:
      collect_constants(t->head(), out);
      for (const Term& a : t->spine()) collect_constants(a, out);
      return;
  }
}

bool for_each_interp(Universe& u, const std::vector<std::pair<Symbol, Type>>& syms,
                     std::uint64_t budget, Interp base,
                     const std::function<bool(const Interp&)>& f) {
  std::vector<std::size_t> sizes;
  std::uint64_t total = 1;
  for (const auto& [s, ty] : syms) {
    std::size_t n = u.type_size(ty);
    sizes.push_back(n);
    if (total > budget / n) throw UniverseTooBig();
    total *= n;
  }
  std::vector<Value> idx(syms.size(), 0);
  for (;;) {
    Interp in = base;
    for (std::size_t i = 0; i < syms.size(); ++i) in.consts[syms[i].first] = idx[i];
    if (!f(in)) return false;
    std::size_t k = 0;
    for (; k < syms.size(); ++k) {
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
    }
    if (k == syms.size()) break;
  }
  return true;
}

OracleStatus finite_valid(const Term& f, const std::map<Symbol, std::size_t>& baseSizes,
                          std::uint64_t budget) {
  Universe u;
  u.baseSizes = baseSizes;
  std::vector<std::pair<Symbol, Type>> syms;
  collect_constants(f, syms);
  try {
    bool all = for_each_interp(u, syms, budget, {}, [&](const Interp& in) {
      return eval_formula(u, in, f);
    });
    return all ? OracleStatus::Valid : OracleStatus::Countermodel;
  } catch (const UniverseTooBig&) {
    return OracleStatus::TooBig;
  }
}

OracleStatus finite_equivalent(const Term& a, const Term& b,
                               const std::map<Symbol, std::size_t>& baseSizes,
                               std::uint64_t budget) {
  Universe u;
  u.baseSizes = baseSizes;
  std::vector<std::pair<Symbol, Type>> syms;
  collect_constants(a, syms);
  collect_constants(b, syms);
  try {
    bool all = for_each_interp(u, syms, budget, {}, [&](const Interp& in) {
      return eval_formula(u, in, a) == eval_formula(u, in, b);
    });
    return all ? OracleStatus::Valid : OracleStatus::Countermodel;
  } catch (const UniverseTooBig&) {
    return OracleStatus::TooBig;
  }
}

}  // namespace hoptest
