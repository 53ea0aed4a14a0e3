#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hop/derivation.hpp"
#include "hop/tptp.hpp"

namespace hop {

namespace {

bool plain_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string atom_name(Symbol s) {
  const std::string& n = symbol_name(s);
  if (!n.empty() && n[0] == '$') return n;
  if (plain_lower_word(n)) return n;
  std::string out = "'";
  for (char c : n) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

std::string bound_name(int binderDepth) { return "X" + std::to_string(binderDepth); }

// Every non-atomic rendering is wrapped in parentheses, so results can be
// dropped into any context.
std::string render(const Term& t, int depth);

std::string render_eta_expanded(const Term& t, int depth) {
  std::vector<Type> args = arg_types(t->type());
  std::uint32_t k = static_cast<std::uint32_t>(args.size());
  std::vector<Term> spine;
  for (std::uint32_t i = 0; i < k; ++i)
    spine.push_back(mk_bound(k - 1 - i, args[i]));
  Term body = mk_app(shift(t, static_cast<int>(k)), std::move(spine));
  Term out = body;
  for (std::size_t i = args.size(); i-- > 0;) out = mk_lam(args[i], out);
  return render(out, depth);
}

std::string render_quantified(const char* q, const Term& lam, int depth) {
  std::string vars;
  Term cur = lam;
  int d = depth;
  for (;;) {
    if (!vars.empty()) vars += ", ";
    vars += bound_name(d) + ": " + render_type_thf(cur->binder_type());
    ++d;
    Term body = cur->body();
    Term inner;
    if (std::string(q) == "!" && as_forall(body, inner) && inner->tag() == Tag::Lam) {
      cur = inner;
      continue;
    }
    return std::string("( ") + q + " [" + vars + "]: " + render(body, d) + " )";
  }
}

std::string render(const Term& t, int depth) {
  switch (t->tag()) {
    case Tag::Const: {
      Symbol s = t->sym();
      if (s == sym_true()) return "$true";
      if (s == sym_box()) return "$box";
      if (s == sym_dia()) return "$dia";
      if (is_logical_symbol(s)) return render_eta_expanded(t, depth);
      return atom_name(s);
    }
    case Tag::Free:
      return "V" + std::to_string(t->var_id());
    case Tag::Bound:
      return bound_name(depth - 1 - static_cast<int>(t->index()));
    case Tag::Lam: {
      std::string vars;
      Term cur = t;
      int d = depth;
      while (cur->tag() == Tag::Lam) {
        if (!vars.empty()) vars += ", ";
        vars += bound_name(d) + ": " + render_type_thf(cur->binder_type());
        cur = cur->body();
        ++d;
      }
      return "( ^ [" + vars + "]: " + render(cur, d) + " )";
    }
    case Tag::App: {
      const Term& h = t->head();
      const auto& sp = t->spine();
      if (h->tag() == Tag::Const) {
        Symbol s = h->sym();
        if (s == sym_not() && sp.size() == 1) {
          if (is_true(sp[0])) return "$false";
          return "( ~ " + render(sp[0], depth) + " )";
        }
        if (s == sym_or() && sp.size() == 2)
          return "( " + render(sp[0], depth) + " | " + render(sp[1], depth) + " )";
        if (s == sym_eq() && sp.size() == 2)
          return "( " + render(sp[0], depth) + " = " + render(sp[1], depth) + " )";
        if (s == sym_pi() && sp.size() == 1) {
          if (sp[0]->tag() == Tag::Lam) return render_quantified("!", sp[0], depth);
          return "( !! @ " + render(sp[0], depth) + " )";
        }
        if (s == sym_choice() && sp.size() == 1) {
          if (sp[0]->tag() == Tag::Lam) return render_quantified("@+", sp[0], depth);
          return "( $choice @ " + render(sp[0], depth) + " )";
        }
        if ((s == sym_not() || s == sym_or() || s == sym_eq()) && true)
          return render_eta_expanded(t, depth);  // partially applied connective
      }
      std::string out = "( " + render(h, depth);
      for (const Term& a : sp) out += " @ " + render(a, depth);
      return out + " )";
    }
  }
  return "?";
}

}  // namespace

std::string render_type_thf(Type t) { return show_type(t); }

std::string render_term_thf(const Term& t) { return render(t, 0); }

std::string render_clause_thf(const Clause& c) {
  return render_term_thf(clause_to_formula(c));
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Input: return "input";
    case Rule::Embed: return "embed";
    case Rule::NegConj: return "neg_conjecture";
    case Rule::Clausify: return "clausify";
    case Rule::Inst: return "inst";
    case Rule::DefEq: return "def_eq";
    case Rule::Para: return "para";
    case Rule::EqFac: return "eq_fac";
    case Rule::PS: return "prim_subst";
    case Rule::FuncExt: return "func_ext";
    case Rule::BoolExt: return "bool_ext";
    case Rule::Choice: return "choice";
    case Rule::FS: return "func_synth";
    case Rule::INJ: return "inj";
    case Rule::Simp: return "simp";
    case Rule::DER: return "der";
    case Rule::Rewrite: return "rewrite";
    case Rule::UnitCut: return "unit_cut";
  }
  return "?";
}

const Step* Derivation::find(std::uint64_t id) const {
  for (const Step& s : steps)
    if (s.id == id) return &s;
  return nullptr;
}

bool Derivation::refutation() const {
  return !steps.empty() && steps.back().isClause && steps.back().clause.empty();
}

std::size_t Derivation::inference_count() const {
  std::size_t n = 0;
  for (const Step& s : steps)
    if (s.rule != Rule::Input) ++n;
  return n;
}

namespace {

void collect_symbols(const Term& t, std::vector<std::pair<Symbol, Type>>& consts) {
  switch (t->tag()) {
    case Tag::Const: {
      if (is_logical_symbol(t->sym())) return;
      for (const auto& [s, ty] : consts)
        if (s == t->sym()) return;
      consts.emplace_back(t->sym(), t->type());
      return;
    }
    case Tag::Free:
    case Tag::Bound:
      return;
    case Tag::Lam:
      collect_symbols(t->body(), consts);
      return;
    case Tag::App:
      collect_symbols(t->head(), consts);
      for (const Term& a : t->spine()) collect_symbols(a, consts);
      return;
  }
}

void collect_base_types(Type ty, std::vector<Symbol>& out) {
  if (ty->is_fun()) {
    collect_base_types(ty->arg(), out);
    collect_base_types(ty->result(), out);
    return;
  }
  Symbol s = ty->base();
  const std::string& n = symbol_name(s);
  if (n == "$i" || n == "$o") return;
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

std::string subst_info(const Substitution& sigma) {
  std::string out;
  for (const auto& [id, val] : sigma.entries()) {
    out += ", bind(V" + std::to_string(id) + ", $thf(" + render_term_thf(val) + "))";
  }
  return out;
}

}  // namespace

std::string render_tstp(const Derivation& d) {
  if (d.steps.empty()) throw std::logic_error("cannot render an empty derivation");

  // step id -> printed name
  std::map<std::uint64_t, std::string> names;
  std::set<std::string> taken;
  for (const Step& s : d.steps)
    if (s.printable && s.rule == Rule::Input && !s.inputName.empty())
      taken.insert(s.inputName);
  for (const Step& s : d.steps) {
    if (!s.printable) continue;
    std::string n;
    if (s.rule == Rule::Input && !s.inputName.empty()) {
      n = s.inputName;
    } else {
      n = "c_" + std::to_string(s.id);
      while (taken.count(n)) n += "_d";
      taken.insert(n);
    }
    names[s.id] = n;
  }

  std::vector<std::pair<Symbol, Type>> consts;
  std::vector<Symbol> bases;
  for (const Step& s : d.steps) {
    if (!s.printable) continue;
    Term f = s.isClause ? clause_to_formula(s.clause) : s.formula;
    collect_symbols(f, consts);
  }
  for (const auto& [sym, ty] : consts) collect_base_types(ty, bases);

  std::ostringstream out;
  out << "% SZS output start Refutation\n";
  for (const Step& s : d.steps) {
    if (s.printable) continue;
    Term f = s.isClause ? clause_to_formula(s.clause) : s.formula;
    out << "% source " << (s.inputName.empty() ? std::to_string(s.id) : s.inputName)
        << ", " << role_name(s.role) << ": " << render_term_thf(f) << "\n";
  }
  int declIdx = 1;
  for (Symbol b : bases) {
    std::string n = "decl_" + std::to_string(declIdx++);
    while (taken.count(n)) n += "_d";
    taken.insert(n);
    out << "thf(" << n << ", type, " << atom_name(b) << ": $tType).\n";
  }
  for (const auto& [sym, ty] : consts) {
    std::string n = "decl_" + std::to_string(declIdx++);
    while (taken.count(n)) n += "_d";
    taken.insert(n);
    out << "thf(" << n << ", type, " << atom_name(sym) << ": " << render_type_thf(ty)
        << ").\n";
  }
  for (const Step& s : d.steps) {
    if (!s.printable) continue;
    Term f = s.isClause ? clause_to_formula(s.clause) : s.formula;
    std::string role =
        (s.rule == Rule::Input || !s.isClause) ? role_name(s.role) : "plain";
    out << "thf(" << names.at(s.id) << ", " << role << ", " << render_term_thf(f);
    if (s.rule == Rule::Input) {
      out << ", file('" << d.problemName << "', " << names.at(s.id) << ")";
    } else {
      std::string status = s.rule == Rule::NegConj ? "cth" : "thm";
      out << ", inference(" << rule_name(s.rule) << ", [status(" << status << ")"
          << subst_info(s.subst);
      if (!s.path.empty()) {
        out << ", pos(";
        for (std::size_t i = 0; i < s.path.size(); ++i)
          out << (i ? "," : "") << s.path[i];
        out << ")";
      }
      if (!s.coords.empty()) {
        out << ", at(";
        for (std::size_t i = 0; i < s.coords.size(); ++i)
          out << (i ? "," : "") << s.coords[i];
        out << ")";
      }
      out << "], [";
      bool first = true;
      for (std::uint64_t p : s.parents) {
        auto it = names.find(p);
        if (it == names.end()) continue;  // parent renders as a comment
        out << (first ? "" : ", ") << it->second;
        first = false;
      }
      out << "])";
    }
    out << ").\n";
  }
  out << "% SZS output end Refutation\n";
  return out.str();
}

}  // namespace hop
