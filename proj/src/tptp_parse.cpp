#include <cctype>
#include <fstream>
#include <sstream>

#include "hop/tptp.hpp"

namespace hop {

std::string role_name(Role r) {
  switch (r) {
    case Role::Axiom: return "axiom";
    case Role::Definition: return "definition";
    case Role::Conjecture: return "conjecture";
    case Role::NegatedConjecture: return "negated_conjecture";
    case Role::TypeDecl: return "type";
    case Role::Logic: return "logic";
    case Role::Plain: return "plain";
  }
  return "?";
}

std::string show_logic_spec(const LogicSpec& s) {
  std::string sys;
  switch (s.system) {
    case ModalSystem::K: sys = "K"; break;
    case ModalSystem::D: sys = "D"; break;
    case ModalSystem::T: sys = "T"; break;
    case ModalSystem::S4: sys = "S4"; break;
    case ModalSystem::S5: sys = "S5"; break;
  }
  std::string q = s.quantification == Quantification::Constant     ? "constant"
                  : s.quantification == Quantification::Cumulative ? "cumulative"
                                                                   : "varying";
  std::string c = s.consequence == Consequence::Local ? "local" : "global";
  return sys + "/" + q + "/" + (s.rigid ? "rigid" : "flexible") + "/" + c;
}

const AnnotatedFormula* Problem::conjecture() const {
  for (const auto& f : formulas)
    if (f.role == Role::Conjecture) return &f;
  return nullptr;
}

namespace {

enum class Tok {
  End, LowerWord, UpperWord, DollarWord, Quoted, Integer,
  LParen, RParen, LBracket, RBracket, Comma, Dot, Colon, ColonEq,
  Arrow,          // >
  At,             // @
  AtPlus,         // @+
  Bang,           // !
  BangBang,       // !!
  Question,       // ?
  QuestionQuestion,
  Caret,          // ^
  Tilde,          // ~
  Vline,          // |
  Amp,            // &
  Eq,             // =
  Neq,            // !=
  Implies,        // =>
  Impliedby,      // <=
  Iff             // <=>
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
public:
  explicit Lexer(std::string s) : src_(std::move(s)) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Tok::LowerWord;
      t.text = word();
      return t;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      t.kind = Tok::UpperWord;
      t.text = word();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      t.kind = Tok::Integer;
      t.text += take();
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '.'))
        t.text += take();
      return t;
    }
    if (c == '$') {
      take();
      t.kind = Tok::DollarWord;
      t.text = "$" + word();
      return t;
    }
    if (c == '\'') {
      take();
      t.kind = Tok::Quoted;
      while (pos_ < src_.size() && src_[pos_] != '\'') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) t.text += take();
        t.text += take();
      }
      if (pos_ >= src_.size()) fail("unterminated quoted atom", t);
      take();
      return t;
    }
    switch (c) {
      case '(': take(); t.kind = Tok::LParen; return t;
      case ')': take(); t.kind = Tok::RParen; return t;
      case '[': take(); t.kind = Tok::LBracket; return t;
      case ']': take(); t.kind = Tok::RBracket; return t;
      case ',': take(); t.kind = Tok::Comma; return t;
      case '.': take(); t.kind = Tok::Dot; return t;
      case ':':
        take();
        if (peek() == '=') { take(); t.kind = Tok::ColonEq; } else t.kind = Tok::Colon;
        return t;
      case '>': take(); t.kind = Tok::Arrow; return t;
      case '@':
        take();
        if (peek() == '+') { take(); t.kind = Tok::AtPlus; } else t.kind = Tok::At;
        return t;
      case '!':
        take();
        if (peek() == '=') { take(); t.kind = Tok::Neq; }
        else if (peek() == '!') { take(); t.kind = Tok::BangBang; }
        else t.kind = Tok::Bang;
        return t;
      case '?':
        take();
        if (peek() == '?') { take(); t.kind = Tok::QuestionQuestion; } else t.kind = Tok::Question;
        return t;
      case '^': take(); t.kind = Tok::Caret; return t;
      case '~': take(); t.kind = Tok::Tilde; return t;
      case '|': take(); t.kind = Tok::Vline; return t;
      case '&': take(); t.kind = Tok::Amp; return t;
      case '=':
        take();
        if (peek() == '>') { take(); t.kind = Tok::Implies; } else t.kind = Tok::Eq;
        return t;
      case '<':
        take();
        if (peek() == '=') {
          take();
          if (peek() == '>') { take(); t.kind = Tok::Iff; } else t.kind = Tok::Impliedby;
          return t;
        }
        fail("unexpected character '<'", t);
        return t;
      default:
        fail(std::string("unexpected character '") + c + "'", t);
        return t;
    }
  }

private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  std::string word() {
    std::string w;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      w += take();
    return w;
  }
  void skip_ws() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
      if (pos_ < src_.size() && src_[pos_] == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
        continue;
      }
      break;
    }
  }
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }

  std::string src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// pending polymorphic heads whose type is fixed by their first argument
enum class Pending { None, Pi, Sigma, Choice };

struct ParsedUnit {
  Term term;           // valid when pending == None
  Pending pending = Pending::None;
};

class Parser {
public:
  Parser(const std::string& text, const std::string& displayName, const std::string& dir)
      : lex_(text), dir_(dir) {
    problem_.sourcePath = displayName;
    advance();
  }

  Problem run() {
    while (cur_.kind != Tok::End) parse_entry();
    return std::move(problem_);
  }

  // merge entries parsed from an included file
  void set_problem(Problem p) { problem_ = std::move(p); }
  Problem take_problem() { return std::move(problem_); }

private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line, cur_.col); }

  void advance() { cur_ = lex_.next(); }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) fail(std::string("expected ") + what);
    advance();
  }

  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    advance();
    return true;
  }

  void parse_entry() {
    if (cur_.kind == Tok::LowerWord && cur_.text == "include") {
      advance();
      expect(Tok::LParen, "'('");
      if (cur_.kind != Tok::Quoted) fail("expected quoted include path");
      std::string path = cur_.text;
      advance();
      expect(Tok::RParen, "')'");
      expect(Tok::Dot, "'.'");
      if (path.find('/') != std::string::npos)
        fail("only same-directory includes are supported");
      std::ifstream in(dir_.empty() ? path : dir_ + "/" + path);
      if (!in) fail("cannot open include file '" + path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      Parser sub(ss.str(), problem_.sourcePath, dir_);
      sub.set_problem(std::move(problem_));
      while (sub.cur_.kind != Tok::End) sub.parse_entry();
      problem_ = sub.take_problem();
      return;
    }
    if (!(cur_.kind == Tok::LowerWord && cur_.text == "thf"))
      fail("expected 'thf' formula (only the THF dialect is supported)");
    advance();
    expect(Tok::LParen, "'('");
    AnnotatedFormula af;
    if (cur_.kind == Tok::LowerWord || cur_.kind == Tok::Integer || cur_.kind == Tok::Quoted)
      af.name = cur_.text;
    else
      fail("expected formula name");
    advance();
    expect(Tok::Comma, "','");
    af.role = parse_role();
    expect(Tok::Comma, "','");
    switch (af.role) {
      case Role::TypeDecl: parse_type_decl(af); break;
      case Role::Logic: parse_logic_entry(af); break;
      default: {
        bounds_.clear();
        af.formula = beta_eta_normalize(parse_formula());
        if (af.formula->type() != type_o())
          fail("formula of role " + role_name(af.role) + " must have type $o");
        break;
      }
    }
    if (accept(Tok::Comma)) {
      af.hasAnnotation = true;
      parse_source(af);
      if (accept(Tok::Comma)) skip_general_term();  // optional info
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Dot, "'.'");
    for (const auto& g : problem_.formulas)
      if (g.name == af.name) fail("duplicate formula name '" + af.name + "'");
    if (af.role == Role::Conjecture && problem_.conjecture())
      fail("more than one conjecture");
    if (af.role == Role::Logic && problem_.logicSpec)
      fail("more than one logic specification");
    if (af.role == Role::Logic) problem_.logicSpec = af.logic;
    problem_.formulas.push_back(std::move(af));
  }

  Role parse_role() {
    if (cur_.kind != Tok::LowerWord) fail("expected formula role");
    std::string r = cur_.text;
    advance();
    if (r == "axiom") return Role::Axiom;
    if (r == "definition") return Role::Definition;
    if (r == "conjecture") return Role::Conjecture;
    if (r == "negated_conjecture") return Role::NegatedConjecture;
    if (r == "type") return Role::TypeDecl;
    if (r == "logic") return Role::Logic;
    if (r == "plain") return Role::Plain;
    fail("unsupported formula role '" + r + "'");
  }

  void parse_type_decl(AnnotatedFormula& af) {
    bool paren = accept(Tok::LParen);
    std::string name;
    if (cur_.kind == Tok::LowerWord || cur_.kind == Tok::Quoted)
      name = cur_.text;
    else
      fail("expected symbol name in type declaration");
    advance();
    expect(Tok::Colon, "':'");
    Symbol sym = intern(name);
    if (cur_.kind == Tok::DollarWord && cur_.text == "$tType") {
      advance();
      if (problem_.baseTypes.count(sym)) fail("base type '" + name + "' declared twice");
      problem_.baseTypes.insert(sym);
      problem_.baseTypeOrder.push_back(sym);
      af.declared = sym;
      af.declaresBaseType = true;
    } else {
      Type ty = parse_type();
      if (problem_.signature.count(sym)) fail("symbol '" + name + "' declared twice");
      problem_.signature[sym] = ty;
      problem_.signatureOrder.push_back(sym);
      af.declared = sym;
      af.declaredType = ty;
    }
    problem_.usedNames->insert(name);
    if (paren) expect(Tok::RParen, "')'");
  }

  Type parse_type() {
    Type left = parse_type_unit();
    if (accept(Tok::Arrow)) return fun_type(left, parse_type());
    return left;
  }

  Type parse_type_unit() {
    if (accept(Tok::LParen)) {
      Type t = parse_type();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (cur_.kind == Tok::DollarWord) {
      if (cur_.text == "$i") { advance(); return type_i(); }
      if (cur_.text == "$o") { advance(); return type_o(); }
      fail("unknown defined type '" + cur_.text + "'");
    }
    if (cur_.kind == Tok::LowerWord || cur_.kind == Tok::Quoted) {
      Symbol s = intern(cur_.text);
      if (!problem_.baseTypes.count(s)) fail("unknown type '" + cur_.text + "'");
      advance();
      return base_type(s);
    }
    fail("expected a type");
  }

  void parse_logic_entry(AnnotatedFormula& af) {
    bool paren = accept(Tok::LParen);
    af.logic = parse_logic_body();
    if (paren) expect(Tok::RParen, "')'");
  }

  LogicSpec parse_logic_body() {
    if (!(cur_.kind == Tok::DollarWord && cur_.text == "$modal"))
      fail("expected '$modal' logic specification");
    advance();
    expect(Tok::ColonEq, "':='");
    expect(Tok::LBracket, "'['");
    LogicSpec spec;
    bool haveSystem = false;
    do {
      if (cur_.kind != Tok::DollarWord) fail("expected logic parameter key");
      std::string key = cur_.text;
      advance();
      expect(Tok::ColonEq, "':='");
      if (cur_.kind != Tok::DollarWord) fail("expected logic parameter value");
      std::string val = cur_.text;
      advance();
      if (key == "$constants") {
        if (val == "$rigid") spec.rigid = true;
        else if (val == "$flexible")
          fail("non-rigid constants are not supported");
        else
          fail("unknown value '" + val + "' for $constants");
      } else if (key == "$quantification") {
        if (val == "$constant") spec.quantification = Quantification::Constant;
        else if (val == "$cumulative") spec.quantification = Quantification::Cumulative;
        else if (val == "$varying") spec.quantification = Quantification::Varying;
        else fail("unknown value '" + val + "' for $quantification");
      } else if (key == "$consequence") {
        if (val == "$local") spec.consequence = Consequence::Local;
        else if (val == "$global") spec.consequence = Consequence::Global;
        else fail("unknown value '" + val + "' for $consequence");
      } else if (key == "$modalities") {
        haveSystem = true;
        if (val == "$modal_system_K") spec.system = ModalSystem::K;
        else if (val == "$modal_system_D") spec.system = ModalSystem::D;
        else if (val == "$modal_system_T") spec.system = ModalSystem::T;
        else if (val == "$modal_system_S4") spec.system = ModalSystem::S4;
        else if (val == "$modal_system_S5") spec.system = ModalSystem::S5;
        else fail("unknown modal system '" + val + "'");
      } else {
        fail("unknown logic parameter '" + key + "'");
      }
    } while (accept(Tok::Comma));
    expect(Tok::RBracket, "']'");
    if (!haveSystem) fail("logic specification misses $modalities");
    return spec;
  }

  // --- formulas ---

  Term parse_formula() {
    Term left = parse_disjunct();
    if (cur_.kind == Tok::Implies || cur_.kind == Tok::Impliedby || cur_.kind == Tok::Iff) {
      Tok op = cur_.kind;
      advance();
      Term right = parse_formula();
      require_bool(left);
      require_bool(right);
      if (op == Tok::Implies) return mk_implies(left, right);
      if (op == Tok::Impliedby) return mk_implies(right, left);
      return mk_equation(left, right);
    }
    return left;
  }

  Term parse_disjunct() {
    Term t = parse_conjunct();
    while (cur_.kind == Tok::Vline) {
      advance();
      Term r = parse_conjunct();
      require_bool(t);
      require_bool(r);
      t = mk_or(t, r);
    }
    return t;
  }

  Term parse_conjunct() {
    Term t = parse_equality();
    while (cur_.kind == Tok::Amp) {
      advance();
      Term r = parse_equality();
      require_bool(t);
      require_bool(r);
      t = mk_and(t, r);
    }
    return t;
  }

  Term parse_equality() {
    Term left = parse_applied();
    if (cur_.kind == Tok::Eq || cur_.kind == Tok::Neq) {
      bool neg = cur_.kind == Tok::Neq;
      advance();
      Term right = parse_applied();
      if (left->type() != right->type()) fail("equation between different types");
      Term eq = mk_equation(left, right);
      return neg ? mk_not(eq) : eq;
    }
    return left;
  }

  Term parse_applied() {
    ParsedUnit head = parse_preunit();
    while (cur_.kind == Tok::At) {
      advance();
      ParsedUnit arg = parse_preunit();
      Term a = finish_unit(arg);
      Term h = resolve_pending(head, a);
      head.pending = Pending::None;
      head.term = apply_term(h, a);
    }
    return finish_unit(head);
  }

  Term apply_term(const Term& h, const Term& a) {
    try {
      return mk_app1(h, a);
    } catch (const TypeError& e) {
      fail(e.what());
    }
  }

  Term resolve_pending(const ParsedUnit& u, const Term& firstArg) {
    if (u.pending == Pending::None) return u.term;
    Type at = firstArg->type();
    if (!at->is_fun() || at->result() != type_o())
      fail("operand of a pi, sigma or $choice head must have predicate type");
    Type tau = at->arg();
    switch (u.pending) {
      case Pending::Pi: return t_pi(tau);
      case Pending::Sigma:
        // ?? @ p  ==  ~(Pi (\x. ~(p x))), given as an eta-long lambda
        return mk_lam(at, mk_not(mk_forall(tau, mk_not(mk_app1(mk_bound(1, at),
                                                               mk_bound(0, tau))))));
      case Pending::Choice: return t_choice(tau);
      case Pending::None: break;
    }
    fail("internal pending head");
  }

  Term finish_unit(const ParsedUnit& u) {
    if (u.pending != Pending::None)
      fail("the pi, sigma and $choice heads must be applied");
    return u.term;
  }

  ParsedUnit parse_preunit() {
    if (cur_.kind == Tok::Tilde) {
      advance();
      ParsedUnit operand = parse_preunit();
      Term t = finish_unit(operand);
      require_bool(t);
      return {mk_not(t), Pending::None};
    }
    return parse_unitary();
  }

  ParsedUnit parse_unitary() {
    switch (cur_.kind) {
      case Tok::LParen: {
        advance();
        Term t = parse_formula();
        expect(Tok::RParen, "')'");
        return {t, Pending::None};
      }
      case Tok::Bang: return parse_binder(Binder::Forall);
      case Tok::Question: return parse_binder(Binder::Exists);
      case Tok::Caret: return parse_binder(Binder::Lambda);
      case Tok::AtPlus: return parse_binder(Binder::Choice);
      case Tok::BangBang: advance(); return {nullptr, Pending::Pi};
      case Tok::QuestionQuestion: advance(); return {nullptr, Pending::Sigma};
      case Tok::DollarWord: {
        std::string w = cur_.text;
        if (w == "$true") { advance(); return {t_true(), Pending::None}; }
        if (w == "$false") { advance(); return {t_false(), Pending::None}; }
        if (w == "$choice") { advance(); return {nullptr, Pending::Choice}; }
        if (w == "$box" || w == "$dia") {
          if (!problem_.logicSpec)
            fail("'" + w + "' requires a preceding logic specification");
          advance();
          return {w == "$box" ? t_box() : t_dia(), Pending::None};
        }
        fail("unknown defined symbol '" + w + "'");
      }
      case Tok::LowerWord:
      case Tok::Quoted: {
        Symbol s = intern(cur_.text);
        auto it = problem_.signature.find(s);
        if (it == problem_.signature.end())
          fail("unknown symbol '" + cur_.text + "'");
        advance();
        return {mk_const(s, it->second), Pending::None};
      }
      case Tok::UpperWord: {
        for (std::size_t i = bounds_.size(); i-- > 0;) {
          if (bounds_[i].first == cur_.text) {
            std::uint32_t idx = static_cast<std::uint32_t>(bounds_.size() - 1 - i);
            Term v = mk_bound(idx, bounds_[i].second);
            advance();
            return {v, Pending::None};
          }
        }
        fail("unbound variable '" + cur_.text + "'");
      }
      default:
        fail("expected a formula");
    }
  }

  enum class Binder { Forall, Exists, Lambda, Choice };

  ParsedUnit parse_binder(Binder b) {
    advance();
    expect(Tok::LBracket, "'['");
    std::vector<std::pair<std::string, Type>> vars;
    do {
      if (cur_.kind != Tok::UpperWord) fail("expected bound variable name");
      std::string name = cur_.text;
      advance();
      expect(Tok::Colon, "':'");
      Type ty = parse_type();
      vars.emplace_back(name, ty);
    } while (accept(Tok::Comma));
    expect(Tok::RBracket, "']'");
    expect(Tok::Colon, "':'");
    for (auto& v : vars) bounds_.push_back(v);
    ParsedUnit bodyU = parse_preunit();
    Term body = finish_unit(bodyU);
    for (std::size_t i = 0; i < vars.size(); ++i) bounds_.pop_back();
    if (b != Binder::Lambda) require_bool(body);
    if (b == Binder::Choice && vars.size() != 1)
      fail("'@+' binds exactly one variable");
    for (std::size_t i = vars.size(); i-- > 0;) {
      Type ty = vars[i].second;
      switch (b) {
        case Binder::Forall: body = mk_forall(ty, body); break;
        case Binder::Exists: body = mk_exists(ty, body); break;
        case Binder::Lambda: body = mk_lam(ty, body); break;
        case Binder::Choice: body = mk_app1(t_choice(ty), mk_lam(ty, body)); break;
      }
    }
    return {body, Pending::None};
  }

  void require_bool(const Term& t) {
    if (t->type() != type_o()) fail("subformula must have type $o");
  }

  // --- annotations ---

  void parse_source(AnnotatedFormula& af) {
    if (cur_.kind == Tok::LowerWord && cur_.text == "inference") {
      advance();
      expect(Tok::LParen, "'('");
      if (cur_.kind != Tok::LowerWord) fail("expected inference rule name");
      af.inferenceRule = cur_.text;
      advance();
      expect(Tok::Comma, "','");
      skip_general_term();  // useful info list
      expect(Tok::Comma, "','");
      expect(Tok::LBracket, "'['");
      if (cur_.kind != Tok::RBracket) {
        do {
          if (cur_.kind == Tok::LowerWord || cur_.kind == Tok::Integer ||
              cur_.kind == Tok::Quoted) {
            af.parents.push_back(cur_.text);
            advance();
          } else {
            skip_general_term();
          }
        } while (accept(Tok::Comma));
      }
      expect(Tok::RBracket, "']'");
      expect(Tok::RParen, "')'");
      return;
    }
    skip_general_term();
  }

  // consume one general term (atom, list, functor application) without
  // interpreting it
  void skip_general_term() {
    switch (cur_.kind) {
      case Tok::LBracket: {
        advance();
        if (cur_.kind != Tok::RBracket) {
          do skip_general_term();
          while (accept(Tok::Comma));
        }
        expect(Tok::RBracket, "']'");
        return;
      }
      case Tok::LowerWord:
      case Tok::DollarWord:
      case Tok::Quoted:
      case Tok::Integer:
      case Tok::UpperWord: {
        advance();
        if (accept(Tok::LParen)) {
          int depth = 1;
          while (depth > 0) {
            if (cur_.kind == Tok::End) fail("unterminated annotation");
            if (cur_.kind == Tok::LParen) ++depth;
            if (cur_.kind == Tok::RParen) --depth;
            advance();
          }
        }
        return;
      }
      default:
        fail("unexpected token in annotation");
    }
  }

  Lexer lex_;
  Token cur_;
  std::string dir_;
  Problem problem_;
  std::vector<std::pair<std::string, Type>> bounds_;
};

}  // namespace

Problem parse_problem(const std::string& text, const std::string& displayName) {
  Parser p(text, displayName, "");
  return p.run();
}

Problem parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string dir;
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash);
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  Parser p(ss.str(), base, dir);
  return p.run();
}

LogicSpec parse_logic_spec(const std::string& payload) {
  Problem pr = parse_problem("thf(spec, logic, (" + payload + ")).", "spec");
  return *pr.logicSpec;
}

std::string szs_name(SzsStatus s) {
  switch (s) {
    case SzsStatus::Theorem: return "Theorem";
    case SzsStatus::ContradictoryAxioms: return "ContradictoryAxioms";
    case SzsStatus::CounterSatisfiable: return "CounterSatisfiable";
    case SzsStatus::GaveUp: return "GaveUp";
    case SzsStatus::Timeout: return "Timeout";
    case SzsStatus::Error: return "Error";
  }
  return "Error";
}

std::string render_szs(SzsStatus s, const std::string& problemName) {
  return "% SZS status " + szs_name(s) + " for " + problemName;
}

}  // namespace hop
