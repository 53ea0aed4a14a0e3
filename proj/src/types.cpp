#include "hop/types.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace hop {

namespace {

struct TypeStore {
  std::mutex mu;
  std::map<Symbol, std::unique_ptr<TypeNode>> bases;
  std::map<std::pair<Type, Type>, std::unique_ptr<TypeNode>> funs;
};

TypeStore& store() {
  static TypeStore s;
  return s;
}

}  // namespace

Type base_type(Symbol name) {
  auto& s = store();
  std::lock_guard<std::mutex> lock(s.mu);
  auto it = s.bases.find(name);
  if (it != s.bases.end()) return it->second.get();
  auto node = std::unique_ptr<TypeNode>(new TypeNode(name, nullptr, nullptr));
  Type t = node.get();
  s.bases.emplace(name, std::move(node));
  return t;
}

Type fun_type(Type arg, Type result) {
  auto& s = store();
  std::lock_guard<std::mutex> lock(s.mu);
  auto key = std::make_pair(arg, result);
  auto it = s.funs.find(key);
  if (it != s.funs.end()) return it->second.get();
  auto node = std::unique_ptr<TypeNode>(new TypeNode(0, arg, result));
  Type t = node.get();
  s.funs.emplace(key, std::move(node));
  return t;
}

Type fun_type(const std::vector<Type>& args, Type result) {
  Type t = result;
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = fun_type(*it, t);
  return t;
}

Type type_i() {
  static Type t = base_type(intern("$i"));
  return t;
}

Type type_o() {
  static Type t = base_type(intern("$o"));
  return t;
}

int type_arity(Type t) {
  int n = 0;
  while (t->is_fun()) {
    ++n;
    t = t->result();
  }
  return n;
}

Type final_result(Type t) {
  while (t->is_fun()) t = t->result();
  return t;
}

std::vector<Type> arg_types(Type t) {
  std::vector<Type> out;
  while (t->is_fun()) {
    out.push_back(t->arg());
    t = t->result();
  }
  return out;
}

std::string show_type(Type t) {
  if (t->is_base()) return symbol_name(t->base());
  std::string lhs = show_type(t->arg());
  if (t->arg()->is_fun()) lhs = "(" + lhs + ")";
  return lhs + ">" + show_type(t->result());
}

}  // namespace hop
