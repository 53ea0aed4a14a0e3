#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hop/symbols.hpp"

namespace hop {

class TypeNode;

// Types are hash-consed; pointer equality is structural equality.
using Type = const TypeNode*;

class TypeNode {
public:
  bool is_base() const { return arg_ == nullptr; }
  bool is_fun() const { return arg_ != nullptr; }
  Symbol base() const { return base_; }
  Type arg() const { return arg_; }
  Type result() const { return result_; }

private:
  friend Type base_type(Symbol);
  friend Type fun_type(Type, Type);
  TypeNode(Symbol b, Type a, Type r) : base_(b), arg_(a), result_(r) {}
  Symbol base_;
  Type arg_;
  Type result_;
};

Type base_type(Symbol name);
Type fun_type(Type arg, Type result);
Type fun_type(const std::vector<Type>& args, Type result);

Type type_i();
Type type_o();

// Number of arguments until the final base result.
int type_arity(Type t);
Type final_result(Type t);
std::vector<Type> arg_types(Type t);

std::string show_type(Type t);

}  // namespace hop
