#include "hop/symbols.hpp"

#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hop {

namespace {

struct SymbolTable {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, Symbol> ids;
  std::unordered_set<Symbol> minted;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

Symbol intern(std::string_view name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return it->second;
  Symbol s = static_cast<Symbol>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(t.names.back(), s);
  return s;
}

const std::string& symbol_name(Symbol s) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.at(s);
}

bool symbol_interned(std::string_view name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.ids.count(std::string(name)) > 0;
}

void mark_minted(Symbol s) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  t.minted.insert(s);
}

bool is_minted(Symbol s) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.minted.count(s) > 0;
}

}  // namespace hop
