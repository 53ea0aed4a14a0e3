#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "hop/symbols.hpp"
#include "hop/term.hpp"

namespace hop {

// Per-run source of fresh variable ids and fresh symbols. A copy of the
// counters taken before a rule application is enough to replay it exactly,
// since all minting goes through here. Fresh symbol names avoid the input
// problem's symbols (passed as avoid), never the global intern table, so two
// identical runs in one process mint identical names.
struct FreshGen {
  std::uint64_t next_var = 1;
  std::uint64_t next_sym = 1;
  std::shared_ptr<const std::set<std::string>> avoid;

  std::uint64_t fresh_var_id() { return next_var++; }
  Term fresh_var(Type ty) { return mk_free(fresh_var_id(), ty); }

  Symbol fresh_symbol(const std::string& prefix) {
    for (;;) {
      std::string name = prefix + std::to_string(next_sym++);
      if (avoid && avoid->count(name)) continue;
      Symbol s = intern(name);
      mark_minted(s);
      return s;
    }
  }
  Term fresh_const(const std::string& prefix, Type ty) {
    return mk_const(fresh_symbol(prefix), ty);
  }

  struct Snapshot {
    std::uint64_t next_var;
    std::uint64_t next_sym;
  };
  Snapshot snapshot() const { return {next_var, next_sym}; }
  void restore(const Snapshot& s) {
    next_var = s.next_var;
    next_sym = s.next_sym;
  }
};

}  // namespace hop
