#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hop {

// Interned identifier. Comparisons on Symbol are by intern order, which is
// deterministic for a fixed sequence of intern() calls.
using Symbol = std::uint32_t;

Symbol intern(std::string_view name);
const std::string& symbol_name(Symbol s);
bool symbol_interned(std::string_view name);

// Symbols minted by the prover (Skolem constants, definition predicates,
// embedding machinery). They rank above user signature symbols in the
// term ordering.
void mark_minted(Symbol s);
bool is_minted(Symbol s);

}  // namespace hop
