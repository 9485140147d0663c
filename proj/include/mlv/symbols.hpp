#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mlv {

enum class Conjugation { Fixed, Negated };

using SymbolId = std::uint32_t;

// Process-wide symbol table. Symbols are only ever added, never removed, so
// ids stay valid and reads need no locking.
//
// Monomial order is lexicographic by declaration order, where the reserved
// families are declared in a fixed canonical order ahead of user symbols:
// pi, log_p by p, zeta_odd_k by k, zetaprime_neg_2k by k, then user symbols
// in the order they were declared.
struct SymbolInfo {
  std::string name;
  Conjugation conj = Conjugation::Fixed;
  int family = 0;
  long number = 0;
  std::uint64_t seq = 0;
};

// Looks up or creates a symbol. Reserved names are validated (log_p needs a
// prime, zeta_odd_k an odd k >= 3, zetaprime_neg_m an even m >= 2) and are
// always conj-fixed. Redeclaring with a different conjugation throws.
SymbolId declare_symbol(std::string_view name, Conjugation conj = Conjugation::Fixed);
std::optional<SymbolId> find_symbol(std::string_view name);
const SymbolInfo& symbol_info(SymbolId id);
// True when a precedes b in the monomial order.
bool symbol_before(SymbolId a, SymbolId b);
bool is_valid_symbol_name(std::string_view name);
// Reserved constants whose rationality status is unknown (odd zeta values,
// derivatives at negative even integers) and user-declared symbols.
bool symbol_is_opaque(SymbolId id);

SymbolId sym_pi();
SymbolId sym_log(long p);
SymbolId sym_zeta_odd(long k);
SymbolId sym_zetaprime_neg(long m);

bool is_prime(long n);

}  // namespace mlv
