#include "mlv/symbols.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <map>
#include <mutex>
#include <tuple>

#include "mlv/error.hpp"

namespace mlv {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::PairingDegenerate: return "PairingDegenerate";
    case ErrorCode::PlaceMismatch: return "PlaceMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::DualityDegenerate: return "DualityDegenerate";
    case ErrorCode::MalformedHodgeNumbers: return "MalformedHodgeNumbers";
    case ErrorCode::MissingRanks: return "MissingRanks";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::UnknownDatum: return "UnknownDatum";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::size_t kMaxSymbols = 1 << 14;

enum Family { kPi = 0, kLog = 1, kZetaOdd = 2, kZetaPrime = 3, kUser = 4 };

struct Registry {
  std::array<SymbolInfo, kMaxSymbols> table;
  std::atomic<std::size_t> count{0};
  std::mutex mu;
  std::map<std::string, SymbolId, std::less<>> by_name;
  std::uint64_t next_user_seq = 0;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::optional<long> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto rest = name.substr(prefix.size());
  if (rest.front() == '0') return std::nullopt;
  long v = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return v;
}

// Family and number for reserved names; throws on a malformed reserved name.
std::pair<int, long> classify(std::string_view name) {
  if (name == "pi") return {kPi, 0};
  if (name.starts_with("log_")) {
    auto p = parse_suffix(name, "log_");
    if (!p || !is_prime(*p)) throw Error(ErrorCode::InvalidInput, "log symbol needs a prime: " + std::string(name));
    return {kLog, *p};
  }
  if (name.starts_with("zeta_odd_")) {
    auto k = parse_suffix(name, "zeta_odd_");
    if (!k || *k < 3 || *k % 2 == 0)
      throw Error(ErrorCode::InvalidInput, "zeta_odd_k needs odd k >= 3: " + std::string(name));
    return {kZetaOdd, *k};
  }
  if (name.starts_with("zetaprime_neg_")) {
    auto m = parse_suffix(name, "zetaprime_neg_");
    if (!m || *m < 2 || *m % 2 != 0)
      throw Error(ErrorCode::InvalidInput, "zetaprime_neg_m needs even m >= 2: " + std::string(name));
    return {kZetaPrime, *m};
  }
  return {kUser, 0};
}

}  // namespace

bool is_valid_symbol_name(std::string_view name) {
  if (name.empty() || name == "i") return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(name.front())) return false;
  for (char c : name)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

SymbolId declare_symbol(std::string_view name, Conjugation conj) {
  if (!is_valid_symbol_name(name)) throw Error(ErrorCode::InvalidInput, "invalid symbol name '" + std::string(name) + "'");
  auto [family, number] = classify(name);
  if (family != kUser && conj != Conjugation::Fixed)
    throw Error(ErrorCode::InvalidInput, "reserved symbol " + std::string(name) + " is conjugation-fixed");
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.by_name.find(name); it != r.by_name.end()) {
    if (r.table[it->second].conj != conj)
      throw Error(ErrorCode::InvalidInput, "symbol " + std::string(name) + " redeclared with another conjugation");
    return it->second;
  }
  std::size_t id = r.count.load(std::memory_order_relaxed);
  if (id >= kMaxSymbols) throw Error(ErrorCode::InvalidInput, "symbol table full");
  SymbolInfo& info = r.table[id];
  info.name = std::string(name);
  info.conj = conj;
  info.family = family;
  info.number = number;
  info.seq = family == kUser ? r.next_user_seq++ : 0;
  r.by_name.emplace(info.name, static_cast<SymbolId>(id));
  r.count.store(id + 1, std::memory_order_release);
  return static_cast<SymbolId>(id);
}

std::optional<SymbolId> find_symbol(std::string_view name) {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.by_name.find(name);
  if (it == r.by_name.end()) return std::nullopt;
  return it->second;
}

const SymbolInfo& symbol_info(SymbolId id) {
  Registry& r = registry();
  if (id >= r.count.load(std::memory_order_acquire)) throw std::out_of_range("unknown symbol id");
  return r.table[id];
}

bool symbol_before(SymbolId a, SymbolId b) {
  if (a == b) return false;
  const SymbolInfo& x = symbol_info(a);
  const SymbolInfo& y = symbol_info(b);
  return std::tie(x.family, x.number, x.seq) < std::tie(y.family, y.number, y.seq);
}

bool symbol_is_opaque(SymbolId id) {
  int f = symbol_info(id).family;
  return f == kZetaOdd || f == kZetaPrime || f == kUser;
}

SymbolId sym_pi() { return declare_symbol("pi"); }
SymbolId sym_log(long p) { return declare_symbol("log_" + std::to_string(p)); }
SymbolId sym_zeta_odd(long k) { return declare_symbol("zeta_odd_" + std::to_string(k)); }
SymbolId sym_zetaprime_neg(long m) { return declare_symbol("zetaprime_neg_" + std::to_string(m)); }

}  // namespace mlv
