#pragma once
#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlv/symbols.hpp"

namespace mlv {

// Monomial: (symbol, exponent) pairs sorted by symbol order, exponents > 0.
struct Monomial {
  std::vector<std::pair<SymbolId, unsigned>> factors;

  bool is_one() const { return factors.empty(); }
  unsigned degree_in(SymbolId s) const;
  Monomial operator*(const Monomial& o) const;
  // Exact quotient when o divides *this.
  std::optional<Monomial> divide(const Monomial& o) const;
  bool operator==(const Monomial& o) const = default;
};

// Lexicographic order with earlier-declared symbols most significant.
int compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) > 0;
  }
};

// Multivariate polynomial over Q in the declared symbols. Terms are kept in
// descending monomial order so the first entry is the leading term.
class Poly {
 public:
  using Terms = std::map<Monomial, mpq_class, MonomialGreater>;

  Poly() = default;
  explicit Poly(const mpq_class& c);
  static Poly symbol(SymbolId s, unsigned exp = 1);
  static Poly term(const mpq_class& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  mpq_class constant_value() const;  // requires is_constant()
  const Terms& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const mpq_class& leading_coeff() const { return terms_.begin()->second; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& c) const;
  Poly& operator+=(const Poly& o);
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Exact division; throws std::logic_error when b does not divide *this.
  Poly exact_div(const Poly& b) const;
  Poly monic() const;
  // First symbol (in monomial order) occurring in the polynomial.
  std::optional<SymbolId> main_symbol() const;
  unsigned degree_in(SymbolId s) const;
  // Coefficients as a polynomial in s over the remaining symbols.
  std::vector<Poly> coefficients_in(SymbolId s) const;
  static Poly from_coefficients(SymbolId s, const std::vector<Poly>& c);
  // Substitutes s -> -s for every conj-negated symbol.
  Poly conjugate_symbols() const;
  bool has_symbol_where(bool (*pred)(SymbolId)) const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  Terms terms_;
};

// Monic greatest common divisor in Q[symbols]; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace mlv
