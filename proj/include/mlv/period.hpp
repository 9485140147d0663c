#pragma once
#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "mlv/poly.hpp"

namespace mlv {

// Element of Q(symbols)(i), stored as (re + i*im) / den with re, im, den in
// Q[symbols], gcd(re, im, den) = 1 and den monic. This form is unique, so
// equality is structural.
class PeriodValue {
 public:
  PeriodValue() : den_(mpq_class(1)) {}
  PeriodValue(long n) : PeriodValue(mpq_class(n)) {}
  PeriodValue(const mpq_class& q);
  static PeriodValue symbol(SymbolId s);
  static PeriodValue symbol(std::string_view name);
  static PeriodValue imaginary_unit();
  static PeriodValue from_parts(Poly re, Poly im, Poly den);
  static PeriodValue parse(std::string_view text);

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()
  bool is_real() const;
  bool involves_opaque_symbol() const;

  const Poly& re() const { return re_; }
  const Poly& im() const { return im_; }
  const Poly& den() const { return den_; }

  PeriodValue operator+(const PeriodValue& o) const;
  PeriodValue operator-(const PeriodValue& o) const;
  PeriodValue operator*(const PeriodValue& o) const;
  PeriodValue operator/(const PeriodValue& o) const;
  PeriodValue operator-() const;
  PeriodValue& operator+=(const PeriodValue& o) { return *this = *this + o; }
  PeriodValue& operator-=(const PeriodValue& o) { return *this = *this - o; }
  PeriodValue& operator*=(const PeriodValue& o) { return *this = *this * o; }
  PeriodValue& operator/=(const PeriodValue& o) { return *this = *this / o; }
  PeriodValue inverse() const;
  PeriodValue pow(long e) const;
  PeriodValue conj() const;
  bool operator==(const PeriodValue& o) const = default;

  std::string to_string() const;
  // Decimal value with log_p = ln p, pi, odd zeta values and zeta'(-2k)
  // substituted. Returns nullopt when a user symbol is involved.
  std::optional<std::complex<double>> approx() const;

 private:
  void canonicalize();
  Poly re_, im_, den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

PeriodValue pf_arith(const PeriodValue& x, const PeriodValue& y, ArithOp op);
PeriodValue pf_conj(const PeriodValue& x);
// q with x = q*y when x/y is a rational constant; throws DivisionByZero on y = 0.
std::optional<mpq_class> pf_rational_ratio(const PeriodValue& x, const PeriodValue& y);

std::string rational_to_string(const mpq_class& q);
mpq_class parse_rational(std::string_view text);

}  // namespace mlv
