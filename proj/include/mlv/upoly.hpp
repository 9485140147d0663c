#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace mlv {

// Univariate polynomial over Q; coeffs[k] multiplies t^k, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> coeffs);
  static UPoly constant(const mpq_class& c) { return UPoly({c}); }
  static UPoly monomial(const mpq_class& c, unsigned k);
  // 1 - c t
  static UPoly linear_factor(const mpq_class& c) { return UPoly({1, -c}); }

  const std::vector<mpq_class>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(unsigned k) const { return k < c_.size() ? c_[k] : mpq_class(0); }
  mpq_class operator()(const mpq_class& t) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const mpq_class& s) const;
  UPoly pow(unsigned e) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // Quotient and remainder by a nonzero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  // P(c t)
  UPoly scale_variable(const mpq_class& c) const;
  // P(t^k)
  UPoly substitute_power(unsigned k) const;
  // t^n P(1/t) for n = degree bound given.
  UPoly reversed(unsigned n) const;
  UPoly truncated(unsigned n) const;  // mod t^n

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

UPoly upoly_gcd(const UPoly& a, const UPoly& b);

}  // namespace mlv
