#pragma once
#include <gmpxx.h>

#include <string>

#include "mlv/period.hpp"

namespace mlv {

// Leading Laurent term c*(s - s0)^order. Positive order is a zero, negative a pole.
struct LaurentLeading {
  int order = 0;
  PeriodValue leading = PeriodValue(1);

  LaurentLeading operator*(const LaurentLeading& o) const { return {order + o.order, leading * o.leading}; }
  LaurentLeading pow(int e) const { return {order * e, leading.pow(e)}; }
  bool operator==(const LaurentLeading& o) const = default;
  std::string to_string() const;
};

// Bernoulli numbers with B_1 = -1/2.
mpq_class bernoulli(unsigned n);
// Riemann zeta at the integer n.
LaurentLeading zeta_at_integer(long n);
// Gamma_R(z) = pi^(-z/2) Gamma(z/2) and Gamma_C(z) = 2 (2 pi)^(-z) Gamma(z)
// at the integer z = n, as a function of s with z = s + const.
LaurentLeading gamma_r_at_integer(long n);
LaurentLeading gamma_c_at_integer(long n);

mpz_class factorial(unsigned long n);

}  // namespace mlv
