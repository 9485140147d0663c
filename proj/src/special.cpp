#include "mlv/special.hpp"

#include <mutex>
#include <vector>

#include "mlv/symbols.hpp"

namespace mlv {

std::string LaurentLeading::to_string() const {
  return "order " + std::to_string(order) + ", leading " + leading.to_string();
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {
mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

PeriodValue pi_power(long k) { return PeriodValue::symbol(sym_pi()).pow(k); }
}  // namespace

mpq_class bernoulli(unsigned n) {
  // Recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0, cached.
  static std::mutex mu;
  static std::vector<mpq_class> cache{mpq_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    mpq_class s = 0;
    for (unsigned j = 0; j < m; ++j) s += mpq_class(binomial(m + 1, j)) * cache[j];
    cache.push_back(-s / mpq_class(m + 1));
  }
  return cache[n];
}

LaurentLeading zeta_at_integer(long n) {
  if (n == 1) return {-1, PeriodValue(1)};
  if (n == 0) return {0, PeriodValue(mpq_class(-1, 2))};
  if (n < 0) {
    long m = -n;
    if (m % 2 == 0) return {1, PeriodValue::symbol(sym_zetaprime_neg(m))};
    mpq_class b = bernoulli(static_cast<unsigned>(m + 1));
    return {0, PeriodValue(mpq_class(-b / (m + 1)))};
  }
  if (n % 2 == 1) return {0, PeriodValue::symbol(sym_zeta_odd(n))};
  long k = n / 2;
  mpq_class c = bernoulli(static_cast<unsigned>(n));
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n));
  c *= two_pow;
  c /= 2 * factorial(static_cast<unsigned long>(n));
  if (k % 2 == 0) c = -c;
  return {0, PeriodValue(c) * pi_power(n)};
}

LaurentLeading gamma_r_at_integer(long n) {
  if (n <= 0 && n % 2 == 0) {
    // Gamma(z/2) near z/2 = -k has residue (-1)^k/k! in z/2, i.e. 2(-1)^k/k! in s.
    long k = -n / 2;
    mpq_class c(2, 1);
    c /= factorial(static_cast<unsigned long>(k));
    if (k % 2) c = -c;
    return {-1, PeriodValue(c) * pi_power(k)};
  }
  if (n % 2 == 0) {
    long x = n / 2;
    return {0, PeriodValue(mpq_class(factorial(static_cast<unsigned long>(x - 1)))) * pi_power(-x)};
  }
  // Half-integer Gamma values carry sqrt(pi), which cancels against pi^(-n/2).
  if (n > 0) {
    long m = (n - 1) / 2;  // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
    mpz_class four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
    mpq_class c(factorial(static_cast<unsigned long>(2 * m)), four_m * factorial(static_cast<unsigned long>(m)));
    c.canonicalize();
    return {0, PeriodValue(c) * pi_power(-m)};
  }
  long m = (1 - n) / 2;  // Gamma(1/2 - m) = (-4)^m m! sqrt(pi) / (2m)!
  mpz_class four_m;
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
  mpq_class c(four_m * factorial(static_cast<unsigned long>(m)), factorial(static_cast<unsigned long>(2 * m)));
  c.canonicalize();
  if (m % 2) c = -c;
  return {0, PeriodValue(c) * pi_power(m)};
}

LaurentLeading gamma_c_at_integer(long n) {
  PeriodValue two_pi = PeriodValue(2) * PeriodValue::symbol(sym_pi());
  if (n <= 0) {
    long k = -n;
    mpq_class c(2, 1);
    c /= factorial(static_cast<unsigned long>(k));
    if (k % 2) c = -c;
    return {-1, PeriodValue(c) * two_pi.pow(k)};
  }
  return {0, PeriodValue(mpq_class(2 * factorial(static_cast<unsigned long>(n - 1)))) * two_pi.pow(-n)};
}

}  // namespace mlv
