#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mlv/galrep.hpp"
#include "mlv/special.hpp"
#include "mlv/upoly.hpp"

namespace mlv {

// Integer polynomial: exponent vector -> coefficient.
using IntPoly = std::map<std::vector<unsigned>, mpz_class>;

// Parses an integer polynomial in variables x0..x{nvars-1}. Coefficients are
// limited to |c| <= 10^18 (InvalidInput otherwise).
IntPoly parse_int_poly(const std::string& text, unsigned nvars);

struct VarietySpec {
  enum class Kind { Affine, Projective };
  Kind kind = Kind::Affine;
  unsigned ambient_dim = 0;
  std::vector<std::string> equations;

  unsigned num_vars() const { return kind == Kind::Projective ? ambient_dim + 1 : ambient_dim; }
  // Parses every equation; InvalidInput for parse errors or a
  // non-homogeneous equation in the projective case.
  std::vector<IntPoly> parsed() const;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
// MLV_BUDGET when set to a positive integer, else the default.
std::uint64_t enumeration_budget();

// |X(F_{p^k})|. Without equations (and for affine variables no equation
// mentions) the count is closed-form and costs nothing; otherwise the number
// of enumerated candidates must not exceed the budget (BudgetExceeded).
mpz_class point_count(const VarietySpec& v, long p, int k, std::uint64_t budget = enumeration_budget());
std::vector<mpz_class> point_counts(const VarietySpec& v, long p, int m, std::uint64_t budget = enumeration_budget());

// Z(t) = num/den with num(0) = den(0) = 1, coprime.
struct RationalZeta {
  UPoly num, den;
  std::string to_string() const;
};

// Power series coefficients of exp(sum N_k t^k / k) up to t^m.
std::vector<mpq_class> zeta_series(const std::vector<mpz_class>& counts);
RationalZeta zeta_from_counts(const std::vector<mpz_class>& counts, int deg_num, int deg_den);
// Numerator of Z(t) given its denominator: (den * Z) truncated to degree
// deg_num, with every further supplied count validated (ValidationFailed).
// Needs at least deg_num + 1 counts.
UPoly numerator_from_counts(const std::vector<mpz_class>& counts, const UPoly& den, int deg_num);
// Z(p^-s) as local factors: num with exponent -1, den with exponent 1.
std::vector<EulerFactor> zeta_factors(const RationalZeta& z, long p);

// prod zeta(s + a)^e times prod of extra factors.
struct ZetaWord {
  std::map<long, int> shifts;  // a -> e, nonzero exponents
  std::vector<EulerFactor> extra;

  void add_shift(long a, int e);
};

LaurentLeading euler_leading(const std::vector<EulerFactor>& factors, long s0);
LaurentLeading zetaword_leading(const ZetaWord& w, long s0);
// P(t) -> P(N(p)^-n t), so the twisted factor at s equals the original at s + n.
EulerFactor twist_factor(const EulerFactor& e, long n);

}  // namespace mlv
