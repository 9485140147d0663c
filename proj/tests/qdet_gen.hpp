#pragma once
// Random generators for period values, Q-complexes and graded maps.
#include "mlv/linalg.hpp"
#include "mlv/period.hpp"
#include "mlv/qdet.hpp"
#include "oracle/random.hpp"

namespace th {

using mlv::GradedMap;
using mlv::PeriodValue;
using mlv::PMatrix;
using mlv::QComplex;
using oracle::Gen;

inline PeriodValue sym(const char* name) { return PeriodValue::symbol(name); }

// Monomial in pi, log_2, log_3 with a nonzero rational coefficient.
inline PeriodValue real_monomial(Gen& g) {
  PeriodValue v(g.nonzero_rational());
  const char* names[] = {"pi", "log_2", "log_3"};
  for (auto* n : names) v *= sym(n).pow(g.integer(-1, 1));
  return v;
}

inline PeriodValue real_value(Gen& g) {
  PeriodValue v(0);
  long terms = g.integer(1, 3);
  for (long k = 0; k < terms; ++k) v += real_monomial(g);
  return v;
}

inline PeriodValue complex_value(Gen& g) {
  PeriodValue num = real_value(g) + PeriodValue::imaginary_unit() * real_value(g);
  PeriodValue den = real_value(g);
  if (g.coin() && !den.is_zero()) return num / den;
  return num;
}

inline QComplex random_complex(Gen& g, int lo, int hi, std::size_t max_dim) {
  QComplex c;
  for (int d = lo; d <= hi; ++d) c.set(d, static_cast<std::size_t>(g.integer(0, static_cast<long>(max_dim))), real_monomial(g));
  return c;
}

inline PMatrix random_real_matrix(Gen& g, std::size_t rows, std::size_t cols) {
  PMatrix m(rows, cols);
  for (auto& x : m.a) {
    long kind = g.integer(0, 3);
    if (kind == 0) x = PeriodValue(0);
    else if (kind == 1) x = PeriodValue(g.rational());
    else x = real_monomial(g);
  }
  return m;
}

// Low-rank maps are likelier to exercise kernels and cokernels.
inline PMatrix random_map(Gen& g, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return PMatrix(rows, cols);
  if (g.integer(0, 2) == 0) {
    std::size_t r = static_cast<std::size_t>(g.integer(0, static_cast<long>(std::min(rows, cols))));
    return random_real_matrix(g, rows, r) * random_real_matrix(g, r, cols);
  }
  return random_real_matrix(g, rows, cols);
}

inline GradedMap random_graded_map(Gen& g) {
  GradedMap f;
  f.source = random_complex(g, -1, 2, 3);
  f.target = random_complex(g, -1, 2, 3);
  for (int d = -1; d <= 2; ++d) f.maps[d] = random_map(g, f.target.dim(d), f.source.dim(d));
  return f;
}

inline PMatrix invertible_period(Gen& g, std::size_t n) {
  while (true) {
    PMatrix m = random_real_matrix(g, n, n);
    if (!mlv::determinant(m).is_zero()) return m;
  }
}

inline bool ratio_rational(const PeriodValue& a, const PeriodValue& b) {
  auto r = mlv::pf_rational_ratio(a, b);
  return r.has_value() && *r != 0;
}

}  // namespace th
