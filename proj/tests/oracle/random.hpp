#pragma once
// Hand-rolled generators for property tests (seeded std::mt19937_64).
#include <random>

#include "mlv/galrep.hpp"
#include "mlv/linalg.hpp"

namespace oracle {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }
  mpq_class rational(long range = 5) {
    mpq_class r(integer(-range, range), integer(1, range));
    r.canonicalize();
    return r;
  }
  mpq_class nonzero_rational(long range = 5) {
    mpq_class r;
    do r = rational(range);
    while (r == 0);
    return r;
  }
  mlv::QMatrix qmatrix(std::size_t rows, std::size_t cols, long range = 5) {
    mlv::QMatrix m(rows, cols);
    for (auto& x : m.a) x = integer(0, 3) == 0 ? mpq_class(0) : rational(range);
    return m;
  }
  mlv::QMatrix invertible(std::size_t n, long range = 5) {
    while (true) {
      mlv::QMatrix m = qmatrix(n, n, range);
      if (mlv::determinant(m) != 0) return m;
    }
  }
  long prime(long max = 7) {
    static const long ps[] = {2, 3, 5, 7, 11, 13};
    long n = 0;
    for (long p : ps)
      if (p <= max) ++n;
    return ps[integer(0, n - 1)];
  }
  mlv::FrobModule frob(std::size_t max_rank = 3, int max_f = 1, long max_p = 7) {
    return mlv::FrobModule{prime(max_p), static_cast<int>(integer(1, max_f)), invertible(static_cast<std::size_t>(integer(1, static_cast<long>(max_rank))))};
  }
};

}  // namespace oracle
