#pragma once
#include <gmpxx.h>

#include "mlv/linalg.hpp"
#include "mlv/upoly.hpp"

namespace mlv {

// Inverse Frobenius acting on a rational model at a place of norm q = p^f.
struct FrobModule {
  long p = 2;
  int f = 1;
  QMatrix phi;

  mpz_class norm() const;  // q = p^f
  std::size_t rank() const { return phi.rows; }
  void validate() const;   // InvalidInput unless p prime, f >= 1, phi square invertible
};

// Local factor P(t)^(-exponent) with t = N(p)^(-s).
struct EulerFactor {
  long p = 2;
  int f = 1;
  UPoly poly;
  int exponent = 1;

  mpz_class norm() const;
  void validate() const;  // InvalidInput unless P(0) = 1
};

// det(I - M t).
UPoly reverse_char_poly(const QMatrix& m);

EulerFactor euler_poly(const FrobModule& v);

enum class FrobOp { Sum, Tensor, Dual };
// Dual ignores w.
FrobModule frob_algebra(const FrobModule& v, const FrobModule& w, FrobOp op);
FrobModule frob_dual(const FrobModule& v);
FrobModule twist(const FrobModule& v, long n);
// Induced module over the prime field: block companion matrix with phi in
// the top-right block and identities below the diagonal.
FrobModule pushdown(const FrobModule& v);

// L(V,s) = a * b^s * L(V^dual, -s).
struct EpsilonConstants {
  mpq_class a;
  mpz_class b;
};
EpsilonConstants epsilon_constants(const FrobModule& v);
// Checks t^n P_dual(1/t) = a P(t), the identity above written in t = q^(-s).
bool epsilon_identity_holds(const FrobModule& v, const EpsilonConstants& e);

}  // namespace mlv
