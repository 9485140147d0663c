#include "mlv/galrep.hpp"

#include "mlv/error.hpp"
#include "mlv/symbols.hpp"

namespace mlv {

namespace {
mpz_class prime_power(long p, int f) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
  return q;
}
}  // namespace

mpz_class FrobModule::norm() const { return prime_power(p, f); }
mpz_class EulerFactor::norm() const { return prime_power(p, f); }

void FrobModule::validate() const {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidInput, "p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw Error(ErrorCode::InvalidInput, "residue degree must be positive");
  if (phi.rows != phi.cols) throw Error(ErrorCode::InvalidInput, "Frobenius matrix must be square");
  if (determinant(phi) == 0) throw Error(ErrorCode::InvalidInput, "Frobenius matrix must be invertible");
}

void EulerFactor::validate() const {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidInput, "p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw Error(ErrorCode::InvalidInput, "residue degree must be positive");
  if (poly.coeff(0) != 1) throw Error(ErrorCode::InvalidInput, "Euler polynomial must satisfy P(0) = 1");
}

UPoly reverse_char_poly(const QMatrix& m) {
  // Faddeev-LeVerrier: det(xI - M) = sum c_k x^k, then det(I - M t) = sum c_{n-k} t^k.
  std::size_t n = m.rows;
  std::vector<mpq_class> c(n + 1, mpq_class(0));
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    QMatrix prod = m * mk;
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  std::vector<mpq_class> r(n + 1);
  for (std::size_t k = 0; k <= n; ++k) r[k] = c[n - k];
  return UPoly(std::move(r));
}

EulerFactor euler_poly(const FrobModule& v) {
  v.validate();
  return EulerFactor{v.p, v.f, reverse_char_poly(v.phi), 1};
}

FrobModule frob_dual(const FrobModule& v) {
  v.validate();
  return FrobModule{v.p, v.f, inverse(v.phi).transpose()};
}

FrobModule frob_algebra(const FrobModule& v, const FrobModule& w, FrobOp op) {
  if (op == FrobOp::Dual) return frob_dual(v);
  v.validate();
  w.validate();
  if (v.p != w.p || v.f != w.f)
    throw Error(ErrorCode::PlaceMismatch, "modules live at different places (" + std::to_string(v.p) + "^" +
                                              std::to_string(v.f) + " vs " + std::to_string(w.p) + "^" + std::to_string(w.f) + ")");
  if (op == FrobOp::Sum) return FrobModule{v.p, v.f, block_diagonal(v.phi, w.phi)};
  return FrobModule{v.p, v.f, kronecker(v.phi, w.phi)};
}

FrobModule twist(const FrobModule& v, long n) {
  v.validate();
  mpq_class q(v.norm());
  mpq_class factor = 1;
  for (long k = 0; k < (n < 0 ? -n : n); ++k) factor *= q;
  if (n > 0) factor = 1 / factor;
  return FrobModule{v.p, v.f, v.phi.scaled(factor)};
}

FrobModule pushdown(const FrobModule& v) {
  v.validate();
  if (v.f == 1) return v;
  std::size_t r = v.rank(), f = static_cast<std::size_t>(v.f);
  QMatrix b(r * f, r * f);
  // Block (0, f-1) = phi, blocks (k, k-1) = I; then B^f = diag(phi, ..., phi).
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) b(i, (f - 1) * r + j) = v.phi(i, j);
  for (std::size_t k = 1; k < f; ++k)
    for (std::size_t i = 0; i < r; ++i) b(k * r + i, (k - 1) * r + i) = 1;
  FrobModule out{v.p, 1, std::move(b)};
  if (reverse_char_poly(out.phi) != reverse_char_poly(v.phi).substitute_power(static_cast<unsigned>(f)))
    throw std::logic_error("pushdown polynomial identity failed");
  return out;
}

EpsilonConstants epsilon_constants(const FrobModule& v) {
  v.validate();
  std::size_t n = v.rank();
  mpq_class a = 1 / determinant(v.phi);
  if (n % 2) a = -a;
  mpz_class b = 1;
  for (std::size_t k = 0; k < n; ++k) b *= v.norm();
  EpsilonConstants e{a, b};
  if (!epsilon_identity_holds(v, e)) throw std::logic_error("epsilon identity failed");
  return e;
}

bool epsilon_identity_holds(const FrobModule& v, const EpsilonConstants& e) {
  // With t = q^(-s): b^s = t^(-n) exactly when b = q^n.
  std::size_t n = v.rank();
  mpz_class qn = 1;
  for (std::size_t k = 0; k < n; ++k) qn *= v.norm();
  if (e.b != qn) return false;
  UPoly p = reverse_char_poly(v.phi);
  UPoly pd = reverse_char_poly(frob_dual(v).phi);
  return pd.reversed(static_cast<unsigned>(n)) == p.scaled(e.a);
}

}  // namespace mlv
