#include "mlv/period.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "mlv/error.hpp"

namespace mlv {

PeriodValue::PeriodValue(const mpq_class& q) : re_(q), den_(mpq_class(1)) {}

PeriodValue PeriodValue::symbol(SymbolId s) { return from_parts(Poly::symbol(s), Poly(), Poly(1)); }

PeriodValue PeriodValue::symbol(std::string_view name) { return symbol(declare_symbol(name)); }

PeriodValue PeriodValue::imaginary_unit() { return from_parts(Poly(), Poly(1), Poly(1)); }

PeriodValue PeriodValue::from_parts(Poly re, Poly im, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  PeriodValue v;
  v.re_ = std::move(re);
  v.im_ = std::move(im);
  v.den_ = std::move(den);
  v.canonicalize();
  return v;
}

void PeriodValue::canonicalize() {
  if (re_.is_zero() && im_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    // The denominator is usually the smallest of the three.
    Poly g = gcd(den_, re_.is_zero() ? im_ : re_);
    if (!g.is_constant() && !re_.is_zero() && !im_.is_zero()) g = gcd(g, im_);
    if (!g.is_constant()) {
      re_ = re_.exact_div(g);
      im_ = im_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  mpq_class lc = den_.leading_coeff();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    re_ = re_.scaled(inv);
    im_ = im_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool PeriodValue::is_one() const { return im_.is_zero() && den_.is_constant() && re_.is_constant() && re_.constant_value() == 1; }

bool PeriodValue::is_rational() const { return im_.is_zero() && re_.is_constant() && den_.is_constant(); }

mpq_class PeriodValue::rational_value() const { return re_.constant_value(); }

bool PeriodValue::is_real() const { return conj() == *this; }

bool PeriodValue::involves_opaque_symbol() const {
  return re_.has_symbol_where(symbol_is_opaque) || im_.has_symbol_where(symbol_is_opaque) ||
         den_.has_symbol_where(symbol_is_opaque);
}

PeriodValue PeriodValue::operator+(const PeriodValue& o) const {
  if (den_ == o.den_) return from_parts(re_ + o.re_, im_ + o.im_, den_);
  Poly g = gcd(den_, o.den_);
  Poly l1 = o.den_.exact_div(g), l2 = den_.exact_div(g);
  return from_parts(re_ * l1 + o.re_ * l2, im_ * l1 + o.im_ * l2, den_ * l1);
}

PeriodValue PeriodValue::operator-() const {
  PeriodValue r = *this;
  r.re_ = -re_;
  r.im_ = -im_;
  return r;
}

PeriodValue PeriodValue::operator-(const PeriodValue& o) const { return *this + (-o); }

PeriodValue PeriodValue::operator*(const PeriodValue& o) const {
  if (is_zero() || o.is_zero()) return PeriodValue();
  return from_parts(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_, den_ * o.den_);
}

PeriodValue PeriodValue::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // 1/((re + i im)/den) = den (re - i im) / (re^2 + im^2); the norm is a
  // nonzero polynomial because re and im have rational coefficients.
  Poly norm = re_ * re_ + im_ * im_;
  return from_parts(den_ * re_, -(den_ * im_), norm);
}

PeriodValue PeriodValue::operator/(const PeriodValue& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this * o.inverse();
}

PeriodValue PeriodValue::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  PeriodValue result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

PeriodValue PeriodValue::conj() const {
  return from_parts(re_.conjugate_symbols(), -im_.conjugate_symbols(), den_.conjugate_symbols());
}

PeriodValue pf_arith(const PeriodValue& x, const PeriodValue& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  return x;
}

PeriodValue pf_conj(const PeriodValue& x) { return x.conj(); }

std::optional<mpq_class> pf_rational_ratio(const PeriodValue& x, const PeriodValue& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "ratio against zero");
  PeriodValue q = x / y;
  if (!q.is_rational()) return std::nullopt;
  return q.rational_value();
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------- printing

namespace {

std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (auto& [id, e] : m.factors) {
    if (!s.empty()) s += "*";
    s += symbol_info(id).name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

struct Term {
  mpq_class coeff;
  const Monomial* mono;
  bool imaginary;
};

// Renders |coeff| * [i] * mono, folding a fractional coefficient into a
// trailing "/den".
std::string term_body(const Term& t) {
  mpz_class num = abs(t.coeff.get_num());
  mpz_class den = t.coeff.get_den();
  std::string factors;
  if (t.imaginary) factors = "i";
  std::string ms = monomial_to_string(*t.mono);
  if (!ms.empty()) factors += (factors.empty() ? "" : "*") + ms;
  std::string s;
  if (factors.empty())
    s = num.get_str();
  else if (num == 1)
    s = factors;
  else
    s = num.get_str() + "*" + factors;
  if (den != 1) s += "/" + den.get_str();
  return s;
}

std::vector<Term> collect_terms(const Poly& re, const Poly& im) {
  std::vector<Term> out;
  for (auto& [m, c] : re.terms()) out.push_back({c, &m, false});
  for (auto& [m, c] : im.terms()) out.push_back({c, &m, true});
  return out;
}

std::string sum_to_string(const std::vector<Term>& terms) {
  std::string s;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    bool neg = terms[k].coeff < 0;
    if (k == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += term_body(terms[k]);
  }
  return s;
}

}  // namespace

std::string PeriodValue::to_string() const {
  if (is_zero()) return "0";
  auto num = collect_terms(re_, im_);
  if (den_.is_constant()) return sum_to_string(num);
  const Monomial& dm = den_.leading_monomial();
  if (num.size() == 1 && den_.is_single_term()) {
    // c*[i]*m / dm with c = a/b rendered as a*[i]*m / (b*dm).
    const Term& t = num.front();
    mpz_class a = abs(t.coeff.get_num());
    mpz_class b = t.coeff.get_den();
    std::string top = term_body({mpq_class(a), t.mono, t.imaginary});
    std::vector<std::string> bottom;
    if (b != 1) bottom.push_back(b.get_str());
    for (auto& [id, e] : dm.factors) bottom.push_back(symbol_info(id).name + (e != 1 ? "^" + std::to_string(e) : ""));
    std::string bs;
    for (auto& f : bottom) bs += (bs.empty() ? "" : "*") + f;
    if (bottom.size() > 1) bs = "(" + bs + ")";
    return std::string(t.coeff < 0 ? "-" : "") + top + "/" + bs;
  }
  std::string top = sum_to_string(num);
  if (num.size() > 1 || top.find('/') != std::string::npos) top = "(" + top + ")";
  std::string bottom = sum_to_string(collect_terms(den_, Poly()));
  if (!(den_.is_single_term() && dm.factors.size() == 1)) bottom = "(" + bottom + ")";
  return top + "/" + bottom;
}

// ---------------------------------------------------------------- approx

namespace {

double zeta_numeric(long s) {
  // Euler-Maclaurin with a few correction terms; ample for s >= 3.
  const int N = 200;
  double sum = 0;
  for (int n = 1; n < N; ++n) sum += std::pow(n, -double(s));
  double x = N;
  sum += std::pow(x, 1.0 - s) / (s - 1) + 0.5 * std::pow(x, -double(s));
  sum += s * std::pow(x, -double(s) - 1) / 12.0;
  sum -= s * (s + 1.0) * (s + 2.0) * std::pow(x, -double(s) - 3) / 720.0;
  return sum;
}

std::optional<double> symbol_value(SymbolId id) {
  const SymbolInfo& info = symbol_info(id);
  switch (info.family) {
    case 0: return std::numbers::pi;
    case 1: return std::log(double(info.number));
    case 2: return zeta_numeric(info.number);
    case 3: {
      // zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2 (2 pi)^(2k)).
      long k = info.number / 2;
      double f = 1;
      for (long j = 2; j <= 2 * k; ++j) f *= j;
      double sign = k % 2 ? -1.0 : 1.0;
      return sign * f * zeta_numeric(2 * k + 1) / (2 * std::pow(2 * std::numbers::pi, 2.0 * k));
    }
    default: return std::nullopt;
  }
}

std::optional<double> eval_poly(const Poly& p) {
  double total = 0;
  for (auto& [m, c] : p.terms()) {
    double t = c.get_d();
    for (auto& [id, e] : m.factors) {
      auto v = symbol_value(id);
      if (!v) return std::nullopt;
      t *= std::pow(*v, double(e));
    }
    total += t;
  }
  return total;
}

}  // namespace

std::optional<std::complex<double>> PeriodValue::approx() const {
  auto r = eval_poly(re_), m = eval_poly(im_), d = eval_poly(den_);
  if (!r || !m || !d) return std::nullopt;
  return std::complex<double>(*r, *m) / *d;
}

}  // namespace mlv
