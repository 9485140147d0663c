#include "mlv/upoly.hpp"

#include <stdexcept>

#include "mlv/period.hpp"

namespace mlv {

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const mpq_class& c, unsigned k) {
  std::vector<mpq_class> v(k + 1, mpq_class(0));
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class UPoly::operator()(const mpq_class& t) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(-1); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x *= s;
  return UPoly(std::move(r));
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(1);
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> r = c_;
  int dd = d.degree();
  std::vector<mpq_class> q(std::max(0, degree() - dd + 1), mpq_class(0));
  for (int k = degree(); k >= dd; --k) {
    mpq_class f = r[k] / d.c_[dd];
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::scale_variable(const mpq_class& c) const {
  std::vector<mpq_class> r = c_;
  mpq_class f = 1;
  for (auto& x : r) {
    x *= f;
    f *= c;
  }
  return UPoly(std::move(r));
}

UPoly UPoly::substitute_power(unsigned k) const {
  if (is_zero()) return UPoly();
  std::vector<mpq_class> r((c_.size() - 1) * k + 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::reversed(unsigned n) const {
  if (degree() > static_cast<int>(n)) throw std::invalid_argument("reversal bound below degree");
  std::vector<mpq_class> r(n + 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::truncated(unsigned n) const {
  std::vector<mpq_class> r(c_.begin(), c_.begin() + std::min<std::size_t>(n, c_.size()));
  return UPoly(std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpq_class a = abs(c_[k]);
    bool neg = c_[k] < 0;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty())
      s += rational_to_string(a);
    else if (a == 1)
      s += mono;
    else if (a.get_den() == 1)
      s += a.get_num().get_str() + "*" + mono;
    else if (a.get_num() == 1)
      s += mono + "/" + a.get_den().get_str();
    else
      s += a.get_num().get_str() + "*" + mono + "/" + a.get_den().get_str();
  }
  return s;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(1 / x.coeffs().back());
}

}  // namespace mlv
