#include "mlv/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlv {

unsigned Monomial::degree_in(SymbolId s) const {
  for (auto& [id, e] : factors)
    if (id == s) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors.reserve(factors.size() + o.factors.size());
  std::size_t i = 0, j = 0;
  while (i < factors.size() || j < o.factors.size()) {
    if (j == o.factors.size() || (i < factors.size() && symbol_before(factors[i].first, o.factors[j].first))) {
      r.factors.push_back(factors[i++]);
    } else if (i == factors.size() || symbol_before(o.factors[j].first, factors[i].first)) {
      r.factors.push_back(o.factors[j++]);
    } else {
      r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0;
  for (auto& [id, e] : o.factors) {
    while (i < factors.size() && factors[i].first != id) {
      if (!symbol_before(factors[i].first, id)) return std::nullopt;
      r.factors.push_back(factors[i++]);
    }
    if (i == factors.size() || factors[i].second < e) return std::nullopt;
    if (factors[i].second > e) r.factors.emplace_back(id, factors[i].second - e);
    ++i;
  }
  while (i < factors.size()) r.factors.push_back(factors[i++]);
  return r;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  std::size_t n = std::min(a.factors.size(), b.factors.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto [sa, ea] = a.factors[k];
    auto [sb, eb] = b.factors[k];
    if (sa != sb) return symbol_before(sa, sb) ? 1 : -1;
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  if (a.factors.size() != b.factors.size()) return a.factors.size() > b.factors.size() ? 1 : -1;
  return 0;
}

Poly::Poly(const mpq_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::symbol(SymbolId s, unsigned exp) {
  Monomial m;
  if (exp > 0) m.factors.emplace_back(s, exp);
  return term(mpq_class(1), m);
}

Poly Poly::term(const mpq_class& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

mpq_class Poly::constant_value() const { return terms_.empty() ? mpq_class(0) : terms_.begin()->second; }

void Poly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::exact_div(const Poly& b) const {
  if (b.is_zero()) throw std::logic_error("polynomial division by zero");
  if (b.is_constant()) return scaled(1 / b.constant_value());
  Poly q, r = *this;
  const Monomial& lb = b.leading_monomial();
  const mpq_class& cb = b.leading_coeff();
  while (!r.is_zero()) {
    auto qm = r.leading_monomial().divide(lb);
    if (!qm) throw std::logic_error("inexact polynomial division");
    Poly t = term(r.leading_coeff() / cb, *qm);
    q += t;
    r = r - t * b;
  }
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coeff());
}

std::optional<SymbolId> Poly::main_symbol() const {
  // Leading term in lex order holds the first symbol if any term does.
  for (auto& [m, c] : terms_)
    if (!m.is_one()) return m.factors.front().first;
  return std::nullopt;
}

unsigned Poly::degree_in(SymbolId s) const {
  unsigned d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(s));
  return d;
}

std::vector<Poly> Poly::coefficients_in(SymbolId s) const {
  std::vector<Poly> out(degree_in(s) + 1);
  for (auto& [m, c] : terms_) {
    Monomial rest;
    unsigned e = 0;
    for (auto& f : m.factors) {
      if (f.first == s)
        e = f.second;
      else
        rest.factors.push_back(f);
    }
    out[e].add_term(rest, c);
  }
  return out;
}

Poly Poly::from_coefficients(SymbolId s, const std::vector<Poly>& c) {
  Poly r;
  for (unsigned e = 0; e < c.size(); ++e) r += c[e] * symbol(s, e);
  return r;
}

Poly Poly::conjugate_symbols() const {
  Poly r;
  for (auto& [m, c] : terms_) {
    unsigned odd = 0;
    for (auto& [id, e] : m.factors)
      if (symbol_info(id).conj == Conjugation::Negated) odd += e;
    r.add_term(m, odd % 2 ? mpq_class(-c) : c);
  }
  return r;
}

bool Poly::has_symbol_where(bool (*pred)(SymbolId)) const {
  for (auto& [m, c] : terms_)
    for (auto& f : m.factors)
      if (pred(f.first)) return true;
  return false;
}

}  // namespace mlv
