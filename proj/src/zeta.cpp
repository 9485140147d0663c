#include "mlv/zeta.hpp"

#include <cctype>
#include <cstdlib>
#include <set>

#include "mlv/error.hpp"
#include "mlv/finite_field.hpp"
#include "mlv/linalg.hpp"
#include "mlv/symbols.hpp"

namespace mlv {

namespace {

IntPoly poly_add(IntPoly a, const IntPoly& b, int sign) {
  for (auto& [e, c] : b) {
    a[e] += sign > 0 ? c : mpz_class(-c);
    if (a[e] == 0) a.erase(e);
  }
  return a;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
      if (r[e] == 0) r.erase(e);
    }
  return r;
}

class IntPolyParser {
 public:
  IntPolyParser(const std::string& s, unsigned nvars) : s_(s), n_(nvars) {}

  IntPoly parse() {
    IntPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "equation '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  IntPoly constant(const mpz_class& c) const {
    IntPoly r;
    if (c != 0) r[std::vector<unsigned>(n_, 0)] = c;
    return r;
  }
  IntPoly expr() {
    IntPoly r = term();
    while (true) {
      if (eat('+')) r = poly_add(r, term(), 1);
      else if (eat('-')) r = poly_add(r, term(), -1);
      else return r;
    }
  }
  IntPoly term() {
    IntPoly r = factor();
    while (eat('*')) r = poly_mul(r, factor());
    return r;
  }
  IntPoly factor() {
    if (eat('-')) return poly_add(IntPoly{}, factor(), -1);
    IntPoly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      if (e > 64) fail("exponent too large");
      IntPoly r = constant(1);
      for (unsigned long i = 0; i < e; ++i) r = poly_mul(r, base);
      return r;
    }
    return base;
  }
  IntPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      if (v > mpz_class("1000000000000000000")) fail("coefficient exceeds 10^18");
      return constant(v);
    }
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a variable index after 'x'");
      unsigned long idx = std::stoul(s_.substr(start, pos_ - start));
      if (idx >= n_) fail("variable x" + std::to_string(idx) + " out of range (" + std::to_string(n_) + " variables)");
      std::vector<unsigned> e(n_, 0);
      e[idx] = 1;
      return IntPoly{{e, mpz_class(1)}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  unsigned n_;
  std::size_t pos_ = 0;
};

mpz_class ipow(long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

// Equation compiled to field arithmetic.
struct FieldTerm {
  std::uint32_t coeff;
  std::vector<std::pair<unsigned, unsigned>> powers;  // (variable, exponent)
};
using FieldPoly = std::vector<FieldTerm>;

FieldPoly compile(const IntPoly& f, const FiniteField& F) {
  FieldPoly out;
  mpz_class p(F.p());
  for (auto& [e, c] : f) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    if (r == 0) continue;
    FieldTerm t{F.from_integer(r.get_si()), {}};
    for (unsigned i = 0; i < e.size(); ++i)
      if (e[i]) t.powers.emplace_back(i, e[i]);
    out.push_back(std::move(t));
  }
  return out;
}

bool vanishes(const FieldPoly& f, const std::vector<std::uint32_t>& x, const FiniteField& F) {
  std::uint32_t s = 0;
  for (auto& t : f) {
    std::uint32_t v = t.coeff;
    for (auto& [i, e] : t.powers) {
      v = F.mul(v, F.pow(x[i], e));
      if (v == 0) break;
    }
    s = F.add(s, v);
  }
  return s == 0;
}

// Calls fn on every assignment of the listed variables (others untouched).
template <class Fn>
void odometer(std::vector<std::uint32_t>& x, const std::vector<unsigned>& vars, std::uint64_t q, Fn fn) {
  for (unsigned v : vars) x[v] = 0;
  while (true) {
    fn();
    std::size_t i = 0;
    while (i < vars.size()) {
      if (++x[vars[i]] < q) break;
      x[vars[i]] = 0;
      ++i;
    }
    if (i == vars.size()) return;
  }
}

void check_budget(const mpz_class& candidates, std::uint64_t budget) {
  if (candidates > mpz_class(std::to_string(budget)))
    throw Error(ErrorCode::BudgetExceeded, candidates.get_str() + " candidate points exceed the enumeration budget of " +
                                               std::to_string(budget));
}

}  // namespace

IntPoly parse_int_poly(const std::string& text, unsigned nvars) { return IntPolyParser(text, nvars).parse(); }

std::vector<IntPoly> VarietySpec::parsed() const {
  std::vector<IntPoly> out;
  for (auto& s : equations) {
    IntPoly f = parse_int_poly(s, num_vars());
    if (kind == Kind::Projective) {
      std::set<unsigned> degs;
      for (auto& [e, c] : f) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        degs.insert(d);
      }
      if (degs.size() > 1) throw Error(ErrorCode::InvalidInput, "projective equation '" + s + "' is not homogeneous");
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("MLV_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

mpz_class point_count(const VarietySpec& v, long p, int k, std::uint64_t budget) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidInput, "p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::InvalidInput, "k must be positive");
  std::vector<IntPoly> eqs = v.parsed();
  unsigned n = v.ambient_dim;
  if (eqs.empty()) {
    if (v.kind == VarietySpec::Kind::Affine) return ipow(p, static_cast<unsigned long>(k) * n);
    mpz_class s = 0;
    for (unsigned i = 0; i <= n; ++i) s += ipow(p, static_cast<unsigned long>(k) * i);
    return s;
  }
  unsigned nv = v.num_vars();
  std::vector<bool> used(nv, false);
  for (auto& f : eqs)
    for (auto& [e, c] : f)
      for (unsigned i = 0; i < nv; ++i)
        if (e[i]) used[i] = true;

  if (v.kind == VarietySpec::Kind::Affine) {
    std::vector<unsigned> vars;
    for (unsigned i = 0; i < nv; ++i)
      if (used[i]) vars.push_back(i);
    mpz_class free_factor = ipow(p, static_cast<unsigned long>(k) * (nv - vars.size()));
    check_budget(ipow(p, static_cast<unsigned long>(k) * vars.size()), budget);
    FiniteField F(p, k);
    std::vector<FieldPoly> fps;
    for (auto& f : eqs) fps.push_back(compile(f, F));
    std::vector<std::uint32_t> x(nv, 0);
    std::uint64_t count = 0;
    odometer(x, vars, F.size(), [&] {
      for (auto& f : fps)
        if (!vanishes(f, x, F)) return;
      ++count;
    });
    return mpz_class(std::to_string(count)) * free_factor;
  }

  // Projective: normalized representatives with first nonzero coordinate 1.
  mpz_class candidates = 0;
  for (unsigned j = 0; j <= n; ++j) candidates += ipow(p, static_cast<unsigned long>(k) * (n - j));
  check_budget(candidates, budget);
  FiniteField F(p, k);
  std::vector<FieldPoly> fps;
  for (auto& f : eqs) fps.push_back(compile(f, F));
  std::uint64_t count = 0;
  for (unsigned j = 0; j <= n; ++j) {
    std::vector<std::uint32_t> x(nv, 0);
    x[j] = 1;
    std::vector<unsigned> vars;
    for (unsigned i = j + 1; i < nv; ++i) vars.push_back(i);
    odometer(x, vars, F.size(), [&] {
      for (auto& f : fps)
        if (!vanishes(f, x, F)) return;
      ++count;
    });
  }
  return mpz_class(std::to_string(count));
}

std::vector<mpz_class> point_counts(const VarietySpec& v, long p, int m, std::uint64_t budget) {
  std::vector<mpz_class> out;
  for (int k = 1; k <= m; ++k) out.push_back(point_count(v, p, k, budget));
  return out;
}

std::string RationalZeta::to_string() const {
  auto wrap = [](const UPoly& u) {
    std::string s = u.to_string();
    return u.coeffs().size() > 1 ? "(" + s + ")" : s;
  };
  if (den.degree() == 0) return num.to_string();
  return wrap(num) + "/" + wrap(den);
}

std::vector<mpq_class> zeta_series(const std::vector<mpz_class>& counts) {
  std::vector<mpq_class> z{mpq_class(1)};
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    mpq_class s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += mpq_class(counts[k - 1]) * z[n - k];
    z.push_back(s / static_cast<long>(n));
  }
  return z;
}

RationalZeta zeta_from_counts(const std::vector<mpz_class>& counts, int deg_num, int deg_den) {
  if (deg_num < 0 || deg_den < 0) throw Error(ErrorCode::InvalidInput, "degree bounds must be nonnegative");
  std::size_t m = counts.size();
  std::size_t need = static_cast<std::size_t>(deg_num + deg_den + 1);
  if (m < need)
    throw Error(ErrorCode::InvalidInput, "need at least " + std::to_string(need) + " counts for degrees (" +
                                             std::to_string(deg_num) + ", " + std::to_string(deg_den) + "), got " + std::to_string(m));
  std::vector<mpq_class> z = zeta_series(counts);
  auto zc = [&](long i) { return i < 0 ? mpq_class(0) : z[static_cast<std::size_t>(i)]; };
  // Denominator D = 1 + D_1 t + ... : coefficients of D*Z vanish in degrees deg_num+1 .. deg_num+deg_den.
  auto d2 = static_cast<std::size_t>(deg_den);
  QMatrix sys(d2, d2 + 1);
  for (std::size_t r = 0; r < d2; ++r) {
    long n = deg_num + 1 + static_cast<long>(r);
    for (std::size_t j = 1; j <= d2; ++j) sys(r, j - 1) = zc(n - static_cast<long>(j));
    sys(r, d2) = -zc(n);
  }
  auto e = row_reduce(sys);
  std::vector<mpq_class> dcoef(d2 + 1, mpq_class(0));
  dcoef[0] = 1;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == d2) throw Error(ErrorCode::Inconsistent, "no rational function of the given degrees matches the counts");
    dcoef[e.pivot_cols[r] + 1] = e.rref(r, d2);
  }
  UPoly den(dcoef);
  std::vector<mpq_class> zs(z.begin(), z.begin() + static_cast<long>(need));
  UPoly num = (den * UPoly(zs)).truncated(static_cast<unsigned>(deg_num + 1));
  // Validation: N/D must reproduce every supplied count.
  UPoly check = (den * UPoly(z)).truncated(static_cast<unsigned>(m + 1));
  if (!(check == num)) {
    for (std::size_t n = 0; n <= m; ++n)
      if (check.coeff(static_cast<unsigned>(n)) != num.coeff(static_cast<unsigned>(n))) {
        if (n < need) throw Error(ErrorCode::Inconsistent, "no rational function of the given degrees matches the counts");
        throw Error(ErrorCode::ValidationFailed, "reconstructed zeta function disagrees with the series coefficient of t^" +
                                                     std::to_string(n) + " implied by N_1..N_" + std::to_string(n));
      }
  }
  UPoly g = upoly_gcd(num, den);
  if (g.degree() > 0) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  mpq_class c0 = den.coeff(0);
  return RationalZeta{num.scaled(1 / c0), den.scaled(1 / c0)};
}

UPoly numerator_from_counts(const std::vector<mpz_class>& counts, const UPoly& den, int deg_num) {
  if (deg_num < 0 || counts.size() < static_cast<std::size_t>(deg_num + 1))
    throw Error(ErrorCode::InvalidInput, "need at least " + std::to_string(deg_num + 1) + " counts");
  UPoly prod = (den * UPoly(zeta_series(counts))).truncated(static_cast<unsigned>(counts.size() + 1));
  for (std::size_t n = static_cast<std::size_t>(deg_num + 1); n <= counts.size(); ++n)
    if (prod.coeff(static_cast<unsigned>(n)) != 0)
      throw Error(ErrorCode::ValidationFailed, "numerator of degree " + std::to_string(deg_num) + " does not reproduce N_" + std::to_string(n));
  return prod.truncated(static_cast<unsigned>(deg_num + 1));
}

std::vector<EulerFactor> zeta_factors(const RationalZeta& z, long p) {
  std::vector<EulerFactor> out;
  if (z.num.degree() > 0) out.push_back(EulerFactor{p, 1, z.num, -1});
  if (z.den.degree() > 0) out.push_back(EulerFactor{p, 1, z.den, 1});
  return out;
}

void ZetaWord::add_shift(long a, int e) {
  if (e == 0) return;
  int& x = shifts[a];
  x += e;
  if (x == 0) shifts.erase(a);
}

LaurentLeading euler_leading(const std::vector<EulerFactor>& factors, long s0) {
  LaurentLeading total;
  for (auto& f : factors) {
    f.validate();
    mpz_class q = f.norm();
    // t0 = q^(-s0); the vanishing linear factor is 1 - q^(s0) t.
    mpq_class t0 = 1, root_coeff = 1;
    for (long i = 0; i < (s0 < 0 ? -s0 : s0); ++i) {
      t0 *= q;
      root_coeff *= q;
    }
    if (s0 > 0) t0 = 1 / t0;
    else root_coeff = 1 / root_coeff;
    UPoly lin = UPoly::linear_factor(root_coeff);
    UPoly rest = f.poly;
    int m = 0;
    while (rest.degree() > 0) {
      auto [quo, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      rest = quo;
      ++m;
    }
    // 1 - q^(s0 - s) = (s - s0) f log p + ...
    PeriodValue log_norm = PeriodValue(f.f) * PeriodValue::symbol(sym_log(f.p));
    LaurentLeading local{m, log_norm.pow(m) * PeriodValue(rest(t0))};
    total = total * local.pow(-f.exponent);
  }
  return total;
}

LaurentLeading zetaword_leading(const ZetaWord& w, long s0) {
  LaurentLeading total;
  for (auto& [a, e] : w.shifts) total = total * zeta_at_integer(s0 + a).pow(e);
  return total * euler_leading(w.extra, s0);
}

EulerFactor twist_factor(const EulerFactor& e, long n) {
  mpq_class c = 1;
  mpq_class q(e.norm());
  for (long i = 0; i < (n < 0 ? -n : n); ++i) c *= q;
  if (n > 0) c = 1 / c;
  return EulerFactor{e.p, e.f, e.poly.scale_variable(c), e.exponent};
}

}  // namespace mlv
