// Multivariate gcd in Q[symbols]: a modular dense algorithm (images modulo
// large primes, evaluation and interpolation in one variable at a time,
// Chinese remaindering), certified by trial division, with a primitive
// pseudo-remainder sequence as fallback.
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mlv/poly.hpp"

namespace mlv {

namespace {

// Largest monomial dividing every term of p (and of m).
Monomial monomial_gcd(Monomial m, const Poly& p) {
  for (auto& [pm, c] : p.terms()) {
    Monomial r;
    for (auto& [id, e] : m.factors) {
      unsigned d = pm.degree_in(id);
      if (d > 0) r.factors.emplace_back(id, std::min(e, d));
    }
    m = std::move(r);
    if (m.is_one()) break;
  }
  return m;
}

Poly content_in(const Poly& p, SymbolId s) {
  Poly g;
  for (auto& c : p.coefficients_in(s)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// p scaled to integer coefficients with gcd 1.
Poly numeric_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class num = 0, den = 1;
  for (auto& [m, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  return p.scaled(mpq_class(den, num));
}

// Pseudo-remainder of a by b as polynomials in s.
Poly pseudo_remainder(const Poly& a, const Poly& b, SymbolId s) {
  unsigned db = b.degree_in(s);
  Poly lcb = b.coefficients_in(s).back();
  Poly r = a;
  while (!r.is_zero() && r.degree_in(s) >= db) {
    unsigned dr = r.degree_in(s);
    Poly lcr = r.coefficients_in(s).back();
    r = numeric_primitive(lcb * r - lcr * Poly::symbol(s, dr - db) * b);
  }
  return r;
}

Poly prs_gcd(const Poly& a, const Poly& b, SymbolId s) {
  Poly ca = content_in(a, s), cb = content_in(b, s);
  Poly g_content = gcd(ca, cb);
  Poly pa = numeric_primitive(a.exact_div(ca)), pb = numeric_primitive(b.exact_div(cb));
  if (pa.degree_in(s) < pb.degree_in(s)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, s);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (r.degree_in(s) == 0) return g_content.monic();
    pb = numeric_primitive(r.exact_div(content_in(r, s)));
  }
  Poly prim = pa.exact_div(content_in(pa, s));
  return (g_content * prim).monic();
}

// Quotient when b divides a, by multivariate division with remainder.
std::optional<Poly> try_div(const Poly& a, const Poly& b) {
  Poly q, r = a;
  const Monomial& lb = b.leading_monomial();
  const mpq_class& cb = b.leading_coeff();
  while (!r.is_zero()) {
    auto qm = r.leading_monomial().divide(lb);
    if (!qm) return std::nullopt;
    Poly t = Poly::term(r.leading_coeff() / cb, *qm);
    q += t;
    r += -(t * b);
  }
  return q;
}

// ---- arithmetic modulo a prime below 2^62 ----

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 inv(u64 a) const {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
  }
  u64 reduce(const mpz_class& z) const { return mpz_fdiv_ui(z.get_mpz_t(), p); }
};

// Univariate polynomials mod p, low degree first, no trailing zeros.
using UP = std::vector<u64>;

void trim(UP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 up_eval(const Zp& F, const UP& a, u64 x) {
  u64 r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

UP up_scale(const Zp& F, UP a, u64 c) {
  if (c == 0) return {};
  for (auto& x : a) x = F.mul(x, c);
  return a;
}

UP up_mul(const Zp& F, const UP& a, const UP& b) {
  if (a.empty() || b.empty()) return {};
  UP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

UP up_add(const Zp& F, UP a, const UP& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  trim(a);
  return a;
}

// Quotient and remainder; b nonzero.
std::pair<UP, UP> up_divmod(const Zp& F, UP a, const UP& b) {
  if (a.size() < b.size()) return {{}, a};
  UP q(a.size() - b.size() + 1, 0);
  u64 li = F.inv(b.back());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    u64 c = F.mul(a[k], li);
    q[k - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t idx = k - (b.size() - 1) + j;
      a[idx] = F.sub(a[idx], F.mul(c, b[j]));
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

UP up_monic(const Zp& F, const UP& a) { return a.empty() ? a : up_scale(F, a, F.inv(a.back())); }

UP up_gcd(const Zp& F, UP a, UP b) {
  while (!b.empty()) {
    UP r = up_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return up_monic(F, a);
}

// Multivariate polynomials mod p: exponent vectors, lex order with
// variable 0 most significant, leading term first.
using Exps = std::vector<unsigned>;
using MP = std::map<Exps, u64, std::greater<Exps>>;
// Polynomials in the variables before v with coefficients in Zp[x_v].
using Grouped = std::map<Exps, UP, std::greater<Exps>>;

Grouped group_by(const MP& a, std::size_t v) {
  Grouped g;
  for (auto& [e, c] : a) {
    Exps k = e;
    unsigned d = k[v];
    k[v] = 0;
    UP& u = g[k];
    if (u.size() <= d) u.resize(d + 1, 0);
    u[d] = c;
  }
  return g;
}

MP ungroup(const Grouped& g, std::size_t v) {
  MP r;
  for (auto& [k, u] : g)
    for (std::size_t d = 0; d < u.size(); ++d)
      if (u[d]) {
        Exps e = k;
        e[v] = static_cast<unsigned>(d);
        r[e] = u[d];
      }
  return r;
}

UP group_content(const Zp& F, const Grouped& g) {
  UP c;
  for (auto& [k, u] : g) {
    c = up_gcd(F, c, u);
    if (c.size() == 1) break;
  }
  return c;
}

Grouped group_divide(const Zp& F, Grouped g, const UP& c) {
  for (auto& [k, u] : g) u = up_divmod(F, u, c).first;
  return g;
}

MP mp_monic(const Zp& F, MP a) {
  if (a.empty()) return a;
  u64 li = F.inv(a.begin()->second);
  for (auto& [e, c] : a) c = F.mul(c, li);
  return a;
}

std::size_t max_degree(const Grouped& g) {
  std::size_t d = 0;
  for (auto& [k, u] : g) d = std::max(d, u.size() - 1);
  return d;
}

// Monic gcd of a and b mod p, which involve only variables 0..k-1.
std::optional<MP> mp_gcd(const Zp& F, const MP& a, const MP& b, std::size_t k, std::size_t nvars) {
  if (a.empty()) return mp_monic(F, b);
  if (b.empty()) return mp_monic(F, a);
  MP one{{Exps(nvars, 0), 1}};
  if (k == 0) return one;
  std::size_t v = k - 1;
  Grouped ga = group_by(a, v), gb = group_by(b, v);
  UP ca = group_content(F, ga), cb = group_content(F, gb);
  UP c = up_gcd(F, ca, cb);
  ga = group_divide(F, ga, ca);
  gb = group_divide(F, gb, cb);
  Exps zero(nvars, 0);
  bool a_unit = ga.size() == 1 && ga.begin()->first == zero;
  bool b_unit = gb.size() == 1 && gb.begin()->first == zero;
  if (a_unit || b_unit) {
    // With k == 1 every polynomial is its own content, so this covers the univariate case.
    Grouped r{{zero, c}};
    return mp_monic(F, ungroup(r, v));
  }
  const UP& la = ga.begin()->second;
  const UP& lb = gb.begin()->second;
  UP g = up_gcd(F, la, lb);
  std::size_t bound = (g.size() - 1) + std::min(max_degree(ga), max_degree(gb));

  Grouped h;
  UP m{1};
  std::optional<Exps> lm;
  u64 alpha = 0x9e3779b97f4a7c15ULL % F.p;
  for (std::size_t tries = 0; tries < 4 * bound + 64; ++tries) {
    alpha = F.add(F.mul(alpha, 6364136223846793005ULL % F.p), 1442695040888963407ULL % F.p);
    u64 ga_alpha = up_eval(F, g, alpha);
    if (ga_alpha == 0 || up_eval(F, la, alpha) == 0 || up_eval(F, lb, alpha) == 0) continue;
    MP aa, bb;
    for (auto& [key, u] : ga)
      if (u64 x = up_eval(F, u, alpha)) aa[key] = x;
    for (auto& [key, u] : gb)
      if (u64 x = up_eval(F, u, alpha)) bb[key] = x;
    auto image = mp_gcd(F, aa, bb, v, nvars);
    if (!image) return std::nullopt;
    const Exps& lead = image->begin()->first;
    if (lm && lead > *lm) continue;  // unlucky point
    if (!lm || lead < *lm) {
      h.clear();
      m = UP{1};
      lm = lead;
    }
    u64 minv = F.inv(up_eval(F, m, alpha));
    // Newton step: h += (image * g(alpha) - h(alpha)) * m / m(alpha).
    std::map<Exps, u64, std::greater<Exps>> target;
    for (auto& [key, x] : *image) target[key] = F.mul(x, ga_alpha);
    for (auto& [key, u] : h) target.try_emplace(key, 0);
    for (auto& [key, x] : target) {
      UP& u = h[key];
      u64 diff = F.sub(x, up_eval(F, u, alpha));
      if (diff) u = up_add(F, u, up_scale(F, m, F.mul(diff, minv)));
      if (u.empty()) h.erase(key);
    }
    m = up_mul(F, m, UP{F.sub(0, alpha), 1});
    if (m.size() - 1 > bound) {
      UP ch = group_content(F, h);
      Grouped prim = group_divide(F, h, ch);
      for (auto& [key, u] : prim) u = up_mul(F, u, c);
      return mp_monic(F, ungroup(prim, v));
    }
  }
  return std::nullopt;
}

// True when a and b are certainly coprime mod p: for each variable, the
// images after specializing the others keep their degrees and are coprime.
bool certainly_coprime(const Zp& F, const MP& a, const MP& b, std::size_t nvars) {
  u64 seed = 0x2545f4914f6cdd1dULL % F.p;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<u64> point(nvars);
    for (auto& x : point) x = seed = F.add(F.mul(seed, 6364136223846793005ULL % F.p), 1442695040888963407ULL % F.p);
    UP images[2];
    const MP* in[2] = {&a, &b};
    for (int w = 0; w < 2; ++w) {
      std::size_t deg = 0;
      for (auto& [e, c] : *in[w]) {
        u64 x = c;
        for (std::size_t j = 0; j < nvars; ++j)
          if (j != v)
            for (unsigned k = 0; k < e[j]; ++k) x = F.mul(x, point[j]);
        deg = std::max<std::size_t>(deg, e[v]);
        UP& u = images[w];
        if (u.size() <= e[v]) u.resize(e[v] + 1, 0);
        u[e[v]] = F.add(u[e[v]], x);
      }
      trim(images[w]);
      if (images[w].size() != deg + 1) return false;
    }
    if (images[0].size() > 1 && images[1].size() > 1 && up_gcd(F, images[0], images[1]).size() > 1) return false;
  }
  return true;
}

// Integer polynomials in the symbols of the current problem.
struct Frame {
  std::vector<SymbolId> vars;

  Exps exps_of(const Monomial& m) const {
    Exps e(vars.size(), 0);
    for (auto& [id, k] : m.factors) e[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), id) - vars.begin())] = k;
    return e;
  }
  Monomial monomial_of(const Exps& e) const {
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (e[i]) m.factors.emplace_back(vars[i], e[i]);
    return m;
  }
};

// Gcd of integer polynomials a, b (coefficients in lowest terms with
// integer values) by Chinese remaindering of modular images.
std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
  Frame fr;
  for (const Poly* q : {&a, &b})
    for (auto& [m, c] : q->terms())
      for (auto& f : m.factors)
        if (std::find(fr.vars.begin(), fr.vars.end(), f.first) == fr.vars.end()) fr.vars.push_back(f.first);
  std::sort(fr.vars.begin(), fr.vars.end(), [](SymbolId x, SymbolId y) { return symbol_before(x, y); });
  std::size_t n = fr.vars.size();
  std::vector<std::pair<Exps, mpz_class>> ia, ib;
  for (auto& [m, c] : a.terms()) ia.emplace_back(fr.exps_of(m), c.get_num());
  for (auto& [m, c] : b.terms()) ib.emplace_back(fr.exps_of(m), c.get_num());
  mpz_class lca = a.leading_coeff().get_num(), lcb = b.leading_coeff().get_num(), gamma;
  mpz_gcd(gamma.get_mpz_t(), lca.get_mpz_t(), lcb.get_mpz_t());

  std::map<Exps, mpz_class, std::greater<Exps>> acc;
  mpz_class modulus = 1;
  std::optional<Exps> lm;
  mpz_class prime = mpz_class(1) << 61;
  for (int round = 0; round < 40; ++round) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    if (lca % prime == 0 || lcb % prime == 0) continue;
    Zp F{prime.get_ui()};
    MP pa, pb;
    for (auto& [e, c] : ia)
      if (u64 x = F.reduce(c)) pa[e] = x;
    for (auto& [e, c] : ib)
      if (u64 x = F.reduce(c)) pb[e] = x;
    if (certainly_coprime(F, pa, pb, n)) return Poly(1);
    auto image = mp_gcd(F, pa, pb, n, n);
    if (!image) continue;
    const Exps& lead = image->begin()->first;
    if (lm && lead > *lm) continue;
    if (!lm || lead < *lm) {
      acc.clear();
      modulus = 1;
      lm = lead;
    }
    u64 gp = F.reduce(gamma);
    // Combine: x = acc + modulus * ((image - acc) / modulus mod p).
    u64 minv = F.inv(F.reduce(modulus));
    std::map<Exps, u64, std::greater<Exps>> target;
    for (auto& [e, x] : *image) target[e] = F.mul(x, gp);
    for (auto& [e, x] : acc) target.try_emplace(e, 0);
    for (auto& [e, x] : target) {
      mpz_class& cur = acc[e];
      u64 t = F.mul(F.sub(x, F.reduce(cur)), minv);
      cur += modulus * mpz_class(static_cast<unsigned long>(t));
    }
    modulus *= prime;
    Poly cand;
    mpz_class half = modulus / 2;
    for (auto& [e, x] : acc) {
      mpz_class s = x % modulus;
      if (s > half) s -= modulus;
      if (s != 0) cand += Poly::term(mpq_class(s), fr.monomial_of(e));
    }
    if (cand.is_zero()) continue;
    cand = numeric_primitive(cand);
    if (try_div(a, cand) && try_div(b, cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();
  if (a.is_single_term()) return Poly::term(1, monomial_gcd(a.leading_monomial(), b));
  if (b.is_single_term()) return Poly::term(1, monomial_gcd(b.leading_monomial(), a));

  // Split off the monomial content.
  Monomial ma = monomial_gcd(a.leading_monomial(), a), mb = monomial_gcd(b.leading_monomial(), b);
  if (!ma.is_one() || !mb.is_one()) {
    Poly common = Poly::term(1, monomial_gcd(ma, Poly::term(1, mb)));
    return common * gcd(a.exact_div(Poly::term(1, ma)), b.exact_div(Poly::term(1, mb)));
  }

  if (auto g = modular_gcd(numeric_primitive(a), numeric_primitive(b))) return g->monic();

  SymbolId s = *a.main_symbol();
  if (auto sb = b.main_symbol(); symbol_before(*sb, s)) s = *sb;
  if (a.degree_in(s) == 0) return gcd(a, content_in(b, s));
  if (b.degree_in(s) == 0) return gcd(content_in(a, s), b);
  return prs_gcd(a, b, s);
}

}  // namespace mlv
