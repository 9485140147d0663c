#include "mlv/hodge.hpp"

#include <algorithm>

#include "mlv/error.hpp"
#include "mlv/symbols.hpp"

namespace mlv {

namespace {

PeriodValue two_pi_i() { return PeriodValue(2) * PeriodValue::symbol(sym_pi()) * PeriodValue::imaginary_unit(); }

PMatrix conj(const PMatrix& m) {
  PMatrix r = m;
  for (auto& x : r.a) x = x.conj();
  return r;
}

// Reverses the column order.
template <class F>
Matrix<F> reverse_columns(const Matrix<F>& m) {
  Matrix<F> r(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r(i, j) = m(i, m.cols - 1 - j);
  return r;
}

// Lists the last key of each run of the nonincreasing step function v on [lo, hi].
template <class Fn>
std::map<int, std::size_t> encode_filtration(Fn v, int lo, int hi) {
  std::map<int, std::size_t> out;
  for (int p = lo; p <= hi; ++p) {
    std::size_t here = v(p);
    if (here > 0 && here > v(p + 1)) out[p] = here;
  }
  return out;
}

}  // namespace

int HodgeDatum::weight() const {
  if (!is_pure()) throw Error(ErrorCode::InvalidInput, "datum is not pure");
  return weights.front().first;
}

std::size_t HodgeDatum::filtration_dim(int p) const {
  auto it = filtration.lower_bound(p);
  return it == filtration.end() ? 0 : it->second;
}

void HodgeDatum::validate() const {
  if (finf.rows != rank || finf.cols != rank) throw Error(ErrorCode::InvalidInput, "finf must be rank x rank");
  if (comparison.rows != rank || comparison.cols != rank) throw Error(ErrorCode::InvalidInput, "comparison must be rank x rank");
  if (!(finf * finf == QMatrix::identity(rank))) throw Error(ErrorCode::InvalidInput, "finf is not an involution");
  std::size_t total = 0;
  for (auto& [w, d] : weights) total += d;
  if (weights.empty() || total != rank) throw Error(ErrorCode::InvalidInput, "weight layers must add up to the rank");
  if (rank > 0) {
    if (filtration.empty() || filtration.begin()->second != rank)
      throw Error(ErrorCode::InvalidInput, "filtration must start at the full space");
    std::size_t prev = rank;
    for (auto& [p, d] : filtration) {
      if (d > prev) throw Error(ErrorCode::InvalidInput, "filtration dims must weakly decrease");
      prev = d;
    }
  }
  if (determinant(comparison).is_zero()) throw Error(ErrorCode::InvalidInput, "comparison is not invertible");
  if (!(to_period(finf) * conj(comparison) == comparison))
    throw Error(ErrorCode::InvalidInput, "comparison is not compatible with finf and complex conjugation");
}

HodgeDatum tate(long n) {
  HodgeDatum h;
  h.rank = 1;
  h.weights = {{static_cast<int>(-2 * n), 1}};
  h.finf = QMatrix::from_rows({{mpq_class(n % 2 == 0 ? 1 : -1)}});
  h.filtration = {{static_cast<int>(-n), 1}};
  h.comparison = PMatrix::from_rows({{two_pi_i().pow(n)}});
  return h;
}

HodgeDatum hodge_direct_sum(const HodgeDatum& a, const HodgeDatum& b) {
  // Keeps the de Rham basis adapted by interleaving the two bases by filtration step.
  HodgeDatum r;
  r.rank = a.rank + b.rank;
  std::map<int, std::size_t> wd;
  for (auto& [w, d] : a.weights) wd[w] += d;
  for (auto& [w, d] : b.weights) wd[w] += d;
  r.weights.assign(wd.begin(), wd.end());
  r.finf = block_diagonal(a.finf, b.finf);
  PMatrix block = block_diagonal(a.comparison, b.comparison);
  // Order de Rham vectors by descending filtration level.
  auto level = [](const HodgeDatum& h, std::size_t j) {
    int best = h.filtration.empty() ? 0 : h.filtration.begin()->first;
    for (auto& [p, d] : h.filtration)
      if (j < d) best = p;
    return best;
  };
  std::vector<std::pair<int, std::size_t>> order;  // (-level, column)
  for (std::size_t j = 0; j < a.rank; ++j) order.emplace_back(-level(a, j), j);
  for (std::size_t j = 0; j < b.rank; ++j) order.emplace_back(-level(b, j), a.rank + j);
  std::stable_sort(order.begin(), order.end(), [](auto& x, auto& y) { return x.first < y.first; });
  r.comparison = PMatrix(r.rank, r.rank);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t i = 0; i < r.rank; ++i) r.comparison(i, k) = block(i, order[k].second);
  int lo = 0, hi = 0;
  for (auto* h : {&a, &b})
    if (!h->filtration.empty()) {
      lo = std::min(lo, h->filtration.begin()->first - 1);
      hi = std::max(hi, h->filtration.rbegin()->first + 1);
    }
  r.filtration = encode_filtration([&](int p) { return a.filtration_dim(p) + b.filtration_dim(p); }, lo, hi);
  return r;
}

HodgeDatum dual_twist(const HodgeDatum& h) {
  HodgeDatum r;
  r.rank = h.rank;
  for (auto& [w, d] : h.weights) r.weights.emplace_back(-w - 2, d);
  std::sort(r.weights.begin(), r.weights.end());
  r.finf = h.finf.transpose().scaled(mpq_class(-1));
  // dim F^p of the dual twist is d - dim F^(-p).
  int lo = h.filtration.empty() ? 0 : -h.filtration.rbegin()->first - 2;
  int hi = h.filtration.empty() ? 0 : -h.filtration.begin()->first + 2;
  r.filtration = encode_filtration([&](int p) { return h.rank - h.filtration_dim(-p); }, lo, hi);
  r.comparison = reverse_columns(inverse(h.comparison).transpose()).scaled(two_pi_i());
  return r;
}

WeakCohomology weak_cohomology(const HodgeDatum& h) {
  h.validate();
  WeakCohomology out;
  std::size_t d = h.rank;
  out.invariants = kernel_basis(h.finf + QMatrix::identity(d).scaled(mpq_class(-1)));
  std::size_t ninv = out.invariants.cols, nf0 = h.filtration_dim(0);
  PMatrix to_dr = inverse(h.comparison) * to_period(out.invariants);
  out.alpha = PMatrix(d, ninv + nf0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < ninv; ++j) {
      if (!to_dr(i, j).is_real()) throw Error(ErrorCode::InvalidInput, "period map has a non-real entry");
      out.alpha(i, j) = to_dr(i, j);
    }
    if (i < nf0) out.alpha(i, ninv + i) = PeriodValue(-1);
  }
  GradedMap f;
  f.source.set(0, ninv + nf0, PeriodValue(1));
  f.target.set(0, d, PeriodValue(1));
  f.maps[0] = out.alpha;
  ConeResult cone = cone_with_splitting(f);
  out.complex = shift(cone.cone, -1);
  out.hw0 = QSpace{out.complex.dim(0), out.complex.qgen(0)};
  out.hw1 = QSpace{out.complex.dim(1), out.complex.qgen(1)};
  out.alpha_rank = rank(out.alpha);
  auto kb = cone.splitting.ker_basis.find(-1);
  out.hw0_basis = kb == cone.splitting.ker_basis.end() ? PMatrix(ninv + nf0, 0) : kb->second;
  auto cb = cone.splitting.coker_basis.find(0);
  out.hw1_basis = cb == cone.splitting.coker_basis.end() ? PMatrix(d, 0) : cb->second;
  return out;
}

PMatrix weak_pairing(const HodgeDatum& h, const HodgeDatum& partner) {
  if (h.rank != partner.rank) throw Error(ErrorCode::DualityDegenerate, "ranks differ");
  WeakCohomology a = weak_cohomology(h), b = weak_cohomology(partner);
  std::size_t n = a.hw0.dim, m = b.hw1.dim;
  if (n != m)
    throw Error(ErrorCode::DualityDegenerate, "Hw0 has dimension " + std::to_string(n) + " but the partner Hw1 has dimension " +
                                                  std::to_string(m));
  std::size_t ninv = a.invariants.cols;
  PMatrix inv = to_period(a.invariants);
  PMatrix betti(h.rank, n);  // Betti parts of the kernel vectors
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < h.rank; ++i)
      for (std::size_t j = 0; j < ninv; ++j) betti(i, k) += inv(i, j) * a.hw0_basis(j, k);
  PMatrix m_ = betti.transpose() * (partner.comparison * b.hw1_basis);
  PeriodValue s = two_pi_i().inverse();
  m_ = m_.scaled(s);
  if (n > 0 && determinant(m_).is_zero()) throw Error(ErrorCode::DualityDegenerate, "weak pairing is singular");
  for (auto& x : m_.a)
    if (!x.is_real()) throw Error(ErrorCode::DualityDegenerate, "weak pairing is not real");
  return m_;
}

WeakDuality weak_duality(const HodgeDatum& h) {
  WeakDuality r;
  r.dual = dual_twist(h);
  r.hw0_pairing = weak_pairing(h, r.dual);
  r.hw1_pairing = weak_pairing(r.dual, h).transpose();
  return r;
}

std::vector<HodgeLayer> hodge_layers(const HodgeDatum& h) {
  h.validate();
  int w = h.weight();
  HodgeLayer l;
  l.weight = w;
  if (h.rank == 0) return {l};
  int lo = h.filtration.begin()->first, hi = h.filtration.rbegin()->first;
  for (int p = lo; p <= hi; ++p) {
    std::size_t hp = h.filtration_dim(p) - h.filtration_dim(p + 1);
    if (hp) l.hodge[p] = hp;
  }
  std::size_t plus = kernel_basis(h.finf + QMatrix::identity(h.rank).scaled(mpq_class(-1))).cols;
  std::size_t minus = h.rank - plus;
  std::size_t off_diag = 0;
  for (auto& [p, n] : l.hodge)
    if (2 * p < w) off_diag += n;
  if (w % 2 == 0) {
    // Each pair p < q contributes one +1 and one -1 eigenvector per dimension.
    if (plus < off_diag || minus < off_diag) throw Error(ErrorCode::MalformedHodgeNumbers, "finf eigenspaces too small");
    l.plus = plus - off_diag;
    l.minus = minus - off_diag;
  }
  return {l};
}

void GammaProduct::add(GammaKind kind, long shift, int exponent) {
  if (exponent == 0) return;
  auto key = std::make_pair(kind, shift);
  int& e = factors[key];
  e += exponent;
  if (e == 0) factors.erase(key);
}

std::string GammaProduct::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (auto& [k, e] : factors) {
    if (!s.empty()) s += " * ";
    s += k.first == GammaKind::R ? "Gamma_R(s" : "Gamma_C(s";
    if (k.second > 0) s += "+" + std::to_string(k.second);
    if (k.second < 0) s += std::to_string(k.second);
    s += ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

GammaProduct arch_factor(const std::vector<HodgeLayer>& layers) {
  GammaProduct g;
  for (auto& l : layers) {
    for (auto& [p, n] : l.hodge) {
      auto it = l.hodge.find(l.weight - p);
      std::size_t mirror = it == l.hodge.end() ? 0 : it->second;
      if (mirror != n)
        throw Error(ErrorCode::MalformedHodgeNumbers, "h^{" + std::to_string(p) + "," + std::to_string(l.weight - p) +
                                                          "} differs from its mirror");
    }
    std::size_t mid = 0;
    if (l.weight % 2 == 0) {
      auto it = l.hodge.find(l.weight / 2);
      mid = it == l.hodge.end() ? 0 : it->second;
    }
    if (l.plus + l.minus != mid)
      throw Error(ErrorCode::MalformedHodgeNumbers, "finf eigenvalue dims on the middle Hodge piece must sum to " + std::to_string(mid));
    for (auto& [p, n] : l.hodge) {
      if (2 * p < l.weight) g.add(GammaKind::C, -p, static_cast<int>(n));
      if (2 * p == l.weight) {
        bool even = p % 2 == 0;
        std::size_t sign_match = even ? l.plus : l.minus;  // eigenvalue (-1)^p
        std::size_t sign_other = even ? l.minus : l.plus;
        g.add(GammaKind::R, -p, static_cast<int>(sign_match));
        g.add(GammaKind::R, -p + 1, static_cast<int>(sign_other));
      }
    }
  }
  return g;
}

LaurentLeading gamma_leading(const GammaProduct& g, long s0) {
  LaurentLeading total;
  for (auto& [k, e] : g.factors) {
    LaurentLeading v = k.first == GammaKind::R ? gamma_r_at_integer(s0 + k.second) : gamma_c_at_integer(s0 + k.second);
    total = total * v.pow(e);
  }
  return total;
}

}  // namespace mlv
