#include "mlv/qdet.hpp"

#include <set>

namespace mlv {

std::size_t QComplex::dim(int degree) const {
  auto it = graded.find(degree);
  return it == graded.end() ? 0 : it->second.dim;
}

PeriodValue QComplex::qgen(int degree) const {
  auto it = graded.find(degree);
  return it == graded.end() || it->second.dim == 0 ? PeriodValue(1) : it->second.qgen;
}

std::vector<int> QComplex::support() const {
  std::vector<int> out;
  for (auto& [d, s] : graded)
    if (s.dim > 0) out.push_back(d);
  return out;
}

void QComplex::set(int degree, std::size_t dim, const PeriodValue& qgen) {
  if (dim == 0) {
    graded.erase(degree);
    return;
  }
  graded[degree] = QSpace{dim, qgen};
}

void QComplex::validate() const {
  for (auto& [d, s] : graded) {
    if (s.dim == 0 && !s.qgen.is_one())
      throw Error(ErrorCode::InvalidInput, "zero space in degree " + std::to_string(d) + " must carry qgen 1");
    if (s.qgen.is_zero()) throw Error(ErrorCode::InvalidInput, "zero qgen in degree " + std::to_string(d));
    if (!s.qgen.is_real()) throw Error(ErrorCode::InvalidInput, "qgen in degree " + std::to_string(d) + " is not real");
  }
  if (scale.is_zero() || !scale.is_real()) throw Error(ErrorCode::InvalidInput, "scale must be real and nonzero");
}

PMatrix GradedMap::at(int degree) const {
  auto it = maps.find(degree);
  if (it != maps.end()) return it->second;
  return PMatrix(target.dim(degree), source.dim(degree));
}

void GradedMap::validate() const {
  for (auto& [d, m] : maps)
    if (m.rows != target.dim(d) || m.cols != source.dim(d))
      throw Error(ErrorCode::ShapeMismatch, "map in degree " + std::to_string(d) + " has shape " +
                                                std::to_string(m.rows) + "x" + std::to_string(m.cols) + ", expected " +
                                                std::to_string(target.dim(d)) + "x" + std::to_string(source.dim(d)));
}

PeriodValue det_total(const QComplex& c) {
  PeriodValue r = c.scale;
  for (auto& [d, s] : c.graded) {
    if (s.dim == 0) continue;
    r = (d % 2 == 0) ? r * s.qgen : r / s.qgen;
  }
  return r;
}

PeriodValue det_of_map(const PMatrix& m, const PeriodValue& qgen_source, const PeriodValue& qgen_target) {
  if (m.rows != m.cols) throw Error(ErrorCode::NotInvertible, "map is not square");
  PeriodValue d = determinant(m);
  if (d.is_zero()) throw Error(ErrorCode::NotInvertible, "map is singular");
  return d * qgen_source / qgen_target;
}

PeriodValue det_of_map(const GradedMap& f) {
  f.validate();
  for (int d : f.source.support())
    if (d != 0) throw Error(ErrorCode::NotInvertible, "source not concentrated in degree 0");
  for (int d : f.target.support())
    if (d != 0) throw Error(ErrorCode::NotInvertible, "target not concentrated in degree 0");
  return det_of_map(f.at(0), f.source.qgen(0), f.target.qgen(0));
}

PeriodValue exact_sequence_torsion(const std::vector<std::size_t>& dims, const std::vector<PMatrix>& maps, int offset) {
  std::size_t n = dims.size();
  if (maps.size() + 1 != n && !(n == 0 && maps.empty()))
    throw Error(ErrorCode::ShapeMismatch, "sequence needs one map between consecutive terms");
  std::vector<std::vector<std::size_t>> pivots(n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (maps[j].rows != dims[j + 1] || maps[j].cols != dims[j])
      throw Error(ErrorCode::ShapeMismatch, "sequence map " + std::to_string(j) + " has wrong shape");
    pivots[j] = independent_columns(maps[j]);
  }
  PeriodValue tau(1);
  for (std::size_t j = 0; j < n; ++j) {
    // Basis [d(h_{j-1}) | h_j] of E^j.
    std::size_t from_prev = j > 0 ? pivots[j - 1].size() : 0;
    std::size_t own = pivots[j].size();
    if (from_prev + own != dims[j]) throw Error(ErrorCode::ShapeMismatch, "sequence is not exact at term " + std::to_string(j));
    if (j + 1 < n && j > 0 && !(maps[j] * maps[j - 1]).is_zero())
      throw Error(ErrorCode::ShapeMismatch, "consecutive maps do not compose to zero at term " + std::to_string(j));
    PMatrix basis(dims[j], dims[j]);
    for (std::size_t k = 0; k < from_prev; ++k)
      for (std::size_t r = 0; r < dims[j]; ++r) basis(r, k) = maps[j - 1](r, pivots[j - 1][k]);
    for (std::size_t k = 0; k < own; ++k) basis(pivots[j][k], from_prev + k) = PeriodValue(1);
    PeriodValue det = determinant(basis);
    if (det.is_zero()) throw Error(ErrorCode::ShapeMismatch, "sequence is not exact at term " + std::to_string(j));
    bool positive = ((offset + static_cast<int>(j) + 1) % 2 + 2) % 2 == 0;
    tau = positive ? tau * det : tau / det;
  }
  return tau;
}

namespace {

std::pair<int, int> degree_range(std::initializer_list<const QComplex*> cs) {
  std::set<int> ds;
  for (auto* c : cs)
    for (int d : c->support()) ds.insert(d);
  if (ds.empty()) return {0, -1};
  return {*ds.begin(), *ds.rbegin()};
}

PMatrix map_or_zero(const std::map<int, PMatrix>& m, int d, std::size_t rows, std::size_t cols) {
  auto it = m.find(d);
  if (it == m.end()) return PMatrix(rows, cols);
  if (it->second.rows != rows || it->second.cols != cols)
    throw Error(ErrorCode::ShapeMismatch, "witness map in degree " + std::to_string(d) + " has wrong shape");
  return it->second;
}

PeriodValue triangle_torsion(const QComplex& a, const QComplex& b, const QComplex& c, const TriangleWitness& w) {
  auto [lo, hi] = degree_range({&a, &b, &c});
  for (auto* mp : {&w.u, &w.v, &w.w})
    for (auto& [d, m] : *mp)
      if ((d < lo || d > hi) && !m.is_zero()) throw Error(ErrorCode::ShapeMismatch, "witness map outside support");
  if (lo > hi) return PeriodValue(1);
  std::vector<std::size_t> dims;
  std::vector<PMatrix> maps;
  for (int i = lo; i <= hi; ++i) {
    dims.push_back(a.dim(i));
    dims.push_back(b.dim(i));
    dims.push_back(c.dim(i));
    maps.push_back(map_or_zero(w.u, i, b.dim(i), a.dim(i)));
    maps.push_back(map_or_zero(w.v, i, c.dim(i), b.dim(i)));
    if (i < hi) maps.push_back(map_or_zero(w.w, i, a.dim(i + 1), c.dim(i)));
  }
  return exact_sequence_torsion(dims, maps, 3 * lo);
}

}  // namespace

bool is_multiplicative(const QComplex& a, const QComplex& b, const QComplex& c, const TriangleWitness& witness) {
  PeriodValue tau = triangle_torsion(a, b, c, witness);
  return det_total(a) * det_total(c) * tau == det_total(b);
}

TriangleWitness extension_witness(const std::map<int, PMatrix>& inclusions, const std::map<int, PMatrix>& projections) {
  return TriangleWitness{inclusions, projections, {}};
}

ConeResult cone_with_splitting(const GradedMap& f) {
  f.validate();
  const QComplex& A = f.source;
  const QComplex& B = f.target;
  ConeResult res;
  auto [lo, hi] = degree_range({&A, &B});
  if (lo > hi) return res;

  struct Piece {
    PMatrix m, ker, coker, proj;  // proj: target -> coker coordinates
    bool iso = false;
  };
  std::map<int, Piece> pieces;
  for (int i = lo; i <= hi; ++i) {
    Piece p;
    p.m = f.at(i);
    p.ker = kernel_basis(p.m);
    auto pivots = independent_columns(p.m);
    PMatrix image = select_columns(p.m, pivots);
    auto rows = complement_rows(image);
    p.coker = PMatrix(p.m.rows, rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) p.coker(rows[k], k) = PeriodValue(1);
    PMatrix full_inv = inverse(image.hcat(p.coker));
    p.proj = PMatrix(rows.size(), p.m.rows);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t j = 0; j < p.m.rows; ++j) p.proj(k, j) = full_inv(image.cols + k, j);
    p.iso = p.ker.cols == 0 && p.coker.cols == 0 && p.m.rows > 0;
    pieces.emplace(i, std::move(p));
  }

  // Cone degree i = coker(f_i) + ker(f_{i+1}); lowest degree lo-1 holds ker(f_lo).
  auto build = [&](QComplex& C, TriangleWitness& W) {
    C = QComplex{};
    W = TriangleWitness{};
    for (int i = lo - 1; i <= hi; ++i) {
      std::size_t nc = i >= lo ? pieces[i].coker.cols : 0;
      std::size_t nk = i + 1 <= hi ? pieces[i + 1].ker.cols : 0;
      PeriodValue q(1);
      if (nc > 0) q *= pieces[i].ker.cols == 0 ? B.qgen(i) / A.qgen(i) : B.qgen(i);
      if (nk > 0) q *= pieces[i + 1].coker.cols == 0 ? A.qgen(i + 1) / B.qgen(i + 1) : A.qgen(i + 1);
      C.set(i, nc + nk, q);
      if (i >= lo) {
        const Piece& p = pieces[i];
        W.u[i] = p.m;
        PMatrix v(nc + nk, p.m.rows);
        for (std::size_t k = 0; k < nc; ++k)
          for (std::size_t j = 0; j < p.m.rows; ++j) v(k, j) = p.proj(k, j);
        W.v[i] = v;
      }
      if (i + 1 <= hi) {
        const Piece& p = pieces[i + 1];
        PMatrix w(p.m.cols, nc + nk);
        for (std::size_t k = 0; k < nk; ++k)
          for (std::size_t j = 0; j < p.m.cols; ++j) w(j, nc + k) = p.ker(j, k);
        W.w[i] = w;
      }
    }
  };
  auto torsion_of = [&](const QComplex& C, const TriangleWitness& W) { return triangle_torsion(A, B, C, W); };

  // Target torsion: iso degrees contribute det(f_i)^((-1)^i), all others 1.
  PeriodValue wanted(1);
  int adjust = lo - 1;  // degree whose first basis vector absorbs the rest
  bool have_adjust = false;
  for (auto& [i, p] : pieces) {
    if (p.iso) {
      PeriodValue d = determinant(p.m);
      wanted = (i % 2 == 0) ? wanted * d : wanted / d;
    } else if (!have_adjust && (p.coker.cols > 0 || p.ker.cols > 0)) {
      adjust = i;
      have_adjust = true;
    }
  }

  QComplex C;
  TriangleWitness W;
  build(C, W);
  PeriodValue tau = torsion_of(C, W);
  if (have_adjust && tau != wanted) {
    // Rescale one basis vector by lambda; torsion scales by lambda^(+-1).
    Piece& p = pieces[adjust];
    auto rescale = [&](const PeriodValue& lambda) {
      if (p.coker.cols > 0) {
        for (std::size_t r = 0; r < p.coker.rows; ++r) p.coker(r, 0) *= lambda;
        for (std::size_t j = 0; j < p.proj.cols; ++j) p.proj(0, j) /= lambda;
      } else {
        for (std::size_t r = 0; r < p.ker.rows; ++r) p.ker(r, 0) *= lambda;
      }
    };
    rescale(PeriodValue(2));
    build(C, W);
    PeriodValue tau2 = torsion_of(C, W);
    rescale(PeriodValue(mpq_class(1, 2)));
    PeriodValue lambda = tau2 == tau * PeriodValue(2) ? wanted / tau : tau / wanted;
    rescale(lambda);
    build(C, W);
  }
  // Scale makes the triangle multiplicative in the chosen bases.
  PeriodValue t = torsion_of(C, W);
  PeriodValue partial = det_total(C);
  C.scale = det_total(B) / (det_total(A) * partial * t);
  for (auto& [i, p] : pieces) {
    if (p.coker.cols > 0) res.splitting.coker_basis[i] = p.coker;
    if (p.ker.cols > 0) res.splitting.ker_basis[i - 1] = p.ker;
  }
  res.cone = std::move(C);
  res.witness = std::move(W);
  return res;
}

QComplex cone_qstructure(const GradedMap& f) { return cone_with_splitting(f).cone; }

PeriodValue det_pairing(const QComplex& a, const QComplex& b, const std::map<int, PMatrix>& pairings) {
  std::set<int> degs;
  for (int d : a.support()) degs.insert(d);
  for (int d : b.support()) degs.insert(-d);
  for (auto& [d, m] : pairings)
    if (!degs.count(d) && (m.rows > 0 || m.cols > 0))
      throw Error(ErrorCode::PairingDegenerate, "pairing given in degree " + std::to_string(d) + " where both sides vanish");
  PeriodValue r = det_total(a) * det_total(b);
  for (int d : degs) {
    auto it = pairings.find(d);
    std::size_t na = a.dim(d), nb = b.dim(-d);
    if (it == pairings.end()) throw Error(ErrorCode::PairingDegenerate, "missing pairing in degree " + std::to_string(d));
    const PMatrix& m = it->second;
    if (na != nb || m.rows != na || m.cols != nb)
      throw Error(ErrorCode::PairingDegenerate, "pairing in degree " + std::to_string(d) + " is not square of size " +
                                                    std::to_string(na) + " x " + std::to_string(nb));
    PeriodValue det = determinant(m);
    if (det.is_zero()) throw Error(ErrorCode::PairingDegenerate, "pairing in degree " + std::to_string(d) + " is singular");
    r = (d % 2 == 0) ? r * det : r / det;
  }
  return r;
}

QComplex shift(const QComplex& c, int k) {
  QComplex r;
  for (auto& [d, s] : c.graded) r.graded[d - k] = s;
  r.scale = (k % 2 == 0) ? c.scale : c.scale.inverse();
  return r;
}

QComplex reflect_degrees(const QComplex& c) {
  QComplex r;
  for (auto& [d, s] : c.graded) r.graded[-d] = s;
  r.scale = c.scale;
  return r;
}

QComplex direct_sum(const QComplex& a, const QComplex& b) {
  QComplex r = a;
  for (auto& [d, s] : b.graded) {
    if (s.dim == 0) continue;
    r.set(d, a.dim(d) + s.dim, a.qgen(d) * s.qgen);
  }
  r.scale = a.scale * b.scale;
  return r;
}

int euler_characteristic(const QComplex& c) {
  int chi = 0;
  for (auto& [d, s] : c.graded) chi += (d % 2 == 0 ? 1 : -1) * static_cast<int>(s.dim);
  return chi;
}

}  // namespace mlv
