#pragma once
#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlv/error.hpp"
#include "mlv/period.hpp"

namespace mlv {

inline bool field_is_zero(const mpq_class& x) { return x == 0; }
inline bool field_is_zero(const PeriodValue& x) { return x.is_zero(); }

// Dense row-major matrix over an exact field.
template <class F>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<F> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rs, std::size_t ncols = 0) {
    Matrix m(rs.size(), rs.empty() ? ncols : rs.front().size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (rs[i].size() != m.cols) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
    }
    return m;
  }

  F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  Matrix operator*(const Matrix& o) const {
    if (cols != o.rows) throw Error(ErrorCode::ShapeMismatch, "matrix product shape");
    Matrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        if (field_is_zero((*this)(i, k))) continue;
        for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape");
    Matrix r = *this;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
    return r;
  }
  Matrix scaled(const F& c) const {
    Matrix r = *this;
    for (auto& x : r.a) x *= c;
    return r;
  }
  Matrix transpose() const {
    Matrix r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Matrix column(std::size_t j) const {
    Matrix r(rows, 1);
    for (std::size_t i = 0; i < rows; ++i) r(i, 0) = (*this)(i, j);
    return r;
  }
  // Horizontal concatenation.
  Matrix hcat(const Matrix& o) const {
    if (rows != o.rows) throw Error(ErrorCode::ShapeMismatch, "hcat shape");
    Matrix r(rows, cols + o.cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) r(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols; ++j) r(i, cols + j) = o(i, j);
    }
    return r;
  }
  bool is_zero() const {
    for (auto& x : a)
      if (!field_is_zero(x)) return false;
    return true;
  }
  std::vector<std::vector<F>> to_rows() const {
    std::vector<std::vector<F>> out(rows, std::vector<F>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = (*this)(i, j);
    return out;
  }
};

template <class F>
struct Echelon {
  Matrix<F> rref;
  std::vector<std::size_t> pivot_cols;
  F det_factor = F(1);  // product of pivots times swap signs (determinant when square)
};

// Reduced row echelon form by Gauss-Jordan with first-nonzero pivoting.
template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  Echelon<F> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && field_is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
      e.det_factor = -e.det_factor;
    }
    F piv = m(r, c);
    e.det_factor *= piv;
    F inv = F(1) / piv;
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || field_is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivot_cols.size();
}

template <class F>
F determinant(const Matrix<F>& m) {
  if (m.rows != m.cols) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  if (m.rows == 0) return F(1);
  auto e = row_reduce(m);
  if (e.pivot_cols.size() < m.rows) return F(0);
  return e.det_factor;
}

template <class F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& m) {
  if (m.rows != m.cols) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  auto e = row_reduce(m.hcat(Matrix<F>::identity(m.rows)));
  if (e.pivot_cols.size() < m.rows || (m.rows > 0 && e.pivot_cols[m.rows - 1] >= m.rows)) return std::nullopt;
  Matrix<F> inv(m.rows, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.rows; ++j) inv(i, j) = e.rref(i, m.rows + j);
  return inv;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  auto inv = try_inverse(m);
  if (!inv) throw Error(ErrorCode::NotInvertible, "singular matrix");
  return *inv;
}

// Kernel basis as matrix columns: one vector per free column, with a 1 in
// that column and minus the RREF entries in the pivot columns.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::size_t nfree = m.cols - e.pivot_cols.size();
  Matrix<F> k(m.cols, nfree);
  std::size_t col = 0;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = F(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) k(e.pivot_cols[r], col) = -e.rref(r, f);
    ++col;
  }
  return k;
}

// Indices of pivot columns: a maximal independent subset of the columns.
template <class F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m) {
  return row_reduce(m).pivot_cols;
}

template <class F>
Matrix<F> select_columns(const Matrix<F>& m, const std::vector<std::size_t>& idx) {
  Matrix<F> r(m.rows, idx.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = m(i, idx[j]);
  return r;
}

// Standard basis vectors (row indices) completing the columns of m, which
// must be independent, to a basis: the first rows that raise the rank.
template <class F>
std::vector<std::size_t> complement_rows(const Matrix<F>& m) {
  Matrix<F> id = Matrix<F>::identity(m.rows);
  auto piv = row_reduce(m.hcat(id)).pivot_cols;
  std::vector<std::size_t> out;
  for (auto c : piv)
    if (c >= m.cols) out.push_back(c - m.cols);
  return out;
}

template <class F>
Matrix<F> block_diagonal(const Matrix<F>& x, const Matrix<F>& y) {
  Matrix<F> r(x.rows + y.rows, x.cols + y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows; ++i)
    for (std::size_t j = 0; j < y.cols; ++j) r(x.rows + i, x.cols + j) = y(i, j);
  return r;
}

template <class F>
Matrix<F> kronecker(const Matrix<F>& x, const Matrix<F>& y) {
  Matrix<F> r(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j)
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l) r(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
  return r;
}

using QMatrix = Matrix<mpq_class>;
using PMatrix = Matrix<PeriodValue>;

inline PMatrix to_period(const QMatrix& m) {
  PMatrix r(m.rows, m.cols);
  for (std::size_t k = 0; k < m.a.size(); ++k) r.a[k] = PeriodValue(m.a[k]);
  return r;
}

}  // namespace mlv
