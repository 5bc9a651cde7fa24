#pragma once

// Exact dense linear algebra over an arbitrary field scalar. Everything here
// is deterministic: pivoting always picks the first nonzero entry scanning
// down from the current row, so equal inputs give bitwise-equal outputs.
// Eigen's own decompositions assume floating point and are never used.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "tautilt/fields.hpp"

namespace tautilt {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Dimension vectors, g-vectors, weights: integer coordinates per vertex.
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// ===========================================================================
// Row echelon
// ===========================================================================

/// In-place reduced row echelon form. Only the first `pivot_cols` columns are
/// eligible for pivots (pass -1 for all); trailing columns are carried along,
/// which is how augmented solves reuse this. Returns the pivot column list in
/// increasing order.
template <class S>
std::vector<Index> reduced_row_echelon(Mat<S>& m, Index pivot_cols = -1) {
  const Index rows = m.rows();
  const Index cols = pivot_cols < 0 ? m.cols() : pivot_cols;
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pr = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != S(0)) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (Index j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      S f = m(i, c);
      if (f == S(0)) continue;
      for (Index j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
[[nodiscard]] Index rank(Mat<S> m) {
  return static_cast<Index>(reduced_row_echelon(m).size());
}

/// Columns form a basis of ker(m). For each free column f the basis vector has
/// a 1 in coordinate f and the negated echelon entries at the pivot rows; free
/// columns appear in increasing order.
template <class S>
[[nodiscard]] Mat<S> kernel_basis(const Mat<S>& m) {
  Mat<S> e = m;
  std::vector<Index> pivots = reduced_row_echelon(e);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Mat<S> k(n, n - static_cast<Index>(pivots.size()));
  Index out = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    for (Index i = 0; i < n; ++i) k(i, out) = S(0);
    k(f, out) = S(1);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
      k(pivots[pi], out) = -e(static_cast<Index>(pi), f);
    }
    ++out;
  }
  return k;
}

/// Any solution of a*x = b with free coordinates set to zero, or nullopt when
/// the system is inconsistent.
template <class S>
[[nodiscard]] std::optional<Mat<S>> solve_many(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  std::vector<Index> pivots = reduced_row_echelon(aug, a.cols());
  const auto nr = static_cast<Index>(pivots.size());
  for (Index i = nr; i < aug.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      if (aug(i, a.cols() + j) != S(0)) return std::nullopt;
    }
  }
  Mat<S> x = Mat<S>::Zero(a.cols(), b.cols());
  for (Index i = 0; i < nr; ++i) x.row(pivots[static_cast<std::size_t>(i)]) = aug.block(i, a.cols(), 1, b.cols());
  return x;
}

template <class S>
[[nodiscard]] std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  std::optional<Mat<S>> x = solve_many<S>(a, Mat<S>(b));
  if (!x) return std::nullopt;
  return Vec<S>(x->col(0));
}

// ===========================================================================
// Column spaces
// ===========================================================================

/// Canonical basis of the column space: reduced column echelon form, i.e. the
/// transpose of rref(m^T) with zero rows dropped. Two matrices span the same
/// space iff their canonical bases are equal entrywise, so this doubles as a
/// subspace signature.
template <class S>
[[nodiscard]] Mat<S> column_space(const Mat<S>& m) {
  Mat<S> t = m.transpose();
  std::vector<Index> pivots = reduced_row_echelon(t);
  const auto r = static_cast<Index>(pivots.size());
  return t.topRows(r).transpose();
}

/// Row index of the leading 1 in each column of a reduced column echelon
/// matrix, as produced by column_space.
template <class S>
[[nodiscard]] std::vector<Index> echelon_pivot_rows(const Mat<S>& rcef) {
  std::vector<Index> rows;
  rows.reserve(static_cast<std::size_t>(rcef.cols()));
  for (Index c = 0; c < rcef.cols(); ++c) {
    Index r = 0;
    while (r < rcef.rows() && rcef(r, c) == S(0)) ++r;
    rows.push_back(r);
  }
  return rows;
}

template <class S>
[[nodiscard]] Mat<S> hstack(const std::vector<Mat<S>>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Mat<S> out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

template <class S>
[[nodiscard]] bool is_zero_matrix(const Mat<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != S(0)) return false;
  return true;
}

template <class S>
[[nodiscard]] bool is_invertible(const Mat<S>& m) {
  return m.rows() == m.cols() && rank<S>(m) == m.rows();
}

/// m^e by binary powering; e >= 1 and m square.
template <class S>
[[nodiscard]] Mat<S> matrix_power(Mat<S> m, unsigned long long e) {
  Mat<S> acc = Mat<S>::Identity(m.rows(), m.cols());
  while (e > 0) {
    if (e & 1ull) acc = (acc * m).eval();
    m = (m * m).eval();
    e >>= 1;
  }
  return acc;
}

}  // namespace tautilt
