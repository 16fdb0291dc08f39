#include "toricmle/linalg.hpp"

#include <vector>

namespace toricmle {

namespace {

// Row echelon form in place; returns the pivot column of each pivot row.
std::vector<Index> eliminate(MatQ& m) {
  std::vector<Index> pivot_cols;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rational inv = 1 / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

Index rational_rank(MatQ m) { return static_cast<Index>(eliminate(m).size()); }

std::optional<VecQ> solve_row_combination(const MatQ& a, const VecQ& rhs) {
  // r^T a = rhs^T  <=>  a^T r = rhs.
  MatQ aug(a.cols(), a.rows() + 1);
  aug.leftCols(a.rows()) = a.transpose();
  aug.col(a.rows()) = rhs;
  const std::vector<Index> pivots = eliminate(aug);
  VecQ r = VecQ::Constant(a.rows(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == a.rows()) return std::nullopt;  // pivot in rhs column
    r(pivots[k]) = aug(static_cast<Index>(k), a.rows());
  }
  return r;
}

Index affine_dimension(const MatQ& points) {
  if (points.cols() == 0) return -1;
  MatQ diffs(points.rows(), points.cols() - 1);
  for (Index j = 1; j < points.cols(); ++j) diffs.col(j - 1) = points.col(j) - points.col(0);
  return diffs.cols() == 0 ? 0 : rational_rank(diffs);
}

}  // namespace toricmle
