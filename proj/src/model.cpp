#include "toricmle/model.hpp"

#include <stdexcept>

#include "toricmle/linalg.hpp"

namespace toricmle {

DesignMatrix::DesignMatrix(MatI entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.cols() < 1)
    throw std::invalid_argument("design matrix must have at least one row and column");
  const std::optional<VecQ> r =
      solve_row_combination(to_rational(entries_), VecQ::Constant(entries_.cols(), Rational(1)));
  ones_witness_ = r;
}

RowspanOnesResult validate_rowspan_ones(const DesignMatrix& a) {
  RowspanOnesResult out;
  out.in_rowspan = a.ones_witness_.has_value();
  if (out.in_rowspan) out.witness = *a.ones_witness_;
  return out;
}

CountVector::CountVector(VecI counts) : counts_(std::move(counts)) {
  if (counts_.size() < 1) throw std::invalid_argument("count vector must be nonempty");
  n_ = 0;
  for (Index j = 0; j < counts_.size(); ++j) {
    if (counts_(j) < 0) throw std::invalid_argument("counts must be nonnegative");
    n_ += counts_(j);
  }
  if (n_ < 1) throw std::invalid_argument("count vector must have sample size >= 1");
}

Linearization data_linearization(const DesignMatrix& a, const CountVector& u) {
  return Linearization{sufficient_statistics(a, u), u.sample_size()};
}

VecI sufficient_statistics(const DesignMatrix& a, const CountVector& u) {
  if (a.state_count() != u.size())
    throw std::invalid_argument("count vector length does not match design matrix columns");
  return a.entries() * u.counts();
}

VecQ empirical_distribution(const CountVector& u) {
  VecQ out(u.size());
  for (Index j = 0; j < u.size(); ++j) out(j) = make_rational(u.counts()(j), u.sample_size());
  return out;
}

VecQ linearized_target(const Linearization& lin) {
  if (lin.scale < 1) throw std::invalid_argument("linearization scale must be positive");
  VecQ out(lin.b.size());
  for (Index i = 0; i < lin.b.size(); ++i) out(i) = make_rational(lin.b(i), lin.scale);
  return out;
}

DesignMatrix independence_matrix(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("independence_matrix needs m >= 2");
  MatI a = MatI::Zero(2 * m, m * m);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      const std::int64_t col = i * m + j;  // (i, j) in row-major order
      a(i, col) = 1;
      a(m + j, col) = 1;
    }
  }
  return DesignMatrix(a);
}

DesignMatrix path_graph_3chain_matrix() {
  // Columns are the joint states (x1, x2, x3) in binary order 000..111; the
  // first four rows are the (x1, x2) marginals, the last four the (x2, x3)
  // marginals.
  MatI a = MatI::Zero(8, 8);
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      for (int x3 = 0; x3 < 2; ++x3) {
        const int col = 4 * x1 + 2 * x2 + x3;
        a(2 * x1 + x2, col) = 1;
        a(4 + 2 * x2 + x3, col) = 1;
      }
    }
  }
  return DesignMatrix(a);
}

}  // namespace toricmle
