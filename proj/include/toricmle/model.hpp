#pragma once

#include <optional>

#include "toricmle/rational.hpp"

namespace toricmle {

/// Integer d x m matrix A whose columns span the model's polytope and whose
/// row span carries the log-linear model. Immutable after construction.
class DesignMatrix {
 public:
  explicit DesignMatrix(MatI entries);

  const MatI& entries() const { return entries_; }
  Index param_count() const { return entries_.rows(); }  // d
  Index state_count() const { return entries_.cols(); }  // m
  VecI column(Index j) const { return entries_.col(j); }

  /// True iff the all-ones row vector lies in the rational row span of A.
  bool ones_in_rowspan() const { return ones_witness_.has_value(); }

 private:
  MatI entries_;
  std::optional<VecQ> ones_witness_;

  friend struct RowspanOnesResult;
  friend RowspanOnesResult validate_rowspan_ones(const DesignMatrix&);
};

struct RowspanOnesResult {
  bool in_rowspan = false;
  VecQ witness;  // r with r^T A = 1 when in_rowspan
};

/// Exact rational solve of r^T A = 1; the witness certifies membership.
RowspanOnesResult validate_rowspan_ones(const DesignMatrix& a);

/// Nonnegative integer counts with sample size n = sum(u) >= 1.
class CountVector {
 public:
  explicit CountVector(VecI counts);

  const VecI& counts() const { return counts_; }
  std::int64_t sample_size() const { return n_; }
  Index size() const { return counts_.size(); }

 private:
  VecI counts_;
  std::int64_t n_;
};

/// Torus character b together with the integer multiplier applied to A,
/// so the pair (A, lin) stands for the action of scale*A linearized by b.
struct Linearization {
  VecI b;
  std::int64_t scale = 1;
};

/// The statistically relevant linearization: scale n, character b = A u.
Linearization data_linearization(const DesignMatrix& a, const CountVector& u);

/// b = A u, exactly. Throws on dimension mismatch.
VecI sufficient_statistics(const DesignMatrix& a, const CountVector& u);

/// Empirical distribution u / n as exact rationals.
VecQ empirical_distribution(const CountVector& u);

/// The target b/scale of a linearization, as exact rationals.
VecQ linearized_target(const Linearization& lin);

/// Two-factor independence model on m x m states: top block I_m (x) 1,
/// bottom block 1 (x) I_m, columns indexed by (i, j) in row-major order.
DesignMatrix independence_matrix(std::int64_t m);

/// Marginal matrix of the three-binary-variables chain model (8 x 8).
DesignMatrix path_graph_3chain_matrix();

}  // namespace toricmle
