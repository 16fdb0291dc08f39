#include "toricmle/lp.hpp"

#include <stdexcept>
#include <vector>

namespace toricmle {

namespace {

// Dense tableau: rows = constraints, columns = structural vars, artificials,
// rhs. The reduced-cost row is kept alongside and pivoted with the rest.
struct Tableau {
  MatQ t;                   // p x (n_total + 1)
  VecQ zrow;                // reduced costs c_B^T B^{-1} A_j - c_j, last = obj
  std::vector<Index> basis; // basis[i] = variable of row i
  Index n_vars;             // structural variable count
  Index n_total;            // structural + artificial

  Index rows() const { return t.rows(); }

  void pivot(Index r, Index s) {
    const Rational inv = 1 / t(r, s);
    for (Index j = 0; j <= n_total; ++j) t(r, j) *= inv;
    for (Index i = 0; i < rows(); ++i) {
      if (i == r || t(i, s) == 0) continue;
      const Rational f = t(i, s);
      for (Index j = 0; j <= n_total; ++j) t(i, j) -= f * t(r, j);
    }
    if (zrow(s) != 0) {
      const Rational f = zrow(s);
      for (Index j = 0; j <= n_total; ++j) zrow(j) -= f * t(r, j);
    }
    basis[static_cast<std::size_t>(r)] = s;
  }

  // Bland's rule; `limit` restricts the entering columns (phase 2 excludes
  // artificials). Returns false when no reduced cost is negative (optimal).
  bool bland_step(Index limit, bool* unbounded) {
    Index enter = -1;
    for (Index j = 0; j < limit; ++j) {
      if (zrow(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;
    Index leave = -1;
    Rational best_ratio = 0;
    for (Index i = 0; i < rows(); ++i) {
      if (t(i, enter) <= 0) continue;
      const Rational ratio = t(i, n_total) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] <
                                      basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpResult solve_lp(const MatQ& a, const VecQ& b, const VecQ& c) {
  const Index p = a.rows();
  const Index q = a.cols();
  if (b.size() != p || c.size() != q) throw std::invalid_argument("solve_lp: shape mismatch");

  // Orient rows so the rhs is nonnegative; remember flips for the certificate.
  std::vector<int> row_sign(static_cast<std::size_t>(p), 1);
  Tableau tab;
  tab.n_vars = q;
  tab.n_total = q + p;
  tab.t = MatQ::Constant(p, tab.n_total + 1, Rational(0));
  for (Index i = 0; i < p; ++i) {
    const bool flip = b(i) < 0;
    row_sign[static_cast<std::size_t>(i)] = flip ? -1 : 1;
    for (Index j = 0; j < q; ++j) tab.t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    tab.t(i, q + i) = 1;
    tab.t(i, tab.n_total) = flip ? Rational(-b(i)) : b(i);
  }
  tab.basis.resize(static_cast<std::size_t>(p));
  for (Index i = 0; i < p; ++i) tab.basis[static_cast<std::size_t>(i)] = q + i;

  // Phase 1: maximize -sum(artificials). With the artificial basis the
  // reduced cost of column j is -sum_i T(i, j).
  tab.zrow = VecQ::Constant(tab.n_total + 1, Rational(0));
  for (Index j = 0; j < q; ++j) {
    Rational s = 0;
    for (Index i = 0; i < p; ++i) s += tab.t(i, j);
    tab.zrow(j) = -s;
  }
  {
    Rational s = 0;
    for (Index i = 0; i < p; ++i) s += tab.t(i, tab.n_total);
    tab.zrow(tab.n_total) = -s;
  }

  bool unbounded = false;
  while (tab.bland_step(tab.n_total, &unbounded)) {
  }
  if (unbounded) throw std::logic_error("solve_lp: phase 1 cannot be unbounded");

  LpResult result;
  if (tab.zrow(tab.n_total) < 0) {
    // Infeasible. Duals from the artificial reduced costs: y_k = z_{q+k} - 1,
    // giving y^T A >= 0 and y^T b < 0 in the row-flipped system.
    result.status = LpStatus::Infeasible;
    result.farkas = VecQ::Constant(p, Rational(0));
    for (Index i = 0; i < p; ++i)
      result.farkas(i) = (tab.zrow(q + i) - 1) * row_sign[static_cast<std::size_t>(i)];
    return result;
  }

  // Drive leftover artificials out of the basis. A row with no structural
  // entry left is a redundant constraint: its artificial stays basic at zero
  // and the row is inert from here on (pivots never touch an all-zero row).
  for (Index i = 0; i < p; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] < q) continue;
    for (Index j = 0; j < q; ++j) {
      if (tab.t(i, j) != 0) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 reduced costs from scratch: z_j = sum_i c_basis(i) T(i,j) - c_j.
  tab.zrow = VecQ::Constant(tab.n_total + 1, Rational(0));
  for (Index j = 0; j <= tab.n_total; ++j) {
    Rational z = 0;
    for (Index i = 0; i < p; ++i) {
      const Index bi = tab.basis[static_cast<std::size_t>(i)];
      if (bi < q && c(bi) != 0) z += c(bi) * tab.t(i, j);
    }
    if (j < q) z -= c(j);
    tab.zrow(j) = z;
  }

  unbounded = false;
  while (tab.bland_step(q, &unbounded)) {
  }
  if (unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x = VecQ::Constant(q, Rational(0));
  for (Index i = 0; i < p; ++i) {
    const Index bi = tab.basis[static_cast<std::size_t>(i)];
    if (bi < q) result.x(bi) = tab.t(i, tab.n_total);
  }
  Rational obj = 0;
  for (Index j = 0; j < q; ++j) obj += c(j) * result.x(j);
  result.objective = obj;
  return result;
}

}  // namespace toricmle
