#pragma once

#include "toricmle/rational.hpp"

namespace toricmle {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  VecQ x;          // primal solution (Optimal only)
  Rational objective = 0;
  VecQ farkas;     // Infeasible only: y with y^T A >= 0 and y^T b < 0
};

/// Exact simplex for  max c^T x  s.t.  A x = b, x >= 0.
/// Two phases, Bland's rule throughout, so it always terminates.
LpResult solve_lp(const MatQ& a, const VecQ& b, const VecQ& c);

/// Feasibility of {A x = b, x >= 0} (objective zero).
inline LpResult solve_feasibility(const MatQ& a, const VecQ& b) {
  return solve_lp(a, b, VecQ::Constant(a.cols(), Rational(0)));
}

}  // namespace toricmle
