#pragma once

#include <optional>

#include "toricmle/rational.hpp"

namespace toricmle {

/// Rank over Q by Gaussian elimination with exact pivots.
Index rational_rank(MatQ m);

/// Exact solve of r^T A = rhs^T; free variables are set to zero.
/// Returns std::nullopt when the system is inconsistent.
std::optional<VecQ> solve_row_combination(const MatQ& a, const VecQ& rhs);

/// Dimension of the affine hull of the given points (columns); -1 for none.
Index affine_dimension(const MatQ& points);

}  // namespace toricmle
