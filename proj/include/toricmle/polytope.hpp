#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "toricmle/model.hpp"

namespace toricmle {

inline constexpr int kDefaultEnumerationLimit = 24;

/// Thrown when a subset enumeration would exceed the configured state limit.
class EnumerationGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// View of P_J(A) = conv{a_j : j in J}. Indices are 0-based and sorted.
struct SubPolytope {
  const DesignMatrix* matrix = nullptr;
  IndexSet indices;

  SubPolytope(const DesignMatrix& a, IndexSet j);
  static SubPolytope full(const DesignMatrix& a);

  Index size() const { return static_cast<Index>(indices.size()); }
};

/// Exact witness that t is a convex combination of the columns in `indices`.
struct ConvexCombination {
  IndexSet indices;
  std::vector<Rational> coefficients;  // aligned with indices, >= 0, sum 1
};

/// Exact witness that <sigma, a_j> > offset for all j in the tested index
/// set while <sigma, t> < offset.
struct SeparatingFunctional {
  std::vector<Rational> sigma;
  Rational offset;
};

using LpCertificate = std::variant<ConvexCombination, SeparatingFunctional>;

struct MembershipResult {
  bool inside = false;
  LpCertificate certificate;
};

bool verify_combination(const DesignMatrix& a, const VecQ& t, const ConvexCombination& cert,
                        bool require_strictly_positive = false);
bool verify_separation(const DesignMatrix& a, const VecQ& t, const IndexSet& j,
                       const SeparatingFunctional& cert);

/// Membership t in P_J(A), decided by exact LP feasibility of
/// {v >= 0, A_J v = t, sum v = 1}; always returns a verifying certificate.
MembershipResult contains(const SubPolytope& p, const VecQ& t);

/// Strictly positive convex combination with maximal minimum coordinate;
/// present exactly when t lies in the relative interior of P_J(A).
std::optional<ConvexCombination> relative_interior_witness(const SubPolytope& p, const VecQ& t);

/// t in relint P_J(A), decided through the minimal face.
bool in_relative_interior(const SubPolytope& p, const VecQ& t);

/// F = { j in J : some representation of t puts positive weight on j },
/// one exact LP per index. Requires t in P_J(A).
IndexSet minimal_face(const SubPolytope& p, const VecQ& t);

struct PositiveCombination {
  IndexSet indices;
  std::vector<Rational> coefficients;  // strictly positive, sum 1
};

/// All inclusion-minimal J with t in P_J(A), each with its strictly
/// positive representation. Depth-first search over the subset lattice with
/// monotonicity pruning; refuses when m exceeds `max_states`.
std::vector<PositiveCombination> minimal_containing_subsets(
    const DesignMatrix& a, const VecQ& t, int max_states = kDefaultEnumerationLimit);

/// All inclusion-maximal J with t not in P_J(A). A set qualifies exactly
/// when adding any outside index makes the polytope contain t.
std::vector<IndexSet> maximal_excluding_subsets(const DesignMatrix& a, const VecQ& t,
                                                int max_states = kDefaultEnumerationLimit);

}  // namespace toricmle
