#pragma once

#include <string>
#include <vector>

#include "toricmle/polytope.hpp"

namespace toricmle {

/// Monomial prod_j x_j^{r_j} invariant under the linearized action: the
/// exponents satisfy sum_j r_j (scale*a_j - b) = 0 exactly, are strictly
/// positive on the support, and have gcd one.
struct MonomialInvariant {
  VecI exponents;   // length m, zero off the support
  IndexSet support; // {j : exponents[j] > 0}
};

/// Pretty form like "x1*x3*x6*x8" or "x2^2*x3*x4*x5*x7", 1-based indices.
std::string monomial_string(const MonomialInvariant& inv);

struct NullConeDescription {
  std::vector<IndexSet> components;       // coordinate subspaces <e_j : j in J>
  std::vector<MonomialInvariant> generators;
  IndexSet component_intersection;
};

/// Irreducible components and monomial generators of the null cone of the
/// action (scale*A, b). Subject to the subset enumeration guard.
NullConeDescription null_cone(const DesignMatrix& a, const Linearization& lin,
                              int max_states = kDefaultEnumerationLimit);

struct ComponentExistenceResult {
  bool mle_exists = false;
  IndexSet component_intersection;
};

/// Existence test through the component intersection: the estimate exists
/// exactly when the components meet only in the origin. The intersection is
/// checked against the complement of the minimal face.
ComponentExistenceResult mle_exists_via_components(const DesignMatrix& a, const CountVector& u,
                                                   int max_states = kDefaultEnumerationLimit);

/// v lies in the null cone iff every generator monomial vanishes at v.
bool is_in_null_cone(const NullConeDescription& desc, const VecQ& v);

/// Evaluates the monomial at a random rational point and at its image under
/// the torus element lambda acting through (scale*A, b); exact equality.
bool verify_invariance(const MonomialInvariant& inv, const DesignMatrix& a,
                       const Linearization& lin, const VecQ& lambda,
                       unsigned long sample_seed = 20240229);

}  // namespace toricmle
