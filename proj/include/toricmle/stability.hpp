#pragma once

#include <variant>

#include "toricmle/polytope.hpp"

namespace toricmle {

enum class StabilityClass { Unstable, SemistableNotPolystable, PolystableNotStable, Stable };

enum class MleSemantics { MleExistsUnique, ExtendedMleOnly, NotApplicable };

/// Integer direction sigma with <sigma, scale*a_j - b> > 0 on the target
/// support; witnesses that the one-parameter subgroup drives the support to
/// zero.
struct DestabilizingSubgroup {
  VecI sigma;
};

bool verify_destabilizing(const DesignMatrix& a, const Linearization& lin, const IndexSet& support,
                          const DestabilizingSubgroup& cert);

struct StabilityReport {
  StabilityClass stability = StabilityClass::Unstable;
  IndexSet support;
  std::variant<LpCertificate, DestabilizingSubgroup> certificate;
  MleSemantics mle_semantics = MleSemantics::NotApplicable;
};

/// Four-way polyhedral classification of a support pattern under the action
/// (scale*A, b): membership, relative interior and full-dimensional interior
/// of b/scale against P_support(A).
StabilityReport classify(const DesignMatrix& a, const Linearization& lin, const IndexSet& support);

/// Classification of the all-ones vector under (nA, Au); requires the
/// all-ones row in rowspan(A). Sets the estimation verdict accordingly.
StabilityReport classify_ones_for_data(const DesignMatrix& a, const CountVector& u);

/// Integer destabilizing direction for an unstable support, obtained from
/// the separating functional by clearing denominators. Throws when the
/// support is not unstable.
DestabilizingSubgroup destabilizing_certificate(const DesignMatrix& a, const Linearization& lin,
                                                const IndexSet& support);

/// (scale*A) q^(2) / |q|^2 - b for real positive q; zero exactly at points
/// where the rescaled moment map vanishes.
Eigen::VectorXd moment_map_residual(const DesignMatrix& a, const Linearization& lin,
                                    const Eigen::VectorXd& q);

/// Existence cross-check through the single candidate linearization b = Au:
/// the estimate exists iff that target is a strictly positive combination
/// and the data support stays semistable under it.
bool mle_exists_via_positive_linearization(const DesignMatrix& a, const CountVector& u);

}  // namespace toricmle
