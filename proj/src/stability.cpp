#include "toricmle/stability.hpp"

#include <stdexcept>

#include "toricmle/linalg.hpp"

namespace toricmle {

namespace {

IndexSet full_support(const DesignMatrix& a) {
  IndexSet s(static_cast<std::size_t>(a.state_count()));
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = static_cast<int>(k);
  return s;
}

// Columns scale*a_j - b over the support, as rationals.
bool polytope_is_full_dimensional(const DesignMatrix& a, const IndexSet& support) {
  MatQ points(a.param_count(), static_cast<Index>(support.size()));
  for (std::size_t k = 0; k < support.size(); ++k)
    for (Index i = 0; i < a.param_count(); ++i)
      points(i, static_cast<Index>(k)) = make_rational(a.entries()(i, support[k]));
  return affine_dimension(points) == a.param_count();
}

}  // namespace

bool verify_destabilizing(const DesignMatrix& a, const Linearization& lin, const IndexSet& support,
                          const DestabilizingSubgroup& cert) {
  if (cert.sigma.size() != a.param_count()) return false;
  for (int j : support) {
    BigInt inner = 0;
    for (Index i = 0; i < a.param_count(); ++i)
      inner += BigInt(static_cast<long>(cert.sigma(i))) *
               (BigInt(static_cast<long>(lin.scale)) * a.entries()(i, j) -
                BigInt(static_cast<long>(lin.b(i))));
    if (inner <= 0) return false;
  }
  return true;
}

StabilityReport classify(const DesignMatrix& a, const Linearization& lin, const IndexSet& support) {
  if (support.empty()) throw std::invalid_argument("classify: support must be nonempty");
  if (lin.b.size() != a.param_count())
    throw std::invalid_argument("classify: linearization length does not match matrix rows");

  const VecQ t = linearized_target(lin);
  SubPolytope sub(a, support);
  StabilityReport report;
  report.support = sub.indices;

  MembershipResult membership = contains(sub, t);
  if (!membership.inside) {
    report.stability = StabilityClass::Unstable;
    report.certificate = std::move(membership.certificate);
    return report;
  }

  std::optional<ConvexCombination> witness = relative_interior_witness(sub, t);
  if (!witness) {
    report.stability = StabilityClass::SemistableNotPolystable;
    report.certificate = std::move(membership.certificate);
    return report;
  }

  report.stability = polytope_is_full_dimensional(a, sub.indices)
                         ? StabilityClass::Stable
                         : StabilityClass::PolystableNotStable;
  report.certificate = LpCertificate(std::move(*witness));
  return report;
}

StabilityReport classify_ones_for_data(const DesignMatrix& a, const CountVector& u) {
  if (!a.ones_in_rowspan())
    throw std::invalid_argument("classify_ones_for_data: all-ones vector not in rowspan");
  StabilityReport report = classify(a, data_linearization(a, u), full_support(a));
  if (report.stability == StabilityClass::Unstable || report.stability == StabilityClass::Stable)
    throw std::logic_error("classification of the all-ones vector reached an impossible class");
  report.mle_semantics = report.stability == StabilityClass::PolystableNotStable
                             ? MleSemantics::MleExistsUnique
                             : MleSemantics::ExtendedMleOnly;
  return report;
}

DestabilizingSubgroup destabilizing_certificate(const DesignMatrix& a, const Linearization& lin,
                                                const IndexSet& support) {
  StabilityReport report = classify(a, lin, support);
  if (report.stability != StabilityClass::Unstable)
    throw std::invalid_argument("destabilizing_certificate: support is not unstable");

  const auto& cert = std::get<LpCertificate>(report.certificate);
  const auto& sep = std::get<SeparatingFunctional>(cert);

  // <sigma, a_j - t> > 0 on the support; clearing denominators and dividing
  // by the gcd gives the primitive integer direction.
  std::vector<Rational> sigma = sep.sigma;
  BigInt lcd = 1;
  for (const Rational& q : sigma) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<BigInt> scaled;
  BigInt g = 0;
  for (const Rational& q : sigma) {
    BigInt v = q.get_num() * (lcd / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  DestabilizingSubgroup out;
  out.sigma = VecI(a.param_count());
  for (Index i = 0; i < a.param_count(); ++i) {
    BigInt v = scaled[static_cast<std::size_t>(i)];
    if (g != 0) v /= g;
    out.sigma(i) = to_int64(v);
  }
  if (!verify_destabilizing(a, lin, support, out))
    throw std::logic_error("destabilizing direction failed exact re-verification");
  return out;
}

Eigen::VectorXd moment_map_residual(const DesignMatrix& a, const Linearization& lin,
                                    const Eigen::VectorXd& q) {
  if (q.size() != a.state_count())
    throw std::invalid_argument("moment_map_residual: vector length does not match columns");
  const double sq = q.squaredNorm();
  if (sq == 0) throw std::invalid_argument("moment_map_residual: zero vector");
  const Eigen::VectorXd q2 = q.array().square();
  return static_cast<double>(lin.scale) * (to_double_matrix(a.entries()) * q2) / sq -
         to_double_vector(lin.b);
}

bool mle_exists_via_positive_linearization(const DesignMatrix& a, const CountVector& u) {
  const Linearization lin = data_linearization(a, u);
  const VecQ t = linearized_target(lin);

  // The candidate target qualifies when it is a strictly positive
  // combination of all columns, i.e. lands in the relative interior.
  if (!relative_interior_witness(SubPolytope::full(a), t).has_value()) return false;

  IndexSet support;
  for (Index j = 0; j < u.size(); ++j)
    if (u.counts()(j) > 0) support.push_back(static_cast<int>(j));
  const StabilityReport report = classify(a, lin, support);
  return report.stability != StabilityClass::Unstable;
}

}  // namespace toricmle
