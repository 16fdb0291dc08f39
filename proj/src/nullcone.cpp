#include "toricmle/nullcone.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "toricmle/stability.hpp"

namespace toricmle {

namespace {

// Integer power of a nonzero rational, negative exponents allowed.
Rational rational_pow(const Rational& base, std::int64_t e) {
  if (e == 0) return Rational(1);
  if (base == 0) throw std::invalid_argument("rational_pow: zero base with nonzero exponent");
  Rational out;
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), mag);
  out.canonicalize();
  return e < 0 ? Rational(1) / out : out;
}

MonomialInvariant invariant_from_combination(const DesignMatrix& a, const Linearization& lin,
                                             const PositiveCombination& comb) {
  MonomialInvariant inv;
  inv.support = comb.indices;
  inv.exponents = VecI::Zero(a.state_count());
  const std::vector<BigInt> r = primitive_integer_vector(comb.coefficients);
  for (std::size_t k = 0; k < comb.indices.size(); ++k)
    inv.exponents(comb.indices[k]) = to_int64(r[k]);

  // The defining identity sum_j r_j (scale*a_j - b) = 0 must hold exactly.
  for (Index i = 0; i < a.param_count(); ++i) {
    BigInt acc = 0;
    for (int j : inv.support)
      acc += BigInt(static_cast<long>(inv.exponents(j))) *
             (BigInt(static_cast<long>(lin.scale)) * a.entries()(i, j) -
              BigInt(static_cast<long>(lin.b(i))));
    if (acc != 0) throw std::logic_error("monomial exponents violate the invariance identity");
  }
  return inv;
}

}  // namespace

std::string monomial_string(const MonomialInvariant& inv) {
  std::string out;
  for (int j : inv.support) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(j + 1);
    if (inv.exponents(j) > 1) out += "^" + std::to_string(inv.exponents(j));
  }
  return out;
}

NullConeDescription null_cone(const DesignMatrix& a, const Linearization& lin, int max_states) {
  const VecQ t = linearized_target(lin);
  NullConeDescription desc;
  desc.components = maximal_excluding_subsets(a, t, max_states);
  for (const PositiveCombination& comb : minimal_containing_subsets(a, t, max_states))
    desc.generators.push_back(invariant_from_combination(a, lin, comb));

  if (!desc.components.empty()) {
    IndexSet inter = desc.components.front();
    for (std::size_t k = 1; k < desc.components.size(); ++k) {
      IndexSet next;
      std::set_intersection(inter.begin(), inter.end(), desc.components[k].begin(),
                            desc.components[k].end(), std::back_inserter(next));
      inter = std::move(next);
    }
    desc.component_intersection = std::move(inter);
  }
  return desc;
}

ComponentExistenceResult mle_exists_via_components(const DesignMatrix& a, const CountVector& u,
                                                   int max_states) {
  const Linearization lin = data_linearization(a, u);
  const NullConeDescription desc = null_cone(a, lin, max_states);

  // Cross-check: the intersection must be the complement of the minimal face
  // of b/n in P(A).
  const IndexSet face = minimal_face(SubPolytope::full(a), linearized_target(lin));
  IndexSet complement;
  for (Index j = 0; j < a.state_count(); ++j)
    if (!std::binary_search(face.begin(), face.end(), static_cast<int>(j)))
      complement.push_back(static_cast<int>(j));
  if (complement != desc.component_intersection)
    throw std::logic_error("component intersection disagrees with the minimal-face complement");

  return ComponentExistenceResult{desc.component_intersection.empty(),
                                  desc.component_intersection};
}

bool is_in_null_cone(const NullConeDescription& desc, const VecQ& v) {
  for (const MonomialInvariant& inv : desc.generators) {
    bool vanishes = false;
    for (int j : inv.support) {
      if (v(j) == 0) {
        vanishes = true;
        break;
      }
    }
    if (!vanishes) return false;
  }
  return true;
}

bool verify_invariance(const MonomialInvariant& inv, const DesignMatrix& a,
                       const Linearization& lin, const VecQ& lambda, unsigned long sample_seed) {
  if (lambda.size() != a.param_count())
    throw std::invalid_argument("verify_invariance: torus element length mismatch");
  for (Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) == 0) throw std::invalid_argument("verify_invariance: zero torus coordinate");

  std::mt19937_64 rng(sample_seed);
  std::uniform_int_distribution<int> num(1, 19);
  std::uniform_int_distribution<int> den(1, 7);
  VecQ x(a.state_count());
  for (Index j = 0; j < a.state_count(); ++j) x(j) = make_rational(num(rng), den(rng));

  // Image of x under the linearized action: x_j scaled by
  // prod_i lambda_i^(scale*a_ij - b_i).
  VecQ image = x;
  for (Index j = 0; j < a.state_count(); ++j) {
    for (Index i = 0; i < a.param_count(); ++i) {
      const std::int64_t e = lin.scale * a.entries()(i, j) - lin.b(i);
      if (e != 0) image(j) *= rational_pow(lambda(i), e);
    }
  }

  Rational at_x(1), at_image(1);
  for (int j : inv.support) {
    at_x *= rational_pow(x(j), inv.exponents(j));
    at_image *= rational_pow(image(j), inv.exponents(j));
  }
  return at_x == at_image;
}

}  // namespace toricmle
