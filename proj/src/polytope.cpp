#include "toricmle/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "toricmle/linalg.hpp"
#include "toricmle/lp.hpp"

namespace toricmle {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const IndexSet& j) {
  Mask m = 0;
  for (int idx : j) m |= (Mask{1} << idx);
  return m;
}

IndexSet from_mask(Mask m, int states) {
  IndexSet out;
  for (int j = 0; j < states; ++j)
    if (m & (Mask{1} << j)) out.push_back(j);
  return out;
}

// Stack the representation constraints [A_J; 1^T] v = [t; 1].
MatQ representation_system(const DesignMatrix& a, const IndexSet& j) {
  MatQ m(a.param_count() + 1, static_cast<Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    for (Index i = 0; i < a.param_count(); ++i)
      m(i, static_cast<Index>(k)) = make_rational(a.entries()(i, j[k]));
    m(a.param_count(), static_cast<Index>(k)) = 1;
  }
  return m;
}

VecQ representation_rhs(const VecQ& t) {
  VecQ rhs(t.size() + 1);
  rhs.head(t.size()) = t;
  rhs(t.size()) = 1;
  return rhs;
}

void check_target(const DesignMatrix& a, const VecQ& t) {
  if (t.size() != a.param_count())
    throw std::invalid_argument("target vector length does not match design matrix rows");
}

// Memoized membership over subsets of one (A, t) instance.
struct MembershipCache {
  const DesignMatrix& a;
  const VecQ& t;
  std::unordered_map<Mask, bool> known;

  bool query(Mask mask, int states) {
    if (mask == 0) return false;
    auto it = known.find(mask);
    if (it != known.end()) return it->second;
    const IndexSet j = from_mask(mask, states);
    const LpResult lp = solve_feasibility(representation_system(a, j), representation_rhs(t));
    const bool inside = lp.status == LpStatus::Optimal;
    known.emplace(mask, inside);
    return inside;
  }
};

// All inclusion-minimal masks with t in P_J(A). Membership is upward-closed,
// so a branch dies as soon as its full extension fails, and a branch that
// already contains t cannot lead to any further minimal set. Viable minimal
// sets are affinely independent, capping the include depth.
struct MinimalSetSearch {
  MembershipCache& cache;
  int states;
  int depth_cap;
  std::vector<Mask> found;

  void run() {
    const Mask all = (Mask{1} << states) - 1;
    if (!cache.query(all, states)) return;
    descend(0, 0, 0);
  }

  void descend(int next, Mask chosen, int chosen_count) {
    if (cache.query(chosen, states)) {
      if (is_minimal(chosen)) found.push_back(chosen);
      return;
    }
    if (next == states || chosen_count >= depth_cap) return;
    Mask rest = 0;
    for (int j = next; j < states; ++j) rest |= (Mask{1} << j);
    if (!cache.query(chosen | rest, states)) return;
    descend(next + 1, chosen | (Mask{1} << next), chosen_count + 1);
    descend(next + 1, chosen, chosen_count);
  }

  bool is_minimal(Mask mask) {
    for (int j = 0; j < states; ++j) {
      const Mask bit = Mask{1} << j;
      if ((mask & bit) && cache.query(mask & ~bit, states)) return false;
    }
    return true;
  }
};

// Minimal transversals of a small hypergraph, via branching on the first
// unhit edge. An element whose private edges all disappear can never be part
// of a minimal transversal extending the current choice.
struct TransversalSearch {
  const std::vector<Mask>& edges;
  std::set<Mask> found;

  void run() { descend(0); }

  void descend(Mask chosen) {
    Mask first_unhit = 0;
    for (Mask e : edges) {
      if ((e & chosen) == 0) {
        first_unhit = e;
        break;
      }
    }
    if (first_unhit == 0) {
      found.insert(chosen);
      return;
    }
    Mask candidates = first_unhit;
    while (candidates) {
      const Mask bit = candidates & (~candidates + 1);
      candidates &= ~bit;
      const Mask next = chosen | bit;
      if (all_have_private_edge(next)) descend(next);
    }
  }

  bool all_have_private_edge(Mask chosen) const {
    Mask remaining = chosen;
    while (remaining) {
      const Mask bit = remaining & (~remaining + 1);
      remaining &= ~bit;
      bool has_private = false;
      for (Mask e : edges) {
        if ((e & chosen) == bit) {
          has_private = true;
          break;
        }
      }
      if (!has_private) return false;
    }
    return true;
  }
};

void check_guard(const DesignMatrix& a, int max_states) {
  if (max_states < 1 || max_states > 31)
    throw std::invalid_argument("enumeration limit must be between 1 and 31");
  if (a.state_count() > max_states)
    throw EnumerationGuardError("subset enumeration refused: matrix has " +
                                std::to_string(a.state_count()) + " columns, limit is " +
                                std::to_string(max_states));
}

}  // namespace

SubPolytope::SubPolytope(const DesignMatrix& a, IndexSet j) : matrix(&a), indices(std::move(j)) {
  if (indices.empty()) throw std::invalid_argument("subpolytope index set must be nonempty");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.front() < 0 || indices.back() >= a.state_count())
    throw std::invalid_argument("subpolytope index out of range");
}

SubPolytope SubPolytope::full(const DesignMatrix& a) {
  IndexSet j(static_cast<std::size_t>(a.state_count()));
  for (std::size_t k = 0; k < j.size(); ++k) j[k] = static_cast<int>(k);
  return SubPolytope(a, std::move(j));
}

bool verify_combination(const DesignMatrix& a, const VecQ& t, const ConvexCombination& cert,
                        bool require_strictly_positive) {
  if (cert.indices.size() != cert.coefficients.size()) return false;
  Rational total = 0;
  VecQ image = VecQ::Constant(a.param_count(), Rational(0));
  for (std::size_t k = 0; k < cert.indices.size(); ++k) {
    const Rational& v = cert.coefficients[k];
    if (v < 0 || (require_strictly_positive && v == 0)) return false;
    total += v;
    for (Index i = 0; i < a.param_count(); ++i)
      image(i) += v * make_rational(a.entries()(i, cert.indices[k]));
  }
  return total == 1 && image == t;
}

bool verify_separation(const DesignMatrix& a, const VecQ& t, const IndexSet& j,
                       const SeparatingFunctional& cert) {
  if (static_cast<Index>(cert.sigma.size()) != a.param_count()) return false;
  Rational at_t = 0;
  for (Index i = 0; i < a.param_count(); ++i) at_t += cert.sigma[static_cast<std::size_t>(i)] * t(i);
  if (!(at_t < cert.offset)) return false;
  for (int col : j) {
    Rational at_col = 0;
    for (Index i = 0; i < a.param_count(); ++i)
      at_col += cert.sigma[static_cast<std::size_t>(i)] * make_rational(a.entries()(i, col));
    if (!(at_col > cert.offset)) return false;
  }
  return true;
}

MembershipResult contains(const SubPolytope& p, const VecQ& t) {
  const DesignMatrix& a = *p.matrix;
  check_target(a, t);
  const LpResult lp = solve_feasibility(representation_system(a, p.indices), representation_rhs(t));

  MembershipResult out;
  if (lp.status == LpStatus::Optimal) {
    out.inside = true;
    ConvexCombination cert;
    cert.indices = p.indices;
    cert.coefficients.reserve(p.indices.size());
    for (Index k = 0; k < lp.x.size(); ++k) cert.coefficients.push_back(lp.x(k));
    if (!verify_combination(a, t, cert)) throw std::logic_error("contains: combination failed re-verification");
    out.certificate = std::move(cert);
    return out;
  }

  // Farkas dual (y, y_last) has y^T a_j + y_last >= 0 on J and
  // y^T t + y_last < 0. Flip sign and split the strict gap with a midpoint
  // offset to produce the strict separating functional.
  const VecQ& y = lp.farkas;
  SeparatingFunctional cert;
  cert.sigma.reserve(static_cast<std::size_t>(a.param_count()));
  for (Index i = 0; i < a.param_count(); ++i) cert.sigma.push_back(-y(i));
  const Rational lower_bound = y(a.param_count());  // <sigma, a_j> >= y_last
  Rational at_t = 0;
  for (Index i = 0; i < a.param_count(); ++i) at_t += cert.sigma[static_cast<std::size_t>(i)] * t(i);
  cert.offset = (lower_bound + at_t) / 2;
  if (!verify_separation(a, t, p.indices, cert))
    throw std::logic_error("contains: separation failed re-verification");
  out.inside = false;
  out.certificate = std::move(cert);
  return out;
}

std::optional<ConvexCombination> relative_interior_witness(const SubPolytope& p, const VecQ& t) {
  const DesignMatrix& a = *p.matrix;
  check_target(a, t);
  // Variables (v, eps, s): A_J v = t, sum v = 1, v_j - eps - s_j = 0;
  // maximize eps. eps > 0 at the optimum exactly when some representation
  // keeps every coordinate positive.
  const Index d = a.param_count();
  const Index k = p.size();
  const Index vars = 2 * k + 1;
  MatQ m = MatQ::Constant(d + 1 + k, vars, Rational(0));
  VecQ rhs = VecQ::Constant(d + 1 + k, Rational(0));
  for (Index col = 0; col < k; ++col) {
    for (Index i = 0; i < d; ++i)
      m(i, col) = make_rational(a.entries()(i, p.indices[static_cast<std::size_t>(col)]));
    m(d, col) = 1;
    m(d + 1 + col, col) = 1;
    m(d + 1 + col, k) = -1;
    m(d + 1 + col, k + 1 + col) = -1;
  }
  rhs.head(d) = t;
  rhs(d) = 1;
  VecQ c = VecQ::Constant(vars, Rational(0));
  c(k) = 1;

  const LpResult lp = solve_lp(m, rhs, c);
  if (lp.status != LpStatus::Optimal || lp.objective <= 0) return std::nullopt;
  ConvexCombination cert;
  cert.indices = p.indices;
  for (Index col = 0; col < k; ++col) cert.coefficients.push_back(lp.x(col));
  if (!verify_combination(a, t, cert, /*require_strictly_positive=*/true))
    throw std::logic_error("relative_interior_witness failed re-verification");
  return cert;
}

bool in_relative_interior(const SubPolytope& p, const VecQ& t) {
  if (!contains(p, t).inside) return false;
  return minimal_face(p, t) == p.indices;
}

IndexSet minimal_face(const SubPolytope& p, const VecQ& t) {
  const DesignMatrix& a = *p.matrix;
  check_target(a, t);
  const MatQ system = representation_system(a, p.indices);
  const VecQ rhs = representation_rhs(t);
  if (solve_feasibility(system, rhs).status != LpStatus::Optimal)
    throw std::invalid_argument("minimal_face: target lies outside the subpolytope");

  IndexSet face;
  for (std::size_t k = 0; k < p.indices.size(); ++k) {
    VecQ c = VecQ::Constant(p.size(), Rational(0));
    c(static_cast<Index>(k)) = 1;
    const LpResult lp = solve_lp(system, rhs, c);
    if (lp.status != LpStatus::Optimal) throw std::logic_error("minimal_face: bounded LP not optimal");
    if (lp.objective > 0) face.push_back(p.indices[k]);
  }
  return face;
}

std::vector<PositiveCombination> minimal_containing_subsets(const DesignMatrix& a, const VecQ& t,
                                                            int max_states) {
  check_target(a, t);
  check_guard(a, max_states);
  const int states = static_cast<int>(a.state_count());

  MembershipCache cache{a, t, {}};
  MinimalSetSearch search{cache, states,
                          static_cast<int>(affine_dimension(to_rational(a.entries())) + 1),
                          {}};
  search.run();
  std::sort(search.found.begin(), search.found.end());

  std::vector<PositiveCombination> result;
  result.reserve(search.found.size());
  for (Mask mask : search.found) {
    SubPolytope sub(a, from_mask(mask, states));
    std::optional<ConvexCombination> witness = relative_interior_witness(sub, t);
    if (!witness)
      throw std::logic_error("minimal containing set lost its positive representation");
    result.push_back(PositiveCombination{witness->indices, witness->coefficients});
  }
  return result;
}

std::vector<IndexSet> maximal_excluding_subsets(const DesignMatrix& a, const VecQ& t,
                                                int max_states) {
  check_target(a, t);
  check_guard(a, max_states);
  const int states = static_cast<int>(a.state_count());
  const Mask all = (Mask{1} << states) - 1;

  // t lies in P_J(A) exactly when J covers some minimal containing set, so
  // the maximal excluders are the complements of the minimal transversals of
  // the minimal-set hypergraph.
  std::vector<Mask> edges;
  for (const PositiveCombination& c : minimal_containing_subsets(a, t, max_states))
    edges.push_back(to_mask(c.indices));

  if (edges.empty()) return {from_mask(all, states)};  // t outside P(A)

  TransversalSearch search{edges, {}};
  search.run();
  std::vector<IndexSet> result;
  for (Mask k : search.found) {
    const Mask complement = all & ~k;
    if (complement != 0) result.push_back(from_mask(complement, states));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace toricmle
