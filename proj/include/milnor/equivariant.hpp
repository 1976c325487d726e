// Character grading of the Milnor algebra.
#ifndef MILNOR_EQUIVARIANT_HPP
#define MILNOR_EQUIVARIANT_HPP

#include <map>
#include <utility>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/group.hpp"
#include "milnor/milnor_number.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/standard_basis.hpp"

namespace milnor {

/// The equivariant Milnor number of a diagonal abelian action, recorded as
/// the character multiset of the representation of G on Q_f. Weights follow
/// the equivariance convention: the weight of x^a is sum_i a_i chi_i.
struct GradedMilnor {
  std::map<Character, unsigned long, CharacterLess> multiplicities;
  unsigned long total = 0;
  std::vector<std::pair<Monomial, Character>> basis_weights;
};

namespace detail {

/// Grading soundness: for invariant f every df/dx_i is weight-homogeneous of
/// weight -chi_i, so the per-weight count of standard monomials equals the
/// graded dimension of Q_f no matter which monomial basis the staircase
/// produced. Verified at runtime before tallying.
inline void check_jacobian_grading(const Polynomial& f, const ActionSpec& a) {
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    const Character expected = negate(a.group, a.chars[i]);
    if (!is_weight_homogeneous(f.derivative(i), a, expected))
      throw Error("internal: Jacobian generator is not weight-homogeneous");
  }
}

inline GradedMilnor graded_from_basis(const std::vector<Monomial>& basis, const ActionSpec& a) {
  GradedMilnor g;
  for (const Monomial& m : basis) {
    Character w = monomial_weight(m, a);
    g.multiplicities[w] += 1;
    g.total += 1;
    g.basis_weights.emplace_back(m, std::move(w));
  }
  return g;
}

}  // namespace detail

inline GradedMilnor graded_milnor(const Polynomial& f, const ActionSpec& a,
                                  const SBOptions& opts = {}) {
  if (f.nvars() != a.nvars())
    throw DimensionMismatch("action does not match the ambient ring");
  if (!is_invariant(f, a)) throw NotInvariant("germ is not invariant under the action");
  StandardBasisResult sb = jacobian_standard_basis(f, opts);
  if (!sb.standard_monomials) throw NotIsolated("not an isolated singularity");
  detail::check_jacobian_grading(f, a);
  return detail::graded_from_basis(*sb.standard_monomials, a);
}

inline unsigned long nu(const GradedMilnor& g, const AbelianGroup& group) {
  auto it = g.multiplicities.find(Character::trivial(group));
  return it == g.multiplicities.end() ? 0UL : it->second;
}

/// Multiplicity of the trivial character: dim of the invariant part of Q_f.
inline unsigned long nu(const Polynomial& f, const ActionSpec& a, const SBOptions& opts = {}) {
  return nu(graded_milnor(f, a, opts), a.group);
}

}  // namespace milnor

#endif
