// Theorem-checking harness: instantiates each inequality of the theory on a
// germ + action pair. Hypothesis violations produce skipped checks, never
// errors, so the harness doubles as a falsification tool.
#ifndef MILNOR_VERIFICATION_HPP
#define MILNOR_VERIFICATION_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "milnor/doubling.hpp"
#include "milnor/equivariant.hpp"
#include "milnor/errors.hpp"
#include "milnor/group.hpp"
#include "milnor/milnor_number.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/report.hpp"
#include "milnor/standard_basis.hpp"

namespace milnor {

struct VerifyOptions {
  SBOptions sb;
  /// verify_doubling refuses pairs with mu(f) above this (mu^2 growth).
  unsigned long doubling_mu_cap = 12;
};

inline bool is_prime(unsigned long long p) {
  if (p < 2) return false;
  for (unsigned long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

/// Everything the individual verifiers need about a pair, computed once.
struct PairAnalysis {
  Hypotheses hyp;
  std::optional<StandardBasisResult> sb;       // absent only for the zero germ
  std::optional<unsigned long> mu;             // absent when not isolated
  std::optional<unsigned long long> l_tau;     // absent when action trivial
};

inline PairAnalysis analyze_pair(const Polynomial& f, const ActionSpec& a,
                                 const SBOptions& opts) {
  if (f.nvars() != a.nvars())
    throw DimensionMismatch("action does not match the ambient ring");
  PairAnalysis x;
  x.hyp.invariant = is_invariant(f, a);
  x.hyp.zero_2jet = f.jet(2).is_zero();
  x.hyp.nontrivial_action = a.nontrivial();
  x.hyp.fixed_point_free = fixed_point_free(a);
  x.hyp.real = check_reality(a);
  try {
    x.sb = jacobian_standard_basis(f, opts);
    x.mu = x.sb->mu;
  } catch (const NotIsolated&) {
  }
  x.hyp.isolated = x.mu.has_value();
  if (x.hyp.nontrivial_action) x.l_tau = shortest_orbit_length(a);
  return x;
}

/// Names the first failed hypothesis among the required ones, in the fixed
/// flag order; empty when all hold.
inline std::string first_failed(const Hypotheses& h, bool need_invariant, bool need_zero_2jet,
                                bool need_isolated, bool need_nontrivial, bool need_fpf,
                                bool need_real) {
  if (need_invariant && !h.invariant) return "invariant";
  if (need_zero_2jet && !h.zero_2jet) return "zero_2jet";
  if (need_isolated && !h.isolated) return "isolated";
  if (need_nontrivial && !h.nontrivial_action) return "nontrivial_action";
  if (need_fpf && !h.fixed_point_free) return "fixed_point_free";
  if (need_real && !h.real) return "real";
  return {};
}

inline Check made_check(std::string name, Relation rel, long long left, long long right) {
  Check c;
  c.name = std::move(name);
  c.relation = rel;
  c.left = left;
  c.right = right;
  c.status = relation_holds(rel, left, right) ? CheckStatus::pass : CheckStatus::fail;
  return c;
}

inline Check skipped_check(std::string name, Relation rel, std::string reason) {
  Check c;
  c.name = std::move(name);
  c.relation = rel;
  c.status = CheckStatus::skipped;
  c.skip_reason = std::move(reason);
  return c;
}

inline VerificationReport report_shell(std::string target, const std::vector<std::string>& vars,
                                       const Polynomial& f, const ActionSpec& a,
                                       const PairAnalysis& x) {
  VerificationReport r;
  r.target = std::move(target);
  r.vars = vars;
  r.germ = f;
  r.action = a;
  r.hypotheses = x.hyp;
  if (x.mu) r.computed.mu = static_cast<long long>(*x.mu);
  if (x.l_tau) r.computed.l_tau = static_cast<long long>(*x.l_tau);
  return r;
}

/// mu(f) >= l(tau) - 1 for invariant germs with zero 2-jet under nontrivial
/// actions.
inline VerificationReport main_from(const Polynomial& f, const ActionSpec& a,
                                    const PairAnalysis& x, const std::vector<std::string>& vars) {
  VerificationReport r = report_shell("main", vars, f, a, x);
  const std::string miss = first_failed(x.hyp, true, true, true, true, false, false);
  if (miss.empty()) {
    r.checks.push_back(made_check("main_inequality", Relation::ge,
                                  static_cast<long long>(*x.mu),
                                  static_cast<long long>(*x.l_tau) - 1));
  } else {
    r.checks.push_back(skipped_check("main_inequality", Relation::ge, miss));
  }
  return r;
}

/// mu^2 >= (mu - 1) l + 1, and the final derivation step: mu = 1 or
/// mu >= l - 1.
inline VerificationReport quadratic_from(const Polynomial& f, const ActionSpec& a,
                                         const PairAnalysis& x,
                                         const std::vector<std::string>& vars) {
  VerificationReport r = report_shell("quadratic", vars, f, a, x);
  const std::string miss = first_failed(x.hyp, true, true, true, true, false, false);
  if (miss.empty()) {
    const long long mu = static_cast<long long>(*x.mu);
    const long long l = static_cast<long long>(*x.l_tau);
    r.checks.push_back(made_check("quadratic_inequality", Relation::ge, mu * mu,
                                  (mu - 1) * l + 1));
    r.checks.push_back(made_check("quadratic_implication", Relation::one_or_ge, mu, l - 1));
  } else {
    r.checks.push_back(skipped_check("quadratic_inequality", Relation::ge, miss));
    r.checks.push_back(skipped_check("quadratic_implication", Relation::one_or_ge, miss));
  }
  return r;
}

}  // namespace detail

/// Main theorem: mu(f) >= l(tau) - 1.
inline VerificationReport verify_main(const Polynomial& f, const ActionSpec& a,
                                      const std::vector<std::string>& vars,
                                      const VerifyOptions& opts = {}) {
  return detail::main_from(f, a, detail::analyze_pair(f, a, opts.sb), vars);
}

/// Prime-order specialization: mu(f) >= p - 1. Every nontrivial character of
/// a group of prime order p has order p, so l = p.
inline VerificationReport verify_chulkov(const Polynomial& f, const ActionSpec& a,
                                         const std::vector<std::string>& vars,
                                         const VerifyOptions& opts = {}) {
  const unsigned long long p = a.group.order();
  if (!is_prime(p)) throw NotPrimeOrder("group order " + std::to_string(p) + " is not prime");
  detail::PairAnalysis x = detail::analyze_pair(f, a, opts.sb);
  VerificationReport r = detail::report_shell("chulkov", vars, f, a, x);
  const std::string miss = detail::first_failed(x.hyp, true, true, true, true, false, false);
  if (miss.empty()) {
    if (*x.l_tau != p) throw Error("internal: l(tau) differs from the prime group order");
    r.checks.push_back(detail::made_check("chulkov_inequality", Relation::ge,
                                          static_cast<long long>(*x.mu),
                                          static_cast<long long>(p) - 1));
  } else {
    r.checks.push_back(detail::skipped_check("chulkov_inequality", Relation::ge, miss));
  }
  return r;
}

inline VerificationReport verify_quadratic_step(const Polynomial& f, const ActionSpec& a,
                                                const std::vector<std::string>& vars,
                                                const VerifyOptions& opts = {}) {
  return detail::quadratic_from(f, a, detail::analyze_pair(f, a, opts.sb), vars);
}

/// Doubling facts: mu(f + f) = mu(f)^2; the pairwise products of a monomial
/// basis form a monomial basis of the doubled Jacobian algebra; nu of the
/// doubled pair is at least mu(f), witnessed by the diagonal products
/// p_i(x) p_i(y) all having trivial weight.
inline VerificationReport verify_doubling(const Polynomial& f, const ActionSpec& a,
                                          const std::vector<std::string>& vars,
                                          const VerifyOptions& opts = {}) {
  detail::PairAnalysis x = detail::analyze_pair(f, a, opts.sb);
  VerificationReport r = detail::report_shell("doubling", vars, f, a, x);
  const char* names[] = {"doubling_square", "tensor_basis", "nu_doubled_lower_bound",
                         "diagonal_invariant_witness"};
  const Relation rels[] = {Relation::eq, Relation::eq, Relation::ge, Relation::eq};
  const std::string miss = detail::first_failed(x.hyp, true, false, true, false, false, false);
  if (!miss.empty()) {
    for (int i = 0; i < 4; ++i) r.checks.push_back(detail::skipped_check(names[i], rels[i], miss));
    return r;
  }
  const unsigned long mu = *x.mu;
  if (mu > opts.doubling_mu_cap)
    throw DoublingCapExceeded("mu = " + std::to_string(mu) + " exceeds the doubling cap " +
                              std::to_string(opts.doubling_mu_cap));
  const DoubledGerm dg = double_germ(f);
  const DoubledAction da = double_action(a);
  StandardBasisResult sbd = jacobian_standard_basis(dg.doubled, opts.sb);
  if (!sbd.standard_monomials)
    throw Error("internal: doubled germ of an isolated germ not isolated");
  const unsigned long mu_d = *sbd.mu;
  r.computed.mu_doubled = static_cast<long long>(mu_d);

  r.checks.push_back(detail::made_check(names[0], rels[0], static_cast<long long>(mu_d),
                                        static_cast<long long>(mu) * static_cast<long long>(mu)));

  // Tensor products of the base monomial basis with itself, as 2n-monomials.
  const std::vector<Monomial>& base_basis = *x.sb->standard_monomials;
  const std::size_t n = f.nvars();
  std::set<Monomial, MonomialKeyLess> expected;
  for (const Monomial& p : base_basis)
    for (const Monomial& q : base_basis) {
      Monomial m(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        m[i] = p[i];
        m[n + i] = q[i];
      }
      expected.insert(std::move(m));
    }
  long long symdiff = 0;
  std::set<Monomial, MonomialKeyLess> computed(sbd.standard_monomials->begin(),
                                               sbd.standard_monomials->end());
  for (const Monomial& m : expected)
    if (!computed.count(m)) ++symdiff;
  for (const Monomial& m : computed)
    if (!expected.count(m)) ++symdiff;
  r.checks.push_back(detail::made_check(names[1], rels[1], symdiff, 0));

  const GradedMilnor gm = detail::graded_from_basis(*sbd.standard_monomials, da.doubled);
  const unsigned long nu_d = nu(gm, da.doubled.group);
  r.computed.nu_doubled = static_cast<long long>(nu_d);
  r.checks.push_back(detail::made_check(names[2], rels[2], static_cast<long long>(nu_d),
                                        static_cast<long long>(mu)));

  long long diag_trivial = 0;
  for (const Monomial& p : base_basis) {
    Monomial m(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = p[i];
      m[n + i] = p[i];
    }
    if (monomial_weight(m, da.doubled).is_trivial()) ++diag_trivial;
  }
  r.checks.push_back(detail::made_check(names[3], rels[3], diag_trivial,
                                        static_cast<long long>(mu)));
  return r;
}

/// Roberts' inequality mu >= (nu - 1) l + 1 for the pair as given; hypotheses
/// are reality and fixed-point-freeness (in practice the pair is a doubled
/// one, where both hold by construction).
inline VerificationReport verify_roberts(const Polynomial& f, const ActionSpec& a,
                                         const std::vector<std::string>& vars,
                                         const VerifyOptions& opts = {}) {
  detail::PairAnalysis x = detail::analyze_pair(f, a, opts.sb);
  VerificationReport r = detail::report_shell("roberts", vars, f, a, x);
  const std::string miss = detail::first_failed(x.hyp, true, false, true, false, true, true);
  if (!miss.empty()) {
    r.checks.push_back(detail::skipped_check("roberts_inequality", Relation::ge, miss));
    return r;
  }
  detail::check_jacobian_grading(f, a);
  const GradedMilnor gm = detail::graded_from_basis(*x.sb->standard_monomials, a);
  const long long nu_f = static_cast<long long>(nu(gm, a.group));
  r.computed.nu = nu_f;
  const long long l = static_cast<long long>(*x.l_tau);  // fpf implies nontrivial
  r.checks.push_back(detail::made_check("roberts_inequality", Relation::ge,
                                        static_cast<long long>(*x.mu), (nu_f - 1) * l + 1));
  return r;
}

/// Reduction to fixed-point-free actions: with F = { i : chi_i trivial },
/// f~ = f + sum_{i in F} x_i^2 satisfies mu(f) >= mu(f~), and mu(f~) equals
/// mu of the restriction of f to the non-fixed subspace whenever that
/// restriction has an isolated singularity.
inline VerificationReport reduce_fixed(const Polynomial& f, const ActionSpec& a,
                                       const std::vector<std::string>& vars,
                                       const VerifyOptions& opts = {}) {
  if (f.nvars() != a.nvars())
    throw DimensionMismatch("action does not match the ambient ring");
  std::vector<bool> fixed(f.nvars(), false);
  std::size_t fixed_count = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.chars[i].is_trivial()) {
      fixed[i] = true;
      ++fixed_count;
    }
  if (fixed_count == 0)
    throw NoFixedCharacters("every coordinate character is nontrivial; nothing to reduce");

  detail::PairAnalysis x = detail::analyze_pair(f, a, opts.sb);
  VerificationReport r = detail::report_shell("reduce", vars, f, a, x);
  const std::string miss = detail::first_failed(x.hyp, true, true, true, false, false, false);
  if (!miss.empty()) {
    r.checks.push_back(detail::skipped_check("reduction_inequality", Relation::ge, miss));
    r.checks.push_back(detail::skipped_check("reduction_equality", Relation::eq, miss));
    return r;
  }

  Polynomial f_tilde = f;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (!fixed[i]) continue;
    Monomial sq(f.nvars());
    sq[i] = 2;
    f_tilde.add_term(sq, Rational(1));
  }
  std::optional<unsigned long> mu_tilde;
  try {
    mu_tilde = milnor_number(f_tilde, opts.sb);
  } catch (const NotIsolated&) {
  }
  if (!mu_tilde) {
    r.checks.push_back(detail::skipped_check("reduction_inequality", Relation::ge,
                                             "reduced_germ_not_isolated"));
    r.checks.push_back(detail::skipped_check("reduction_equality", Relation::eq,
                                             "reduced_germ_not_isolated"));
    return r;
  }
  r.checks.push_back(detail::made_check("reduction_inequality", Relation::ge,
                                        static_cast<long long>(*x.mu),
                                        static_cast<long long>(*mu_tilde)));

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!fixed[i]) keep.push_back(i);
  std::optional<unsigned long> mu_restricted;
  if (keep.empty()) {
    // Restriction to the zero-dimensional subspace: Q is the ground field.
    mu_restricted = 1;
  } else {
    try {
      mu_restricted = milnor_number(f.substitute_zero(fixed).select_vars(keep), opts.sb);
    } catch (const NotIsolated&) {
    }
  }
  if (mu_restricted) {
    r.checks.push_back(detail::made_check("reduction_equality", Relation::eq,
                                          static_cast<long long>(*mu_tilde),
                                          static_cast<long long>(*mu_restricted)));
  } else {
    r.checks.push_back(detail::skipped_check("reduction_equality", Relation::eq,
                                             "restriction_not_isolated"));
  }
  return r;
}

}  // namespace milnor

#endif
