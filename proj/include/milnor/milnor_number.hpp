// Milnor numbers and monomial bases of Jacobian algebras.
#ifndef MILNOR_MILNOR_NUMBER_HPP
#define MILNOR_MILNOR_NUMBER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/standard_basis.hpp"

namespace milnor {

/// Standard basis of the Jacobian ideal of a germ (f(0) = 0 required).
inline StandardBasisResult jacobian_standard_basis(const Polynomial& f,
                                                   const SBOptions& opts = {}) {
  if (sgn(f.constant_term()) != 0) throw GermInvalid("germ must vanish at the origin");
  if (f.is_zero()) throw NotIsolated("the zero germ is singular everywhere");
  return standard_basis(jacobian_generators(f), LocalOrder(f.nvars()), opts);
}

/// dim Q_f = number of standard monomials of J_f. Equals 0 when f has a
/// nonzero linear part (some partial derivative is then a local unit).
inline unsigned long milnor_number(const Polynomial& f, const SBOptions& opts = {}) {
  const StandardBasisResult sb = jacobian_standard_basis(f, opts);
  if (!sb.mu) throw NotIsolated("not an isolated singularity");
  return *sb.mu;
}

/// Monomial basis of Q_f, descending in the local order (constant first).
inline std::vector<Monomial> monomial_basis(const Polynomial& f, const SBOptions& opts = {}) {
  StandardBasisResult sb = jacobian_standard_basis(f, opts);
  if (!sb.standard_monomials) throw NotIsolated("not an isolated singularity");
  return std::move(*sb.standard_monomials);
}

struct OracleOptions {
  /// 0 = start at total_degree(f) + 1.
  unsigned initial_cap = 0;
  unsigned max_cap = 24;
};

namespace detail {

inline void monomials_below(std::size_t n, unsigned max_deg, std::vector<Monomial>& out) {
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[v] = e;
      self(self, v + 1, left - e);
    }
    cur[v] = 0;
  };
  rec(rec, 0, max_deg);
}

/// dim of (monomials of degree < cap) modulo the image of the Jacobian ideal,
/// i.e. the span of the products m * df/dx_i truncated below the cap. For
/// every K with m^K inside the local Jacobian ideal this equals dim of
/// C[x]/(J + m^K), which is exactly mu for an isolated singularity, so the
/// cap-raising loop stabilizes at the local Milnor number.
inline unsigned long truncated_quotient_dim(const std::vector<Polynomial>& partials,
                                            std::size_t n, unsigned cap) {
  std::vector<Monomial> cols;
  monomials_below(n, cap - 1, cols);
  std::map<Monomial, std::size_t, MonomialKeyLess> col_index;
  std::sort(cols.begin(), cols.end(), MonomialKeyLess{});
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);

  // Incremental Gaussian elimination over the rationals.
  std::vector<std::vector<Rational>> echelon;  // rows with pivot normalized to 1
  std::vector<std::size_t> pivot_col;
  auto insert_row = [&](std::vector<Rational> row) {
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const std::size_t p = pivot_col[r];
      if (sgn(row[p]) == 0) continue;
      const Rational factor = row[p];
      for (std::size_t c = p; c < row.size(); ++c) row[c] -= factor * echelon[r][c];
    }
    std::size_t p = row.size();
    for (std::size_t c = 0; c < row.size(); ++c)
      if (sgn(row[c]) != 0) {
        p = c;
        break;
      }
    if (p == row.size()) return;
    const Rational inv = Rational(1) / row[p];
    for (std::size_t c = p; c < row.size(); ++c) row[c] *= inv;
    echelon.push_back(std::move(row));
    pivot_col.push_back(p);
  };

  std::vector<Monomial> shifts;
  for (const Polynomial& g : partials) {
    if (g.is_zero()) continue;
    unsigned ord = 0;  // minimal total degree of a term of g
    bool first = true;
    for (const auto& [mg, cg] : g.terms()) {
      const unsigned d = mg.degree();
      if (first || d < ord) ord = d;
      first = false;
    }
    if (ord >= cap) continue;
    shifts.clear();
    monomials_below(n, cap - 1 - ord, shifts);
    std::sort(shifts.begin(), shifts.end(), MonomialKeyLess{});
    for (const Monomial& m : shifts) {
      const unsigned dm = m.degree();
      std::vector<Rational> row(cols.size(), Rational(0));
      bool nonzero = false;
      for (const auto& [mg, cg] : g.terms()) {
        if (dm + mg.degree() >= cap) continue;  // truncate above the cap
        row[col_index.at(m * mg)] = cg;
        nonzero = true;
      }
      if (nonzero) insert_row(std::move(row));
    }
  }
  return static_cast<unsigned long>(cols.size() - echelon.size());
}

}  // namespace detail

/// Independent Milnor-number oracle: exact rank computation of the truncated
/// Jacobian span below a degree cap, with the cap raised until the quotient
/// dimension stabilizes twice consecutively. Completely independent of the
/// Mora machinery.
inline unsigned long brute_force_mu_oracle(const Polynomial& f, const OracleOptions& opts = {}) {
  if (sgn(f.constant_term()) != 0) throw GermInvalid("germ must vanish at the origin");
  const std::vector<Polynomial> partials = jacobian_generators(f);
  unsigned cap = opts.initial_cap;
  if (cap == 0) cap = f.total_degree() + 1;
  if (cap < 3) cap = 3;
  std::optional<unsigned long> prev1, prev2;
  for (; cap <= opts.max_cap; ++cap) {
    const unsigned long d = detail::truncated_quotient_dim(partials, f.nvars(), cap);
    if (prev1 && prev2 && *prev1 == d && *prev2 == d) return d;
    prev2 = prev1;
    prev1 = d;
  }
  throw OracleInconclusive("quotient dimension did not stabilize below cap " +
                           std::to_string(opts.max_cap));
}

}  // namespace milnor

#endif
