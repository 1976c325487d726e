// The doubling construction: f + f in disjoint variables and the
// conjugate-doubled action, which is always real with invariant form
// sum_i x_i y_i.
#ifndef MILNOR_DOUBLING_HPP
#define MILNOR_DOUBLING_HPP

#include <set>
#include <string>
#include <vector>

#include "milnor/group.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

struct DoubledGerm {
  Polynomial base;      // n variables
  Polynomial doubled;   // 2n variables: f(x) + f(y), no mixed monomials
  std::size_t base_nvars = 0;
};

struct DoubledAction {
  ActionSpec base;
  ActionSpec doubled;   // chars (chi_1..chi_n, -chi_1..-chi_n)
};

inline DoubledGerm double_germ(const Polynomial& f) {
  const std::size_t n = f.nvars();
  DoubledGerm d;
  d.base = f;
  d.doubled = f.embed(2 * n, 0) + f.embed(2 * n, n);
  d.base_nvars = n;
  return d;
}

inline DoubledAction double_action(const ActionSpec& a) {
  DoubledAction d;
  d.base = a;
  d.doubled.group = a.group;
  d.doubled.chars = a.chars;
  for (const Character& c : a.chars) d.doubled.chars.push_back(negate(a.group, c));
  return d;
}

/// True iff the action pairs variable i with variable i+n by conjugate
/// characters, certifying the rank-2n invariant quadratic form sum x_i y_i.
/// Doubled actions pass by construction; other inputs usually do not.
inline bool check_reality(const ActionSpec& a) {
  if (a.nvars() % 2 != 0) return false;
  const std::size_t n = a.nvars() / 2;
  for (std::size_t i = 0; i < n; ++i)
    if (!add(a.group, a.chars[i], a.chars[n + i]).is_trivial()) return false;
  return true;
}

inline bool check_reality(const DoubledAction& a) { return check_reality(a.doubled); }

/// No coordinate character trivial: the action fixes only the origin.
inline bool fixed_point_free(const ActionSpec& a) {
  return a.nvars() > 0 && !has_fixed_points_outside_origin(a);
}

inline bool fixed_point_free(const DoubledAction& a) { return fixed_point_free(a.doubled); }

/// Display names for the doubled ring: the base names, then conjugate copies.
inline std::vector<std::string> doubled_variable_names(const std::vector<std::string>& vars) {
  std::set<std::string> used(vars.begin(), vars.end());
  std::vector<std::string> out = vars;
  for (const std::string& v : vars) {
    std::string w = v + "_bar";
    while (used.count(w)) w += "_";
    used.insert(w);
    out.push_back(w);
  }
  return out;
}

}  // namespace milnor

#endif
