// Local standard bases via Mora's tangent-cone algorithm.
//
// The engine works over terms sorted strictly descending in a LocalOrder.
// Because the order is anti-graded, the leading term has the lowest total
// degree and the ecart of a polynomial is max degree minus leading degree.
// Weak normal forms follow the classical Mora loop: among the reducers whose
// leading monomial divides the current one, pick minimal ecart (ties: oldest
// first), and include the current partial remainder as a new reducer whenever
// its ecart is smaller than the chosen reducer's. Termination of the loop is
// Mora's theorem; a configurable total-degree valve turns any pathological
// blowup into an explicit BoundExceeded instead of a silent wrong answer.
#ifndef MILNOR_STANDARD_BASIS_HPP
#define MILNOR_STANDARD_BASIS_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/local_order.hpp"
#include "milnor/monomial.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/rational.hpp"

namespace milnor {

struct SBOptions {
  /// Valve on the total degree of intermediate leading monomials.
  unsigned degree_bound = 64;
  /// Valve on the number of standard monomials enumerated.
  unsigned long max_standard_monomials = 10000000;
  /// Valve on the total reduction work (term operations) in one run.
  unsigned long max_reduction_steps = 20000000;
};

struct StandardBasisResult {
  /// Minimal standard basis (primitive integer coefficients, positive lead).
  std::vector<Polynomial> generators;
  /// Leading monomials of the generators; none divides another.
  std::vector<Monomial> leading_monomials;
  /// Monomial basis of the quotient, descending in the local order (constant
  /// first); nullopt when the staircase is infinite.
  std::optional<std::vector<Monomial>> standard_monomials;
  /// Codimension of the ideal in the local ring; nullopt when infinite.
  std::optional<unsigned long> mu;
};

namespace detail {

struct ETerm {
  Monomial m;
  Rational c;
  unsigned deg = 0;
};

inline Ordering compare_terms(const Monomial& a, unsigned da, const Monomial& b, unsigned db,
                              const LocalOrder& o) {
  if (da != db) return da < db ? Ordering::greater : Ordering::less;
  const auto& prio = o.priority();
  for (std::size_t k = prio.size(); k-- > 0;) {
    const std::size_t v = prio[k];
    if (a[v] != b[v]) return a[v] > b[v] ? Ordering::less : Ordering::greater;
  }
  return Ordering::equal;
}

/// Terms kept strictly descending in the local order, so t.front() is the
/// leading term (lowest degree) and t.back() has the maximal total degree.
struct EPoly {
  std::vector<ETerm> t;

  bool empty() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const Rational& lc() const { return t.front().c; }
  unsigned lead_deg() const { return t.front().deg; }
  unsigned max_deg() const { return t.back().deg; }
  unsigned ecart() const { return max_deg() - lead_deg(); }
};

inline EPoly to_epoly(const Polynomial& p, const LocalOrder& o) {
  EPoly e;
  e.t.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) e.t.push_back(ETerm{m, c, m.degree()});
  std::sort(e.t.begin(), e.t.end(), [&o](const ETerm& a, const ETerm& b) {
    return compare_terms(a.m, a.deg, b.m, b.deg, o) == Ordering::greater;
  });
  return e;
}

inline Polynomial to_polynomial(const EPoly& e, std::size_t nvars) {
  Polynomial p(nvars);
  for (const auto& t : e.t) p.add_term(t.m, t.c);
  return p;
}

/// a - c * x^shift * b, merged in order.
inline EPoly subtract_scaled(const EPoly& a, const Rational& c, const Monomial& shift,
                             const EPoly& b, const LocalOrder& o) {
  const unsigned shift_deg = shift.degree();
  EPoly out;
  out.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  Monomial mb;
  unsigned db = 0;
  auto refresh = [&]() {
    if (j < b.t.size()) {
      mb = b.t[j].m * shift;
      db = b.t[j].deg + shift_deg;
    }
  };
  refresh();
  while (i < a.t.size() && j < b.t.size()) {
    const Ordering cmp = compare_terms(a.t[i].m, a.t[i].deg, mb, db, o);
    if (cmp == Ordering::greater) {
      out.t.push_back(a.t[i]);
      ++i;
    } else if (cmp == Ordering::less) {
      Rational nc = c * b.t[j].c;
      nc = -nc;
      out.t.push_back(ETerm{mb, std::move(nc), db});
      ++j;
      refresh();
    } else {
      Rational nc = a.t[i].c - c * b.t[j].c;
      if (sgn(nc) != 0) out.t.push_back(ETerm{a.t[i].m, std::move(nc), a.t[i].deg});
      ++i;
      ++j;
      refresh();
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j, refresh()) {
    Rational nc = c * b.t[j].c;
    nc = -nc;
    out.t.push_back(ETerm{mb, std::move(nc), db});
  }
  return out;
}

/// Clear denominators, strip integer content, make the leading coefficient
/// positive. Ideals are scale-invariant, and this keeps coefficients small.
inline void primitive_normalize(EPoly& p) {
  if (p.t.empty()) return;
  Integer den(1);
  for (const auto& t : p.t) den = lcm(den, Integer(t.c.get_den()));
  Integer content(0);
  for (const auto& t : p.t) {
    Integer scaled = t.c.get_num() * (den / t.c.get_den());
    content = gcd(content, scaled);
  }
  Rational scale = make_rational(den, content);
  if (sgn(p.t.front().c) < 0) scale = -scale;
  if (scale != 1)
    for (auto& t : p.t) t.c *= scale;
}

inline EPoly spoly(const EPoly& f, const EPoly& g, const LocalOrder& o) {
  const Monomial L = Monomial::lcm(f.lm(), g.lm());
  const Monomial shift_f = L.divided_by(f.lm());
  const unsigned shift_f_deg = shift_f.degree();
  EPoly a;
  a.t.reserve(f.t.size());
  const Rational inv_lcf = Rational(1) / f.lc();
  for (const auto& t : f.t)
    a.t.push_back(ETerm{t.m * shift_f, t.c * inv_lcf, t.deg + shift_f_deg});
  return subtract_scaled(a, Rational(1) / g.lc(), L.divided_by(g.lm()), g, o);
}

/// Drop all terms of total degree >= cut (they sit at the back).
inline void strip_above(EPoly& p, unsigned cut) {
  while (!p.t.empty() && p.t.back().deg >= cut) p.t.pop_back();
}

constexpr unsigned kNoCut = ~0u;

/// Mora weak normal form; with tail_reduce, irreducible leading terms are
/// peeled off and reduction continues on the tail while keeping every
/// accumulated reducer, so no term of the result is divisible by a leading
/// monomial of basis or of any intermediate reducer.
///
/// cut_deg (engine use only): terms of degree >= cut_deg are discarded, valid
/// when the caller has certified m^cut_deg to lie inside the ideal. scale_free
/// lets the loop renormalize the working polynomial, valid when the caller
/// only needs the result up to a nonzero scalar.
inline EPoly mora_nf(EPoly h, const std::vector<EPoly>& basis, const LocalOrder& o,
                     unsigned degree_bound, bool tail_reduce, unsigned cut_deg = kNoCut,
                     bool scale_free = false, unsigned long* step_budget = nullptr) {
  std::vector<const EPoly*> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis)
    if (!g.empty()) reducers.push_back(&g);
  std::deque<EPoly> included;
  EPoly out;
  unsigned steps = 0;
  if (cut_deg != kNoCut) strip_above(h, cut_deg);
  while (!h.empty()) {
    const EPoly* red = nullptr;
    for (const EPoly* g : reducers)
      if (g->lm().divides(h.lm()) && (!red || g->ecart() < red->ecart())) red = g;
    if (!red) {
      if (!tail_reduce) {
        out.t.insert(out.t.end(), h.t.begin(), h.t.end());
        return out;
      }
      out.t.push_back(h.t.front());
      h.t.erase(h.t.begin());
      continue;
    }
    if (red->ecart() > h.ecart()) {
      EPoly copy = h;
      primitive_normalize(copy);  // reducers act through coefficient ratios
      included.push_back(std::move(copy));
      reducers.push_back(&included.back());
    }
    const Rational c = h.lc() / red->lc();
    if (step_budget) {
      // Charge by merge length weighted by coefficient size, so runaway
      // computations with huge rationals exhaust the budget early.
      const unsigned long weight =
          1 + mpz_size(c.get_num().get_mpz_t()) + mpz_size(c.get_den().get_mpz_t());
      const unsigned long cost = (h.t.size() + red->t.size()) * weight;
      if (*step_budget <= cost)
        throw BoundExceeded("reduction work bound exceeded during standard-basis computation");
      *step_budget -= cost;
    }
    h = subtract_scaled(h, c, h.lm().divided_by(red->lm()), *red, o);
    if (cut_deg != kNoCut) strip_above(h, cut_deg);
    if (scale_free && (++steps & 7u) == 0 && !h.empty()) primitive_normalize(h);
    if (!h.empty() && h.lead_deg() > degree_bound)
      throw BoundExceeded("degree bound " + std::to_string(degree_bound) +
                          " exceeded during Mora reduction");
  }
  return out;
}

/// Standard monomials below the staircase, descending in the local order.
/// bounds[v] is an exclusive upper bound for exponent v coming from the pure
/// power x_v^{bounds[v]} in the leading ideal.
inline std::vector<Monomial> enumerate_standard_monomials(
    const std::vector<Monomial>& leading, const std::vector<unsigned>& bounds,
    const LocalOrder& o, unsigned long cap) {
  const std::size_t n = bounds.size();
  // Check each leading monomial as soon as all variables of its support are
  // assigned; divisibility then prunes the whole subtree.
  std::vector<std::vector<const Monomial*>> by_depth(n + 1);
  for (const Monomial& m : leading) {
    std::size_t depth = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] > 0) depth = v + 1;
    by_depth[depth].push_back(&m);
  }
  std::vector<Monomial> out;
  Monomial cur(n);
  auto blocked_at = [&](std::size_t depth) {
    for (const Monomial* m : by_depth[depth]) {
      bool div = true;
      for (std::size_t v = 0; v < depth && div; ++v) div = (*m)[v] <= cur[v];
      if (div) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (blocked_at(v)) return;
    if (v == n) {
      if (out.size() >= cap) throw CapExceeded("standard monomial enumeration cap exceeded");
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e < bounds[v]; ++e) {
      cur[v] = e;
      self(self, v + 1);
    }
    cur[v] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [&o](const Monomial& a, const Monomial& b) { return o.greater(a, b); });
  return out;
}

}  // namespace detail

/// Remainder of p under Mora division by basis in the local ring: u*p is
/// congruent to the result modulo <basis> for some local unit u, the result
/// is 0 iff p lies in the localized ideal, and no term of the result is
/// divisible by a leading monomial of basis or of an intermediate reducer.
inline Polynomial mora_normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                                   const LocalOrder& o, const SBOptions& opts = {}) {
  std::vector<detail::EPoly> B;
  B.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.nvars() != p.nvars()) throw DimensionMismatch("basis element in a different ring");
    if (g.is_zero()) throw Error("mora_normal_form: zero basis element");
    B.push_back(detail::to_epoly(g, o));
  }
  detail::EPoly r =
      detail::mora_nf(detail::to_epoly(p, o), B, o, opts.degree_bound, /*tail_reduce=*/true);
  return detail::to_polynomial(r, p.nvars());
}

/// Buchberger loop with Mora normal forms. Every S-polynomial of the result
/// reduces to zero; the returned leading set is minimal.
inline StandardBasisResult standard_basis(const std::vector<Polynomial>& gens,
                                          const LocalOrder& o, const SBOptions& opts = {}) {
  const std::size_t n = o.nvars();
  std::vector<detail::EPoly> G;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw DimensionMismatch("generator in a different ring");
    if (g.is_zero()) continue;
    detail::EPoly e = detail::to_epoly(g, o);
    detail::primitive_normalize(e);
    G.push_back(std::move(e));
  }
  if (G.empty()) throw Error("standard_basis: generators are all zero");

  // Highest-corner cut: once the current leading monomials contain a pure
  // power x_v^{b_v} of every variable, every monomial of degree
  // >= sum_v (b_v - 1) + 1 is divisible by one of them, hence lies in the
  // leading ideal of I; by Nakayama m^D is then contained in I itself, so
  // terms of degree >= D may be dropped from every intermediate polynomial.
  // This bounds the degree wandering of the Mora loop by the staircase size.
  unsigned cut_deg = detail::kNoCut;
  std::vector<unsigned> power(n, 0);
  auto note_lm = [&](const Monomial& m) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] > 0) {
        ++support;
        var = v;
      }
    if (support == 0) {
      cut_deg = 1;
      return;
    }
    if (support == 1 && (power[var] == 0 || m[var] < power[var])) power[var] = m[var];
    unsigned d = 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (power[v] == 0) return;
      d += power[v] - 1;
    }
    if (d < cut_deg) cut_deg = d;
  };
  // Leading terms are kept even at degree >= cut so the leading-ideal
  // bookkeeping (pure powers, staircase) stays intact.
  auto apply_cut = [&]() {
    for (auto& g : G) {
      detail::strip_above(g, std::max(cut_deg, g.lead_deg() + 1));
      detail::primitive_normalize(g);
    }
  };
  for (const auto& g : G) note_lm(g.lm());
  if (cut_deg != detail::kNoCut) apply_cut();

  // Pending S-pairs, keyed by lcm degree for a deterministic normal strategy.
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> pairs;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j)
      pairs.insert({Monomial::lcm(G[j].lm(), G[k].lm()).degree(), j, k});
  };
  for (std::size_t k = 1; k < G.size(); ++k) push_pairs(k);

  unsigned long step_budget = opts.max_reduction_steps;
  while (!pairs.empty()) {
    const auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    detail::EPoly s = detail::spoly(G[i], G[j], o);
    if (cut_deg != detail::kNoCut) detail::strip_above(s, cut_deg);
    if (s.empty()) continue;
    detail::EPoly r = detail::mora_nf(std::move(s), G, o, opts.degree_bound,
                                      /*tail_reduce=*/false, cut_deg, /*scale_free=*/true,
                                      &step_budget);
    if (r.empty()) continue;
    if (r.lead_deg() > opts.degree_bound)
      throw BoundExceeded("degree bound " + std::to_string(opts.degree_bound) +
                          " exceeded by a basis element");
    detail::primitive_normalize(r);
    G.push_back(std::move(r));
    push_pairs(G.size() - 1);
    const unsigned before = cut_deg;
    note_lm(G.back().lm());
    if (cut_deg < before) apply_cut();
  }

  // Minimal leading set: ascending lead degree, oldest first; keep an element
  // iff no kept leading monomial divides its leading monomial.
  std::vector<std::size_t> order_idx(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) order_idx[i] = i;
  std::stable_sort(order_idx.begin(), order_idx.end(),
                   [&](std::size_t a, std::size_t b) { return G[a].lead_deg() < G[b].lead_deg(); });
  std::vector<std::size_t> kept;
  for (std::size_t i : order_idx) {
    bool redundant = false;
    for (std::size_t k : kept)
      if (G[k].lm().divides(G[i].lm())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(i);
  }
  // Deterministic output order: descending in the local order of the lm.
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    return detail::compare_terms(G[a].lm(), G[a].lead_deg(), G[b].lm(), G[b].lead_deg(), o) ==
           Ordering::greater;
  });

  StandardBasisResult res;
  for (std::size_t k : kept) {
    res.generators.push_back(detail::to_polynomial(G[k], n));
    res.leading_monomials.push_back(G[k].lm());
  }

  // Finiteness: the quotient is finite-dimensional iff the leading ideal
  // contains a pure power of every variable.
  bool mu_zero = false;
  std::vector<unsigned> bounds(n, 0);
  std::vector<bool> have_bound(n, false);
  for (const Monomial& m : res.leading_monomials) {
    if (m.is_constant()) {
      mu_zero = true;
      break;
    }
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] > 0) {
        ++support;
        var = v;
      }
    if (support == 1 && (!have_bound[var] || m[var] < bounds[var])) {
      have_bound[var] = true;
      bounds[var] = m[var];
    }
  }
  if (mu_zero) {
    res.standard_monomials = std::vector<Monomial>{};
    res.mu = 0;
    return res;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!have_bound[v]) return res;  // infinite staircase

  res.standard_monomials = detail::enumerate_standard_monomials(
      res.leading_monomials, bounds, o, opts.max_standard_monomials);
  res.mu = static_cast<unsigned long>(res.standard_monomials->size());
  return res;
}

}  // namespace milnor

#endif
