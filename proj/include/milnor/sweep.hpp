// Enumeration harness for the main theorem: generates invariant germs with
// zero 2-jet over a fixed action, discards non-isolated ones, and runs the
// main and quadratic-step verifiers on each.
#ifndef MILNOR_SWEEP_HPP
#define MILNOR_SWEEP_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/group.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/report.hpp"
#include "milnor/verification.hpp"

namespace milnor {

enum class SweepMode { exhaustive, randomized };

inline const char* to_string(SweepMode m) {
  return m == SweepMode::exhaustive ? "exhaustive" : "randomized";
}

struct SweepConfig {
  SweepConfig() {
    // Germs whose reduction exceeds this work budget are counted and
    // reported as bound_exceeded instead of stalling the sweep. Violations
    // of the verified inequalities can only come from small-mu germs, which
    // never get near the budget.
    sb.max_reduction_steps = 2000000;
  }

  std::vector<std::string> vars;
  ActionSpec action;
  unsigned dmax = 6;
  SweepMode mode = SweepMode::exhaustive;
  /// Exhaustive mode: enumerate all +-1 coefficient patterns per support
  /// instead of unit coefficients only.
  bool sign_patterns = false;
  unsigned long random_count = 1000;
  std::uint64_t seed = 0;
  unsigned long max_germs = 200000;
  SBOptions sb;
};

struct SweepViolation {
  std::string germ;
  std::string check;
  long long left = 0;
  long long right = 0;
};

struct SweepSummary {
  std::vector<std::string> vars;
  ActionSpec action;
  unsigned dmax = 0;
  SweepMode mode = SweepMode::exhaustive;
  bool sign_patterns = false;
  std::uint64_t seed = 0;
  unsigned long long l_tau = 0;
  unsigned long pool_size = 0;
  unsigned long tested = 0;
  unsigned long passed = 0;
  unsigned long skipped_non_isolated = 0;
  unsigned long bound_exceeded = 0;
  std::optional<long long> min_slack;  // minimum of mu - (l - 1) over tested germs
  unsigned long tight_count = 0;       // germs with zero slack
  std::vector<SweepViolation> violations;

  bool clean() const { return violations.empty(); }
};

namespace detail {

/// Monomials of degree in [3, dmax] with trivial weight, canonically sorted.
inline std::vector<Monomial> invariant_monomial_pool(const ActionSpec& a, unsigned dmax) {
  const std::size_t n = a.nvars();
  std::vector<Monomial> pool;
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v == n) {
      if (cur.degree() >= 3 && monomial_weight(cur, a).is_trivial()) pool.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[v] = e;
      self(self, v + 1, left - e);
    }
    cur[v] = 0;
  };
  rec(rec, 0, dmax);
  std::sort(pool.begin(), pool.end(), MonomialKeyLess{});
  return pool;
}

}  // namespace detail

inline SweepSummary enumerate_and_verify(const SweepConfig& cfg) {
  const std::size_t n = cfg.vars.size();
  if (n == 0 || n > 3) throw CapExceeded("sweep supports 1 to 3 variables");
  if (cfg.dmax > 7) throw CapExceeded("sweep degree cap is 7");
  if (cfg.action.nvars() != n)
    throw DimensionMismatch("action does not match the sweep variables");
  if (!cfg.action.nontrivial()) throw TrivialAction("sweep action is trivial");

  SweepSummary s;
  s.vars = cfg.vars;
  s.action = cfg.action;
  s.dmax = cfg.dmax;
  s.mode = cfg.mode;
  s.sign_patterns = cfg.sign_patterns;
  s.seed = cfg.seed;
  s.l_tau = shortest_orbit_length(cfg.action);

  const std::vector<Monomial> pool = detail::invariant_monomial_pool(cfg.action, cfg.dmax);
  s.pool_size = static_cast<unsigned long>(pool.size());

  VerifyOptions vopts;
  vopts.sb = cfg.sb;
  const long long l = static_cast<long long>(s.l_tau);

  auto process = [&](const Polynomial& f) {
    detail::PairAnalysis x;
    try {
      x = detail::analyze_pair(f, cfg.action, cfg.sb);
    } catch (const BoundExceeded&) {
      ++s.bound_exceeded;
      return;
    }
    if (!x.hyp.isolated) {
      ++s.skipped_non_isolated;
      return;
    }
    ++s.tested;
    const VerificationReport rep_main = detail::main_from(f, cfg.action, x, cfg.vars);
    const VerificationReport rep_quad = detail::quadratic_from(f, cfg.action, x, cfg.vars);
    bool ok = true;
    for (const VerificationReport* rep : {&rep_main, &rep_quad})
      for (const Check& c : rep->checks)
        if (c.status == CheckStatus::fail) {
          ok = false;
          s.violations.push_back(
              SweepViolation{to_string(f, cfg.vars), c.name, *c.left, *c.right});
        }
    if (ok) ++s.passed;
    const long long slack = static_cast<long long>(*x.mu) - (l - 1);
    if (!s.min_slack || slack < *s.min_slack) s.min_slack = slack;
    if (slack == 0) ++s.tight_count;
  };

  if (cfg.mode == SweepMode::exhaustive) {
    const std::size_t P = pool.size();
    if (P == 0) return s;
    // Germ count: 2^P - 1 supports, or sum over supports of 2^|S| = 3^P - 1.
    unsigned long long total = 1;
    for (std::size_t i = 0; i < P; ++i) {
      total *= cfg.sign_patterns ? 3ULL : 2ULL;
      if (total - 1 > cfg.max_germs) throw CapExceeded("exhaustive sweep exceeds the germ cap");
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << P); ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < P; ++i)
        if (mask & (std::uint64_t{1} << i)) support.push_back(i);
      if (!cfg.sign_patterns) {
        Polynomial f(n);
        for (std::size_t i : support) f.add_term(pool[i], Rational(1));
        process(f);
      } else {
        for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << support.size()); ++signs) {
          Polynomial f(n);
          for (std::size_t si = 0; si < support.size(); ++si)
            f.add_term(pool[support[si]],
                       Rational((signs >> si) & 1 ? -1 : 1));
          process(f);
        }
      }
    }
  } else {
    if (pool.empty()) return s;
    if (pool.size() > 63) throw CapExceeded("randomized sweep pool exceeds 63 monomials");
    std::mt19937_64 rng(cfg.seed);
    // Fixed coefficient alphabet; modulo draw keeps the stream portable.
    static const int coeffs[6] = {1, 2, 3, -1, -2, -3};
    for (unsigned long t = 0; t < cfg.random_count; ++t) {
      std::uint64_t mask = 0;
      do {
        mask = rng() & ((std::uint64_t{1} << pool.size()) - 1);
      } while (mask == 0);
      Polynomial f(n);
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask & (std::uint64_t{1} << i))
          f.add_term(pool[i], Rational(coeffs[rng() % 6]));
      process(f);
    }
  }
  return s;
}

}  // namespace milnor

#endif
