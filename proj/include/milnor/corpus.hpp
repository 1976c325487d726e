// Built-in germ corpus with natural diagonal actions. Expected Milnor
// numbers are re-derived by the brute-force oracle on first access, never
// trusted as literature constants.
#ifndef MILNOR_CORPUS_HPP
#define MILNOR_CORPUS_HPP

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "milnor/doubling.hpp"
#include "milnor/errors.hpp"
#include "milnor/group.hpp"
#include "milnor/milnor_number.hpp"
#include "milnor/parse.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/verification.hpp"

namespace milnor {

struct CorpusAction {
  std::string label;
  ActionSpec action;
};

struct CorpusEntry {
  std::string name;
  std::vector<std::string> vars;
  Polynomial germ;
  unsigned long expected_mu = 0;
  std::vector<CorpusAction> actions;
};

namespace detail {

inline ActionSpec make_action(std::vector<unsigned long> orders,
                              const std::vector<std::vector<long long>>& rows) {
  ActionSpec a;
  a.group = AbelianGroup(std::move(orders));
  a.chars.reserve(rows.size());
  for (const auto& r : rows) a.chars.emplace_back(a.group, r);
  return a;
}

inline std::string znm(unsigned long a) { return "Z" + std::to_string(a); }
inline std::string znm(unsigned long a, unsigned long b) {
  return "Z" + std::to_string(a) + "xZ" + std::to_string(b);
}

}  // namespace detail

inline std::vector<CorpusEntry> build_corpus() {
  using detail::make_action;
  using detail::znm;
  std::vector<CorpusEntry> out;
  const std::vector<std::string> x1 = {"x"};
  const std::vector<std::string> xy = {"x", "y"};
  auto add = [&out](std::string name, const std::vector<std::string>& vars,
                    const std::string& text, unsigned long mu,
                    std::vector<CorpusAction> actions) {
    out.push_back(
        CorpusEntry{std::move(name), vars, parse_polynomial(text, vars), mu, std::move(actions)});
  };

  // One-variable pure powers x^a under the full scaling action.
  for (unsigned long a = 2; a <= 6; ++a)
    add("pure_" + std::to_string(a), x1, "x^" + std::to_string(a), a - 1,
        {{znm(a), make_action({a}, {{1}})}});

  // A_k: x^{k+1} + y^2.
  for (unsigned long k = 1; k <= 8; ++k)
    add("A" + std::to_string(k), xy, "x^" + std::to_string(k + 1) + " + y^2", k,
        {{znm(k + 1, 2), make_action({k + 1, 2}, {{1, 0}, {0, 1}})},
         {znm(k + 1) + "_fixed_y", make_action({k + 1}, {{1}, {0}})}});

  // D_k: x^2 y + y^{k-1}; invariance forces 2 chi_x = -chi_y, realized over
  // Z_{2(k-1)} by chi = (k-2, 2).
  for (unsigned long k = 4; k <= 8; ++k)
    add("D" + std::to_string(k), xy, "x^2*y + y^" + std::to_string(k - 1), k,
        {{znm(2 * (k - 1)),
          make_action({2 * (k - 1)}, {{static_cast<long long>(k) - 2}, {2}})},
         {znm(2) + "_fixed_y", make_action({2}, {{1}, {0}})}});

  add("E6", xy, "x^3 + y^4", 6,
      {{znm(3, 4), make_action({3, 4}, {{1, 0}, {0, 1}})},
       {znm(12), make_action({12}, {{4}, {3}})}});
  add("E7", xy, "x^3 + x*y^3", 7,
      {{znm(9), make_action({9}, {{3}, {2}})},
       {znm(3) + "_fixed_x", make_action({3}, {{0}, {1}})}});
  add("E8", xy, "x^3 + y^5", 8,
      {{znm(3, 5), make_action({3, 5}, {{1, 0}, {0, 1}})},
       {znm(15), make_action({15}, {{5}, {3}})}});

  // Brieskorn x^a + y^b, mu = (a-1)(b-1).
  for (unsigned long a = 2; a <= 6; ++a)
    for (unsigned long b = a; b <= 6; ++b) {
      const unsigned long L = std::lcm(a, b);
      add("brieskorn_" + std::to_string(a) + "_" + std::to_string(b), xy,
          "x^" + std::to_string(a) + " + y^" + std::to_string(b), (a - 1) * (b - 1),
          {{znm(a, b), make_action({a, b}, {{1, 0}, {0, 1}})},
           {znm(L), make_action({L}, {{static_cast<long long>(L / a)},
                                      {static_cast<long long>(L / b)}})},
           {znm(a) + "_fixed_y", make_action({a}, {{1}, {0}})}});
    }
  return out;
}

/// The corpus, validated on first access: for every entry the standard-basis
/// engine and the brute-force oracle must both reproduce expected_mu, and the
/// germ must be invariant under each listed action.
inline const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c = build_corpus();
    for (const CorpusEntry& e : c) {
      const unsigned long engine = milnor_number(e.germ);
      const unsigned long oracle = brute_force_mu_oracle(e.germ);
      if (engine != e.expected_mu || oracle != e.expected_mu)
        throw Error("corpus entry " + e.name + ": expected mu " +
                    std::to_string(e.expected_mu) + ", engine " + std::to_string(engine) +
                    ", oracle " + std::to_string(oracle));
      for (const CorpusAction& ca : e.actions)
        if (!is_invariant(e.germ, ca.action))
          throw Error("corpus entry " + e.name + ": not invariant under " + ca.label);
    }
    return c;
  }();
  return corpus;
}

struct CorpusReportLine {
  std::string entry;
  std::string action_label;
  VerificationReport report;
};

struct CorpusRunResult {
  std::vector<CorpusReportLine> lines;
  unsigned long checks_passed = 0;
  unsigned long checks_failed = 0;
  unsigned long checks_skipped = 0;
  unsigned long doubling_capped = 0;  // pairs skipped because mu exceeds the cap

  bool ok() const { return checks_failed == 0; }
};

/// Run every applicable verifier on every corpus pair. Any failed check is a
/// build-breaking regression.
inline CorpusRunResult run_corpus_verification(const VerifyOptions& opts = {}) {
  CorpusRunResult res;
  auto push = [&res](const std::string& entry, const std::string& label,
                     VerificationReport rep) {
    for (const Check& c : rep.checks) {
      if (c.status == CheckStatus::pass) ++res.checks_passed;
      else if (c.status == CheckStatus::fail) ++res.checks_failed;
      else ++res.checks_skipped;
    }
    res.lines.push_back(CorpusReportLine{entry, label, std::move(rep)});
  };
  for (const CorpusEntry& e : builtin_corpus()) {
    for (const CorpusAction& ca : e.actions) {
      push(e.name, ca.label, verify_main(e.germ, ca.action, e.vars, opts));
      push(e.name, ca.label, verify_quadratic_step(e.germ, ca.action, e.vars, opts));
      if (is_prime(ca.action.group.order()))
        push(e.name, ca.label, verify_chulkov(e.germ, ca.action, e.vars, opts));
      if (has_fixed_points_outside_origin(ca.action))
        push(e.name, ca.label, reduce_fixed(e.germ, ca.action, e.vars, opts));
      if (e.expected_mu <= opts.doubling_mu_cap) {
        push(e.name, ca.label, verify_doubling(e.germ, ca.action, e.vars, opts));
        const DoubledGerm dg = double_germ(e.germ);
        const DoubledAction da = double_action(ca.action);
        push(e.name, ca.label + "_doubled",
             verify_roberts(dg.doubled, da.doubled, doubled_variable_names(e.vars), opts));
      } else {
        ++res.doubling_capped;
      }
    }
  }
  return res;
}

}  // namespace milnor

#endif
