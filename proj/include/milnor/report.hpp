// Structured verification reports.
#ifndef MILNOR_REPORT_HPP
#define MILNOR_REPORT_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "milnor/group.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

enum class CheckStatus { pass, fail, skipped };

enum class Relation { ge, eq, one_or_ge };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

inline const char* relation_text(Relation r) {
  switch (r) {
    case Relation::ge: return "left >= right";
    case Relation::eq: return "left = right";
    default: return "(left = 1) or (left >= right)";
  }
}

inline bool relation_holds(Relation r, long long left, long long right) {
  switch (r) {
    case Relation::ge: return left >= right;
    case Relation::eq: return left == right;
    default: return left == 1 || left >= right;
  }
}

/// One verified relation. A check is skipped iff a hypothesis it requires is
/// false, in which case skip_reason names exactly that flag; otherwise pass
/// holds iff the relation holds between the recorded values, so every report
/// is recomputable from its own contents.
struct Check {
  std::string name;
  Relation relation = Relation::ge;
  std::optional<long long> left;
  std::optional<long long> right;
  CheckStatus status = CheckStatus::skipped;
  std::string skip_reason;
};

struct Hypotheses {
  bool invariant = false;
  bool zero_2jet = false;
  bool isolated = false;
  bool nontrivial_action = false;
  bool fixed_point_free = false;
  bool real = false;
};

struct ComputedValues {
  std::optional<long long> mu;
  std::optional<long long> l_tau;
  std::optional<long long> nu;
  std::optional<long long> mu_doubled;
  std::optional<long long> nu_doubled;
};

struct VerificationReport {
  std::string target;
  std::vector<std::string> vars;
  Polynomial germ;
  ActionSpec action;
  Hypotheses hypotheses;
  ComputedValues computed;
  std::vector<Check> checks;

  bool any_failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == CheckStatus::fail; });
  }
};

inline void render_human(std::ostream& out, const VerificationReport& r) {
  out << "verify " << r.target << ": f = " << to_string(r.germ, r.vars) << "\n";
  out << "  hypotheses: invariant=" << (r.hypotheses.invariant ? "yes" : "no")
      << " zero_2jet=" << (r.hypotheses.zero_2jet ? "yes" : "no")
      << " isolated=" << (r.hypotheses.isolated ? "yes" : "no")
      << " nontrivial_action=" << (r.hypotheses.nontrivial_action ? "yes" : "no")
      << " fixed_point_free=" << (r.hypotheses.fixed_point_free ? "yes" : "no")
      << " real=" << (r.hypotheses.real ? "yes" : "no") << "\n";
  auto show = [&out](const char* name, const std::optional<long long>& v) {
    if (v) out << " " << name << "=" << *v;
  };
  out << "  computed:";
  show("mu", r.computed.mu);
  show("l_tau", r.computed.l_tau);
  show("nu", r.computed.nu);
  show("mu_doubled", r.computed.mu_doubled);
  show("nu_doubled", r.computed.nu_doubled);
  out << "\n";
  for (const Check& c : r.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name << ": " << relation_text(c.relation);
    if (c.left && c.right) out << " with left=" << *c.left << " right=" << *c.right;
    if (c.status == CheckStatus::skipped) out << " (hypothesis failed: " << c.skip_reason << ")";
    out << "\n";
  }
}

}  // namespace milnor

#endif
