// JSON serialization of reports. Objects serialize with sorted keys and all
// numeric payloads are exact integers or exact rational strings, so machine
// output is byte-identical across runs and platforms.
#ifndef MILNOR_REPORT_JSON_HPP
#define MILNOR_REPORT_JSON_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "milnor/corpus.hpp"
#include "milnor/equivariant.hpp"
#include "milnor/group.hpp"
#include "milnor/report.hpp"
#include "milnor/sweep.hpp"

namespace milnor {

using Json = nlohmann::json;

inline Json json_of(const ActionSpec& a) {
  Json j;
  j["group"] = a.group.orders();
  Json rows = Json::array();
  for (const Character& c : a.chars) rows.push_back(c.exponents());
  j["chars"] = rows;
  return j;
}

inline Json json_of(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["relation"] = relation_text(c.relation);
  j["status"] = to_string(c.status);
  if (c.left) j["left"] = *c.left;
  if (c.right) j["right"] = *c.right;
  if (c.status == CheckStatus::skipped) j["failed_hypothesis"] = c.skip_reason;
  return j;
}

inline Json json_of(const VerificationReport& r) {
  Json j;
  j["target"] = r.target;
  j["vars"] = r.vars;
  j["germ"] = to_string(r.germ, r.vars);
  j["action"] = json_of(r.action);
  Json h;
  h["invariant"] = r.hypotheses.invariant;
  h["zero_2jet"] = r.hypotheses.zero_2jet;
  h["isolated"] = r.hypotheses.isolated;
  h["nontrivial_action"] = r.hypotheses.nontrivial_action;
  h["fixed_point_free"] = r.hypotheses.fixed_point_free;
  h["real"] = r.hypotheses.real;
  j["hypotheses"] = h;
  Json comp;
  if (r.computed.mu) comp["mu"] = *r.computed.mu;
  if (r.computed.l_tau) comp["l_tau"] = *r.computed.l_tau;
  if (r.computed.nu) comp["nu"] = *r.computed.nu;
  if (r.computed.mu_doubled) comp["mu_doubled"] = *r.computed.mu_doubled;
  if (r.computed.nu_doubled) comp["nu_doubled"] = *r.computed.nu_doubled;
  j["computed"] = comp;
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(json_of(c));
  j["checks"] = checks;
  return j;
}

inline Json json_of(const GradedMilnor& g, const std::vector<std::string>& vars) {
  Json j;
  j["total"] = g.total;
  Json mult = Json::array();
  for (const auto& [chr, m] : g.multiplicities) {
    Json entry;
    entry["character"] = chr.exponents();
    entry["multiplicity"] = m;
    mult.push_back(entry);
  }
  j["multiplicities"] = mult;
  Json bw = Json::array();
  for (const auto& [mono, chr] : g.basis_weights) {
    Json entry;
    entry["monomial"] = to_string(mono, vars);
    entry["weight"] = chr.exponents();
    bw.push_back(entry);
  }
  j["basis_weights"] = bw;
  return j;
}

inline Json json_of(const SweepSummary& s) {
  Json j;
  j["vars"] = s.vars;
  j["action"] = json_of(s.action);
  j["dmax"] = s.dmax;
  j["mode"] = to_string(s.mode);
  j["sign_patterns"] = s.sign_patterns;
  j["seed"] = s.seed;
  j["l_tau"] = s.l_tau;
  j["pool_size"] = s.pool_size;
  j["tested"] = s.tested;
  j["passed"] = s.passed;
  j["skipped_non_isolated"] = s.skipped_non_isolated;
  j["bound_exceeded"] = s.bound_exceeded;
  if (s.min_slack) j["min_slack"] = *s.min_slack;
  j["tight_count"] = s.tight_count;
  Json v = Json::array();
  for (const SweepViolation& violation : s.violations) {
    Json entry;
    entry["germ"] = violation.germ;
    entry["check"] = violation.check;
    entry["left"] = violation.left;
    entry["right"] = violation.right;
    v.push_back(entry);
  }
  j["violations"] = v;
  return j;
}

inline Json json_of(const CorpusRunResult& r) {
  Json j;
  j["checks_passed"] = r.checks_passed;
  j["checks_failed"] = r.checks_failed;
  j["checks_skipped"] = r.checks_skipped;
  j["doubling_capped"] = r.doubling_capped;
  Json lines = Json::array();
  for (const CorpusReportLine& line : r.lines) {
    Json entry;
    entry["entry"] = line.entry;
    entry["action"] = line.action_label;
    entry["report"] = json_of(line.report);
    lines.push_back(entry);
  }
  j["reports"] = lines;
  return j;
}

}  // namespace milnor

#endif
