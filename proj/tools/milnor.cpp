// Command-line front end: job-file driven Milnor-number and equivariant
// computations with human or machine (JSON) reports.
//
// Exit codes: 0 = all checks pass or are skipped as expected, 1 = at least
// one check failed, 2 = input or usage error, 3 = computation error
// (not isolated, cap or bound exceeded).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "milnor/milnor.hpp"
#include "milnor/report_json.hpp"

namespace {

using namespace milnor;

struct Options {
  std::string job_path;
  std::string format;
  std::string out_path;
  std::optional<unsigned> dmax;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned long> count;
  std::optional<unsigned long> mu_cap;
  std::optional<unsigned> degree_bound;
  std::string mode;
  bool signs = false;
};

struct Ctx {
  JobFile job;
  bool json = false;
  VerifyOptions vopts;
};

Ctx make_context(const Options& opt, bool need_job = true) {
  Ctx ctx;
  if (need_job) {
    if (opt.job_path.empty()) throw JobError("missing --job <path>");
    ctx.job = load_job_file(opt.job_path);
    for (const std::string& w : ctx.job.warnings) std::cerr << "warning: " << w << "\n";
  }
  std::string format = "human";
  if (ctx.job.format) format = *ctx.job.format;
  if (!opt.format.empty()) format = opt.format;
  ctx.json = format == "json";
  if (ctx.job.degree_bound) ctx.vopts.sb.degree_bound = *ctx.job.degree_bound;
  if (opt.degree_bound) ctx.vopts.sb.degree_bound = *opt.degree_bound;
  if (ctx.job.mu_cap) ctx.vopts.doubling_mu_cap = *ctx.job.mu_cap;
  if (opt.mu_cap) ctx.vopts.doubling_mu_cap = *opt.mu_cap;
  return ctx;
}

const Polynomial& germ_of(const Ctx& ctx) {
  if (!ctx.job.f) throw JobError("job file does not define a germ 'f'");
  return *ctx.job.f;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw JobError("cannot open output file '" + opt.out_path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_mu(const Options& opt) {
  Ctx ctx = make_context(opt);
  const unsigned long mu = milnor_number(germ_of(ctx), ctx.vopts.sb);
  if (ctx.json) {
    Json j;
    j["command"] = "mu";
    j["germ"] = to_string(germ_of(ctx), ctx.job.vars);
    j["mu"] = mu;
    emit(opt, dump(j));
  } else {
    emit(opt, "mu = " + std::to_string(mu) + "\n");
  }
  return 0;
}

int cmd_basis(const Options& opt) {
  Ctx ctx = make_context(opt);
  const std::vector<Monomial> basis = monomial_basis(germ_of(ctx), ctx.vopts.sb);
  if (ctx.json) {
    Json j;
    j["command"] = "basis";
    j["germ"] = to_string(germ_of(ctx), ctx.job.vars);
    j["mu"] = basis.size();
    Json arr = Json::array();
    for (const Monomial& m : basis) arr.push_back(to_string(m, ctx.job.vars));
    j["monomials"] = arr;
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    out << "mu = " << basis.size() << "\nbasis:";
    for (const Monomial& m : basis) out << " " << to_string(m, ctx.job.vars);
    out << "\n";
    emit(opt, out.str());
  }
  return 0;
}

int cmd_grade(const Options& opt) {
  Ctx ctx = make_context(opt);
  const GradedMilnor g = graded_milnor(germ_of(ctx), ctx.job.action, ctx.vopts.sb);
  if (ctx.json) {
    Json j;
    j["command"] = "grade";
    j["germ"] = to_string(germ_of(ctx), ctx.job.vars);
    j["action"] = json_of(ctx.job.action);
    j["graded"] = json_of(g, ctx.job.vars);
    j["nu"] = nu(g, ctx.job.action.group);
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    out << "mu = " << g.total << "\nnu = " << nu(g, ctx.job.action.group) << "\n";
    out << "weight multiplicities:\n";
    for (const auto& [chr, mult] : g.multiplicities) {
      out << "  (";
      for (std::size_t j = 0; j < chr.exponents().size(); ++j)
        out << (j ? "," : "") << chr.exponents()[j];
      out << ") : " << mult << "\n";
    }
    out << "basis weights:\n";
    for (const auto& [mono, chr] : g.basis_weights) {
      out << "  " << to_string(mono, ctx.job.vars) << " -> (";
      for (std::size_t j = 0; j < chr.exponents().size(); ++j)
        out << (j ? "," : "") << chr.exponents()[j];
      out << ")\n";
    }
    emit(opt, out.str());
  }
  return 0;
}

int cmd_ltau(const Options& opt) {
  Ctx ctx = make_context(opt);
  const unsigned long long l = shortest_orbit_length(ctx.job.action);
  if (ctx.json) {
    Json j;
    j["command"] = "ltau";
    j["action"] = json_of(ctx.job.action);
    j["l_tau"] = l;
    emit(opt, dump(j));
  } else {
    emit(opt, "l = " + std::to_string(l) + "\n");
  }
  return 0;
}

int cmd_double(const Options& opt) {
  Ctx ctx = make_context(opt);
  const DoubledGerm dg = double_germ(germ_of(ctx));
  const DoubledAction da = double_action(ctx.job.action);
  const std::vector<std::string> dvars = doubled_variable_names(ctx.job.vars);
  if (ctx.json) {
    Json j;
    j["command"] = "double";
    j["vars"] = dvars;
    j["germ"] = to_string(dg.doubled, dvars);
    j["action"] = json_of(da.doubled);
    j["real"] = check_reality(da);
    j["fixed_point_free"] = fixed_point_free(da);
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    out << "doubled germ: " << to_string(dg.doubled, dvars) << "\n";
    out << "doubled action on (";
    for (std::size_t i = 0; i < dvars.size(); ++i) out << (i ? "," : "") << dvars[i];
    out << "): chars";
    for (const Character& c : da.doubled.chars) {
      out << " (";
      for (std::size_t j = 0; j < c.exponents().size(); ++j)
        out << (j ? "," : "") << c.exponents()[j];
      out << ")";
    }
    out << "\nreal: " << (check_reality(da) ? "yes" : "no")
        << "\nfixed point free: " << (fixed_point_free(da) ? "yes" : "no") << "\n";
    emit(opt, out.str());
  }
  return 0;
}

int cmd_verify(const Options& opt, const std::string& target) {
  Ctx ctx = make_context(opt);
  const Polynomial& f = germ_of(ctx);
  const ActionSpec& a = ctx.job.action;
  const std::vector<std::string>& vars = ctx.job.vars;
  std::vector<VerificationReport> reports;
  std::vector<std::string> notes;

  auto roberts_on_doubled = [&]() {
    const DoubledGerm dg = double_germ(f);
    const DoubledAction da = double_action(a);
    return verify_roberts(dg.doubled, da.doubled, doubled_variable_names(vars), ctx.vopts);
  };

  if (target == "main") {
    reports.push_back(verify_main(f, a, vars, ctx.vopts));
  } else if (target == "chulkov") {
    reports.push_back(verify_chulkov(f, a, vars, ctx.vopts));
  } else if (target == "quadratic") {
    reports.push_back(verify_quadratic_step(f, a, vars, ctx.vopts));
  } else if (target == "doubling") {
    reports.push_back(verify_doubling(f, a, vars, ctx.vopts));
  } else if (target == "roberts") {
    reports.push_back(roberts_on_doubled());
  } else if (target == "reduce") {
    reports.push_back(reduce_fixed(f, a, vars, ctx.vopts));
  } else if (target == "all") {
    reports.push_back(verify_main(f, a, vars, ctx.vopts));
    reports.push_back(verify_quadratic_step(f, a, vars, ctx.vopts));
    if (is_prime(a.group.order())) {
      reports.push_back(verify_chulkov(f, a, vars, ctx.vopts));
    } else {
      notes.push_back("chulkov: not run (group order is not prime)");
    }
    bool within_cap = false;
    try {
      within_cap = milnor_number(f, ctx.vopts.sb) <= ctx.vopts.doubling_mu_cap;
    } catch (const NotIsolated&) {
    }
    if (within_cap) {
      reports.push_back(verify_doubling(f, a, vars, ctx.vopts));
      reports.push_back(roberts_on_doubled());
    } else {
      notes.push_back("doubling, roberts: not run (mu exceeds the doubling cap or is infinite)");
    }
    if (has_fixed_points_outside_origin(a)) {
      reports.push_back(reduce_fixed(f, a, vars, ctx.vopts));
    } else {
      notes.push_back("reduce: not run (no trivial coordinate character)");
    }
  } else {
    throw JobError("unknown verify target '" + target + "'");
  }

  bool failed = false;
  for (const VerificationReport& r : reports) failed = failed || r.any_failed();

  if (ctx.json) {
    Json j;
    j["command"] = "verify";
    j["target"] = target;
    Json arr = Json::array();
    for (const VerificationReport& r : reports) arr.push_back(json_of(r));
    j["reports"] = arr;
    j["notes"] = notes;
    j["failed"] = failed;
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    for (const VerificationReport& r : reports) render_human(out, r);
    for (const std::string& n : notes) out << "note: " << n << "\n";
    emit(opt, out.str());
  }
  return failed ? 1 : 0;
}

int cmd_sweep(const Options& opt) {
  Ctx ctx = make_context(opt);
  SweepConfig cfg;
  cfg.vars = ctx.job.vars;
  cfg.action = ctx.job.action;
  cfg.sb = ctx.vopts.sb;
  cfg.sb.max_reduction_steps = SweepConfig().sb.max_reduction_steps;
  if (ctx.job.dmax) cfg.dmax = *ctx.job.dmax;
  if (opt.dmax) cfg.dmax = *opt.dmax;
  std::string mode = ctx.job.mode.value_or("exhaustive");
  if (!opt.mode.empty()) mode = opt.mode;
  cfg.mode = mode == "randomized" ? SweepMode::randomized : SweepMode::exhaustive;
  cfg.sign_patterns = ctx.job.signs || opt.signs;
  if (ctx.job.count) cfg.random_count = *ctx.job.count;
  if (opt.count) cfg.random_count = *opt.count;
  if (ctx.job.seed) cfg.seed = *ctx.job.seed;
  if (opt.seed) cfg.seed = *opt.seed;

  const SweepSummary s = enumerate_and_verify(cfg);
  if (ctx.json) {
    Json j;
    j["command"] = "sweep";
    j["summary"] = json_of(s);
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    out << "sweep " << to_string(s.mode) << (s.sign_patterns ? " (sign patterns)" : "")
        << ": dmax=" << s.dmax << " pool=" << s.pool_size << " l_tau=" << s.l_tau
        << " seed=" << s.seed << "\n";
    out << "tested=" << s.tested << " passed=" << s.passed
        << " non_isolated=" << s.skipped_non_isolated << " bound_exceeded=" << s.bound_exceeded
        << "\n";
    if (s.min_slack) out << "min slack mu - (l-1) = " << *s.min_slack << "\n";
    out << "tight cases = " << s.tight_count << "\n";
    if (s.violations.empty()) {
      out << "violations: none\n";
    } else {
      out << "violations:\n";
      for (const SweepViolation& v : s.violations)
        out << "  " << v.check << " left=" << v.left << " right=" << v.right << " germ=" << v.germ
            << "\n";
    }
    emit(opt, out.str());
  }
  return s.violations.empty() ? 0 : 1;
}

int cmd_corpus(const Options& opt) {
  Ctx ctx = make_context(opt, /*need_job=*/false);
  const CorpusRunResult res = run_corpus_verification(ctx.vopts);
  if (ctx.json) {
    Json j;
    j["command"] = "corpus";
    j["result"] = json_of(res);
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    for (const CorpusReportLine& line : res.lines) {
      for (const Check& c : line.report.checks) {
        out << line.entry << " / " << line.action_label << " / " << c.name << ": "
            << to_string(c.status);
        if (c.status == CheckStatus::skipped) out << " (" << c.skip_reason << ")";
        if (c.left && c.right) out << " [" << *c.left << " vs " << *c.right << "]";
        out << "\n";
      }
    }
    out << "passed=" << res.checks_passed << " failed=" << res.checks_failed
        << " skipped=" << res.checks_skipped << " doubling_capped=" << res.doubling_capped
        << "\n";
    emit(opt, out.str());
  }
  return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Milnor numbers, monomial bases and character-graded Milnor algebras of "
               "polynomial germs under diagonal finite-abelian actions"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd, bool with_job = true) {
    if (with_job) cmd->add_option("--job", opt.job_path, "job file path");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--out", opt.out_path, "write the report to a file");
    cmd->add_option("--degree-bound", opt.degree_bound,
                    "safety valve on intermediate leading-term degrees");
    cmd->add_option("--mu-cap", opt.mu_cap, "doubling cap on mu");
  };

  CLI::App* mu = app.add_subcommand("mu", "Milnor number of the germ");
  add_common(mu);
  CLI::App* basis = app.add_subcommand("basis", "monomial basis of the Milnor algebra");
  add_common(basis);
  CLI::App* grade = app.add_subcommand("grade", "character-graded Milnor algebra");
  add_common(grade);
  CLI::App* ltau = app.add_subcommand("ltau", "shortest orbit length of the action");
  add_common(ltau);
  CLI::App* dbl = app.add_subcommand("double", "doubled germ and conjugate-doubled action");
  add_common(dbl);
  CLI::App* verify = app.add_subcommand("verify", "run a verification target");
  std::string target = "all";
  verify->add_option("target", target, "main|chulkov|roberts|doubling|quadratic|reduce|all")
      ->check(CLI::IsMember({"main", "chulkov", "roberts", "doubling", "quadratic", "reduce",
                             "all"}));
  add_common(verify);
  CLI::App* sweep = app.add_subcommand("sweep", "enumerate invariant germs and verify them");
  add_common(sweep);
  sweep->add_option("--dmax", opt.dmax, "maximal germ degree");
  sweep->add_option("--seed", opt.seed, "random seed");
  sweep->add_option("--count", opt.count, "number of randomized germs");
  sweep->add_option("--mode", opt.mode, "exhaustive|randomized")
      ->check(CLI::IsMember({"exhaustive", "randomized"}));
  sweep->add_flag("--signs", opt.signs, "enumerate +-1 coefficient patterns");
  CLI::App* corpus = app.add_subcommand("corpus", "verify the built-in corpus");
  add_common(corpus, /*with_job=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (mu->parsed()) return cmd_mu(opt);
    if (basis->parsed()) return cmd_basis(opt);
    if (grade->parsed()) return cmd_grade(opt);
    if (ltau->parsed()) return cmd_ltau(opt);
    if (dbl->parsed()) return cmd_double(opt);
    if (verify->parsed()) return cmd_verify(opt, target);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (corpus->parsed()) return cmd_corpus(opt);
  } catch (const milnor::NotIsolated& e) {
    std::cerr << "error: not an isolated singularity: " << e.what() << "\n";
    return 3;
  } catch (const milnor::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const milnor::DoublingCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const milnor::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const milnor::OracleInconclusive& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const milnor::Error& e) {
    // Parse, job, germ, invariance and action errors are input errors.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
