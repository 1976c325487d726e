#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "milnor/corpus.hpp"
#include "milnor/parse.hpp"
#include "milnor/sweep.hpp"
#include "milnor/verification.hpp"

using namespace milnor;

namespace {

ActionSpec action(std::vector<unsigned long> orders, std::vector<std::vector<long long>> rows) {
  ActionSpec a;
  a.group = AbelianGroup(std::move(orders));
  for (auto& r : rows) a.chars.emplace_back(a.group, r);
  return a;
}

const std::vector<std::string> kX = {"x"};
const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

const Check& check_named(const VerificationReport& r, const std::string& name) {
  for (const Check& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " + name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("main theorem on the cubic cone", "[verify]") {
  VerificationReport r =
      verify_main(parse_polynomial("x^3 + y^3", kXY), action({3}, {{1}, {2}}), kXY);
  REQUIRE(r.hypotheses.invariant);
  REQUIRE(r.hypotheses.zero_2jet);
  REQUIRE(r.hypotheses.isolated);
  REQUIRE(r.hypotheses.nontrivial_action);
  REQUIRE(r.computed.mu == 4);
  REQUIRE(r.computed.l_tau == 3);
  const Check& c = check_named(r, "main_inequality");
  REQUIRE(c.status == CheckStatus::pass);
  REQUIRE(c.left == 4);
  REQUIRE(c.right == 2);
}

TEST_CASE("main theorem skips on a nonzero 2-jet", "[verify]") {
  VerificationReport r =
      verify_main(parse_polynomial("x^2 + y^2", kXY), action({2}, {{1}, {1}}), kXY);
  const Check& c = check_named(r, "main_inequality");
  REQUIRE(c.status == CheckStatus::skipped);
  REQUIRE(c.skip_reason == "zero_2jet");
  REQUIRE(!c.left.has_value());
}

TEST_CASE("main theorem on the quintic pair", "[verify]") {
  VerificationReport r =
      verify_main(parse_polynomial("x^5 + y^5", kXY), action({5}, {{1}, {4}}), kXY);
  const Check& c = check_named(r, "main_inequality");
  REQUIRE(c.status == CheckStatus::pass);
  REQUIRE(c.left == 16);
  REQUIRE(c.right == 4);
}

TEST_CASE("Chulkov specialization", "[verify]") {
  VerificationReport r =
      verify_chulkov(parse_polynomial("x^3 + y^3", kXY), action({3}, {{1}, {2}}), kXY);
  REQUIRE(check_named(r, "chulkov_inequality").status == CheckStatus::pass);
  REQUIRE(check_named(r, "chulkov_inequality").right == 2);

  VerificationReport q =
      verify_chulkov(parse_polynomial("x^4 + x^2*y^2 + y^4", kXY), action({2}, {{1}, {1}}), kXY);
  REQUIRE(q.computed.mu == 9);
  REQUIRE(check_named(q, "chulkov_inequality").status == CheckStatus::pass);
  REQUIRE(check_named(q, "chulkov_inequality").right == 1);

  REQUIRE_THROWS_AS(
      verify_chulkov(parse_polynomial("x^4 + y^4", kXY), action({4}, {{1}, {3}}), kXY),
      NotPrimeOrder);
}

TEST_CASE("Chulkov agrees with the main theorem on prime orders", "[verify]") {
  for (const char* text : {"x^3 + y^3", "x^5 + y^5"}) {
    Polynomial f = parse_polynomial(text, kXY);
    ActionSpec a = text[2] == '3' ? action({3}, {{1}, {2}}) : action({5}, {{1}, {4}});
    VerificationReport m = verify_main(f, a, kXY);
    VerificationReport c = verify_chulkov(f, a, kXY);
    const Check& mc = check_named(m, "main_inequality");
    const Check& cc = check_named(c, "chulkov_inequality");
    REQUIRE(mc.status == cc.status);
    REQUIRE(mc.left == cc.left);
    REQUIRE(mc.right == cc.right);
  }
}

TEST_CASE("doubling checks on the one-variable cubic", "[verify]") {
  VerificationReport r = verify_doubling(parse_polynomial("x^3", kX), action({3}, {{1}}), kX);
  REQUIRE(r.computed.mu == 2);
  REQUIRE(r.computed.mu_doubled == 4);
  REQUIRE(r.computed.nu_doubled == 2);
  REQUIRE(check_named(r, "doubling_square").status == CheckStatus::pass);
  REQUIRE(check_named(r, "tensor_basis").status == CheckStatus::pass);
  REQUIRE(check_named(r, "nu_doubled_lower_bound").status == CheckStatus::pass);
  const Check& w = check_named(r, "diagonal_invariant_witness");
  REQUIRE(w.status == CheckStatus::pass);
  REQUIRE(w.left == 2);
}

TEST_CASE("doubling checks on a Morse point with trivial group", "[verify]") {
  ActionSpec triv;
  triv.group = AbelianGroup();
  triv.chars = {Character::trivial(triv.group), Character::trivial(triv.group)};
  VerificationReport r = verify_doubling(parse_polynomial("x^2 + y^2", kXY), triv, kXY);
  REQUIRE(r.computed.mu_doubled == 1);
  REQUIRE(r.computed.nu_doubled == 1);
  REQUIRE(!r.any_failed());
}

TEST_CASE("doubling checks on the cubic cone", "[verify]") {
  VerificationReport r =
      verify_doubling(parse_polynomial("x^3 + y^3", kXY), action({3}, {{1}, {2}}), kXY);
  REQUIRE(r.computed.mu_doubled == 16);
  REQUIRE(*r.computed.nu_doubled >= 4);
  REQUIRE(!r.any_failed());
}

TEST_CASE("doubling cap raises an explicit error", "[verify]") {
  VerifyOptions opts;
  opts.doubling_mu_cap = 3;
  REQUIRE_THROWS_AS(
      verify_doubling(parse_polynomial("x^3 + y^3", kXY), action({3}, {{1}, {2}}), kXY, opts),
      DoublingCapExceeded);
}

TEST_CASE("Roberts inequality is tight on the doubled cubic", "[verify]") {
  DoubledGerm dg = double_germ(parse_polynomial("x^3", kX));
  DoubledAction da = double_action(action({3}, {{1}}));
  VerificationReport r =
      verify_roberts(dg.doubled, da.doubled, doubled_variable_names(kX));
  REQUIRE(r.hypotheses.real);
  REQUIRE(r.hypotheses.fixed_point_free);
  const Check& c = check_named(r, "roberts_inequality");
  REQUIRE(c.status == CheckStatus::pass);
  REQUIRE(c.left == 4);
  REQUIRE(c.right == 4);  // exactly tight
}

TEST_CASE("Roberts skips without its hypotheses", "[verify]") {
  // fixed points outside the origin: chi_y trivial in the base
  DoubledGerm dg = double_germ(parse_polynomial("x^3 + y^2", kXY));
  DoubledAction da = double_action(action({3}, {{1}, {0}}));
  VerificationReport r = verify_roberts(dg.doubled, da.doubled, doubled_variable_names(kXY));
  const Check& c = check_named(r, "roberts_inequality");
  REQUIRE(c.status == CheckStatus::skipped);
  REQUIRE(c.skip_reason == "fixed_point_free");

  // an undoubled odd-dimensional pair is not real
  VerificationReport odd =
      verify_roberts(parse_polynomial("x^3", kX), action({3}, {{1}}), kX);
  REQUIRE(check_named(odd, "roberts_inequality").skip_reason == "real");
}

TEST_CASE("quadratic step mechanizes the final derivation", "[verify]") {
  VerificationReport r = verify_quadratic_step(parse_polynomial("x^3 + y^3", kXY),
                                               action({3}, {{1}, {2}}), kXY);
  const Check& q = check_named(r, "quadratic_inequality");
  REQUIRE(q.status == CheckStatus::pass);
  REQUIRE(q.left == 16);
  REQUIRE(q.right == 10);
  const Check& imp = check_named(r, "quadratic_implication");
  REQUIRE(imp.status == CheckStatus::pass);
  REQUIRE(imp.left == 4);
  REQUIRE(imp.right == 2);

  // the mu = 1 branch of the implication
  REQUIRE(relation_holds(Relation::one_or_ge, 1, 99));
  REQUIRE(!relation_holds(Relation::one_or_ge, 2, 99));

  VerificationReport big = verify_quadratic_step(parse_polynomial("x^5 + y^5", kXY),
                                                 action({5}, {{1}, {4}}), kXY);
  REQUIRE(check_named(big, "quadratic_inequality").left == 256);
  REQUIRE(check_named(big, "quadratic_inequality").right == 76);
}

TEST_CASE("reduction to the fixed-point-free part", "[verify]") {
  Polynomial f = parse_polynomial("x^3 + y^3 + z^4", kXYZ);
  ActionSpec a = action({3}, {{1}, {2}, {0}});
  VerificationReport r = reduce_fixed(f, a, kXYZ);
  REQUIRE(r.computed.mu == 12);
  const Check& ineq = check_named(r, "reduction_inequality");
  REQUIRE(ineq.status == CheckStatus::pass);
  REQUIRE(ineq.left == 12);
  REQUIRE(ineq.right == 4);
  const Check& eq = check_named(r, "reduction_equality");
  REQUIRE(eq.status == CheckStatus::pass);
  REQUIRE(eq.left == 4);
  REQUIRE(eq.right == 4);
}

TEST_CASE("reduction errors and skips", "[verify]") {
  REQUIRE_THROWS_AS(
      reduce_fixed(parse_polynomial("x^3 + y^3", kXY), action({3}, {{1}, {2}}), kXY),
      NoFixedCharacters);

  // restriction to the non-fixed subspace is the zero germ: equality skipped
  Polynomial f = parse_polynomial("x^3*y + y^3", kXY);
  VerificationReport r = reduce_fixed(f, action({3}, {{1}, {0}}), kXY);
  REQUIRE(check_named(r, "reduction_inequality").status == CheckStatus::pass);
  const Check& eq = check_named(r, "reduction_equality");
  REQUIRE(eq.status == CheckStatus::skipped);
  REQUIRE(eq.skip_reason == "restriction_not_isolated");

  // a quadratic term blocks the theorem's hypotheses
  VerificationReport q =
      reduce_fixed(parse_polynomial("x^2 + y^2", kXY), action({2}, {{1}, {0}}), kXY);
  REQUIRE(check_named(q, "reduction_inequality").skip_reason == "zero_2jet");
  REQUIRE(check_named(q, "reduction_equality").skip_reason == "zero_2jet");
}

TEST_CASE("reports are recomputable and skips name one flag", "[verify]") {
  const CorpusRunResult res = run_corpus_verification();
  REQUIRE(res.ok());
  REQUIRE(res.checks_passed > 100);
  const std::set<std::string> flags = {"invariant",        "zero_2jet",
                                       "isolated",         "nontrivial_action",
                                       "fixed_point_free", "real",
                                       "restriction_not_isolated", "reduced_germ_not_isolated"};
  for (const CorpusReportLine& line : res.lines)
    for (const Check& c : line.report.checks) {
      if (c.status == CheckStatus::skipped) {
        REQUIRE(flags.count(c.skip_reason) == 1);
        REQUIRE(!c.left.has_value());
      } else {
        REQUIRE(c.left.has_value());
        REQUIRE(c.right.has_value());
        REQUIRE((c.status == CheckStatus::pass) == relation_holds(c.relation, *c.left, *c.right));
      }
    }
}

TEST_CASE("exhaustive sweep over the cubic action", "[verify]") {
  SweepConfig cfg;
  cfg.vars = kXY;
  cfg.action = action({3}, {{1}, {2}});
  cfg.dmax = 5;
  cfg.mode = SweepMode::exhaustive;
  SweepSummary s = enumerate_and_verify(cfg);
  REQUIRE(s.pool_size == 5);
  REQUIRE(s.tested + s.skipped_non_isolated + s.bound_exceeded == 31);
  REQUIRE(s.violations.empty());
  REQUIRE(s.passed == s.tested);
  REQUIRE(s.l_tau == 3);
  REQUIRE(s.min_slack.has_value());
  REQUIRE(*s.min_slack >= 0);
}

TEST_CASE("sweep over Z2xZ2 is trivially satisfied when isolated", "[verify]") {
  SweepConfig cfg;
  cfg.vars = kXY;
  cfg.action = action({2, 2}, {{1, 0}, {0, 1}});
  cfg.dmax = 5;
  SweepSummary s = enumerate_and_verify(cfg);
  REQUIRE(s.l_tau == 2);
  REQUIRE(s.violations.empty());
  REQUIRE(s.passed == s.tested);
}

TEST_CASE("randomized sweeps are reproducible", "[verify]") {
  SweepConfig cfg;
  cfg.vars = kXY;
  cfg.action = action({4}, {{1}, {2}});
  cfg.dmax = 6;
  cfg.mode = SweepMode::randomized;
  cfg.random_count = 60;
  cfg.seed = 20240901;
  SweepSummary a = enumerate_and_verify(cfg);
  SweepSummary b = enumerate_and_verify(cfg);
  REQUIRE(a.tested == b.tested);
  REQUIRE(a.passed == b.passed);
  REQUIRE(a.skipped_non_isolated == b.skipped_non_isolated);
  REQUIRE(a.min_slack == b.min_slack);
  REQUIRE(a.tight_count == b.tight_count);
  REQUIRE(a.violations.empty());
  cfg.seed = 7;
  SweepSummary c = enumerate_and_verify(cfg);
  REQUIRE(c.violations.empty());
}

TEST_CASE("sweep caps and trivial actions are rejected", "[verify]") {
  SweepConfig cfg;
  cfg.vars = kXY;
  cfg.action = action({3}, {{0}, {0}});
  REQUIRE_THROWS_AS(enumerate_and_verify(cfg), TrivialAction);

  cfg.action = action({3}, {{1}, {2}});
  cfg.dmax = 6;
  cfg.max_germs = 10;
  REQUIRE_THROWS_AS(enumerate_and_verify(cfg), CapExceeded);

  SweepConfig big;
  big.vars = {"x", "y", "z", "w"};
  big.action = action({3}, {{1}, {2}, {1}, {2}});
  REQUIRE_THROWS_AS(enumerate_and_verify(big), CapExceeded);
}
