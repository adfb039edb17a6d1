#include "triod/verify.hpp"

#include <doctest.h>

using namespace triod;

TEST_CASE("suite passes at small periods") {
  SuiteConfig cfg;
  cfg.max_period = 4;
  auto report = run_suite(cfg);
  CHECK(report.failures() == 0);
  CHECK(report.corpus.size() == 4);
  CHECK(report.checks.size() == registered_checks().size());
}

TEST_CASE("a corrupted check is caught with a counterexample") {
  SuiteConfig cfg;
  cfg.max_period = 4;
  cfg.checks = {"twist_color_census"};
  cfg.extra_checks.push_back({"corrupted_chi_bound", "claims chi(P) < 1/2 for twist cycles", [](CheckContext& ctx) {
                                if (!ctx.twist() || !ctx.table()) return CheckResult::vacuous();
                                return chi(*ctx.table()) < make_rational(1, 2) ? CheckResult::pass()
                                                                               : CheckResult::fail("chi too large");
                              }});
  auto report = run_suite(cfg);
  const CheckTally* bad = report.tally("corrupted_chi_bound");
  REQUIRE(bad != nullptr);
  CHECK(bad->failures > 0);
  REQUIRE_FALSE(bad->counterexamples.empty());
  CHECK(bad->counterexamples.front().detail == "chi too large");
  CHECK(report.failures() == bad->failures);
}

TEST_CASE("exceptions inside a check count as failures") {
  SuiteConfig cfg;
  cfg.max_period = 2;
  cfg.checks = {"markov_soundness"};
  cfg.extra_checks.push_back({"throws", "always throws", [](CheckContext&) -> CheckResult {
                                throw TriodError(ErrorCode::Overflow, "synthetic");
                              }});
  auto report = run_suite(cfg);
  CHECK(report.tally("throws")->failures == 9);
}

TEST_CASE("configuration errors") {
  SuiteConfig cfg;
  cfg.checks = {"bogus"};
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  SuiteConfig range;
  range.min_period = 3;
  range.max_period = 2;
  CHECK_THROWS_AS(run_suite(range), std::invalid_argument);
}

TEST_CASE("reports do not depend on the job count") {
  SuiteConfig one;
  one.max_period = 5;
  SuiteConfig four = one;
  four.jobs = 4;
  CHECK(report_json(run_suite(one), true) == report_json(run_suite(four), true));
}
