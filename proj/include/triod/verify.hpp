#pragma once

// Theorem suite over exhaustively enumerated pattern corpora.

#include "triod/conjugacy.hpp"
#include "triod/loop_graph.hpp"
#include "triod/plinear.hpp"
#include "triod/rotation_theory.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace triod {

enum class Outcome { Pass, Vacuous, Fail, Inconclusive };

struct CheckResult {
  Outcome outcome = Outcome::Pass;
  std::string detail;

  static CheckResult pass() { return {Outcome::Pass, {}}; }
  static CheckResult vacuous() { return {Outcome::Vacuous, {}}; }
  static CheckResult fail(std::string why) { return {Outcome::Fail, std::move(why)}; }
  static CheckResult inconclusive(std::string why) { return {Outcome::Inconclusive, std::move(why)}; }
};

// Per-pattern data shared by all checks, computed on first use.
class CheckContext {
 public:
  CheckContext(Pattern pattern, int twist_oracle_multiplier);

  const Pattern& pattern() const { return pattern_; }
  int period() const { return pattern_.period(); }
  int twist_oracle_multiplier() const { return multiplier_; }

  const PLinearMap& map();
  const OrientedGraph& graph();
  bool fixes_only_hub();
  bool regular_by_orbits();
  bool mixed_two_loop();
  // Regular, with the hub as the only fixed point.
  bool admissible_regular();
  bool orientable();
  // Canonical ordering when available, the pattern itself otherwise.
  const Pattern& oriented();
  const PLinearMap& oriented_map();
  const OrientedGraph& oriented_graph();
  bool twist();
  Rational rho();
  int modality();
  // Code table of the oriented pattern; nullopt at rho = 1/3.
  const std::optional<CodeTable>& table();
  const std::vector<Color>& colors();
  const std::vector<State>& states();
  const std::vector<Country>& countries();
  // Conjugacy of a twist pattern; throws what build_conjugacy throws.
  const ConjugacyReport& conjugacy();

 private:
  Pattern pattern_;
  int multiplier_;
  std::unique_ptr<PLinearMap> map_;
  std::optional<OrientedGraph> graph_;
  std::optional<bool> fixes_only_hub_;
  std::optional<bool> regular_;
  std::optional<bool> mixed_;
  std::optional<bool> orientable_;
  std::optional<Pattern> oriented_;
  std::unique_ptr<PLinearMap> oriented_map_;
  std::optional<OrientedGraph> oriented_graph_;
  std::optional<bool> twist_;
  std::optional<Rational> rho_;
  std::optional<int> modality_;
  std::optional<std::optional<CodeTable>> table_;
  std::optional<std::vector<Color>> colors_;
  std::optional<std::vector<State>> states_;
  std::optional<std::vector<Country>> countries_;
  std::optional<ConjugacyReport> conjugacy_;
};

struct CheckDef {
  std::string name;
  std::string description;
  std::function<CheckResult(CheckContext&)> run;
};

// Built-in checks in report order.
const std::vector<CheckDef>& registered_checks();
const CheckDef* find_check(const std::string& name);

struct SuiteConfig {
  int min_period = 1;
  int max_period = 6;
  std::vector<std::string> checks;     // empty selects every registered check
  std::vector<CheckDef> extra_checks;  // run after the selected ones
  int twist_oracle_multiplier = 3;
  int jobs = 1;
  int max_dumps = 5;                   // counterexamples kept per check
};

struct Counterexample {
  Pattern pattern;
  std::string detail;
};

struct CheckTally {
  std::string name;
  std::string description;
  long examined = 0;
  long passes = 0;
  long vacuous = 0;
  long failures = 0;
  long inconclusive = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<Counterexample> inconclusive_examples;

  void add(const Pattern& p, const CheckResult& r, int max_dumps);
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<std::pair<int, long>> corpus;  // period, pattern count
  std::vector<CheckTally> checks;
  double seconds = 0;

  long failures() const;
  const CheckTally* tally(const std::string& name) const;
};

// Errors: std::invalid_argument for unknown check names or a bad period range.
SuiteReport run_suite(const SuiteConfig& cfg);

// Timing and parallelism are omitted when deterministic is set.
std::string report_json(const SuiteReport& report, bool deterministic);

}  // namespace triod
