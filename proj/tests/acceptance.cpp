// Acceptance criteria 1-8: one PASS/FAIL line each; exit status 1 if any fails.
// Usage: acceptance PATH_TO_CLI

#include "triod/classification.hpp"
#include "triod/conjugacy.hpp"
#include "triod/sharkovsky.hpp"
#include "triod/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <unistd.h>

using namespace triod;

namespace {

int failed = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!ok) ++failed;
}

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

SuiteReport suite(int max_period, std::vector<std::string> checks) {
  SuiteConfig cfg;
  cfg.max_period = max_period;
  cfg.checks = std::move(checks);
  cfg.jobs = jobs();
  return run_suite(cfg);
}

// "name pass/vacuous/fail/inconclusive" for each check; ok when none fails
// and, if required, each has a non-vacuous pass.
bool summarize(const SuiteReport& r, bool need_passes, std::string& out) {
  bool ok = true;
  for (const auto& t : r.checks) {
    if (!out.empty()) out += "; ";
    out += t.name + " " + std::to_string(t.passes) + "/" + std::to_string(t.vacuous) + "/" +
           std::to_string(t.failures) + "/" + std::to_string(t.inconclusive);
    if (t.failures > 0 || (need_passes && t.passes == 0)) ok = false;
    for (const auto& c : t.counterexamples) out += " [" + serialize(c.pattern) + ": " + c.detail + "]";
  }
  return ok;
}

void criterion1() {
  Pattern e3 = primitive_three_cycle();
  auto c = classify(e3);
  auto conj = build_conjugacy(e3);
  bool ok = c.rho == make_rational(1, 3) && c.rp == RotationPair{1, 3} && c.census.black == 3 &&
            c.census.green == 0 && c.census.red == 0 && c.twist && c.modality == 1 &&
            conj.psi == std::vector<Rational>{0, make_rational(1, 3), make_rational(2, 3)};
  report(1, ok, to_json_line(c) + " " + conjugacy_json(conj));
}

void criterion2() {
  auto r = suite(6, {});
  std::string detail;
  summarize(r, false, detail);
  bool ok = r.failures() == 0 && r.seconds <= 300;
  std::ostringstream s;
  s << r.failures() << " failures over " << r.checks.size() << " checks in " << r.seconds << " s";
  report(2, ok, ok ? s.str() : s.str() + " | " + detail);
}

void criterion3() {
  auto r = suite(7, {"total_oscillation", "green_state_oscillation", "red_state_oscillation", "country_oscillation"});
  std::string detail;
  bool ok = summarize(r, true, detail);
  report(3, ok, "pass/vacuous/fail/inconclusive up to period 7: " + detail);
}

void criterion4() {
  auto r = suite(7, {"conjugacy_equivariance", "conjugacy_bijective", "conjugacy_lap_bound"});
  std::string detail;
  bool ok = summarize(r, true, detail);
  report(4, ok, "pass/vacuous/fail/inconclusive up to period 7: " + detail);
}

void criterion5() {
  std::string detail;
  auto a = suite(4, {"reach_rule_oracle", "orbit_grid_oracle"});
  bool ok = summarize(a, true, detail);
  auto c = suite(6, {"twist_oracle"});
  ok = summarize(c, true, detail) && ok;
  report(5, ok, detail);
}

void criterion6() {
  auto r = suite(6, {"regularity_cross_check"});
  std::string detail;
  bool ok = summarize(r, true, detail);
  report(6, ok, detail);
}

// 3, 5, 7, ..., 2*3, 2*5, ..., 4*3, ..., 2^inf, ..., 8, 4, 2, 1 for values <= limit.
std::vector<SharkovskyKey> displayed_chain(long limit) {
  std::vector<SharkovskyKey> chain;
  for (long power = 1; power <= limit; power *= 2)
    for (long odd = 3; odd * power <= limit; odd += 2) chain.emplace_back(odd * power);
  chain.push_back(SharkovskyKey::two_infinity());
  long top = 1;
  while (top * 2 <= limit) top *= 2;
  for (long power = top; power >= 1; power /= 2) chain.emplace_back(power);
  return chain;
}

void criterion7() {
  auto chain = displayed_chain(100);
  bool chain_ok = chain.size() == 101;
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j) {
      auto expected = j <=> i;
      if (sharkovsky_compare(chain[i], chain[j]) != expected) chain_ok = false;
    }
  auto r = suite(5, {"mrp_hull"});
  std::string detail;
  bool hull_ok = summarize(r, true, detail);
  report(7, chain_ok && hull_ok,
         std::string("chain of ") + std::to_string(chain.size()) + " keys " + (chain_ok ? "matches" : "differs") +
             "; " + detail);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion8(const std::string& cli) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("triod_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"enumerate", "enumerate --period 6 --deterministic"},
      {"classify", "classify --max-period 6 --format csv --deterministic"},
      {"verify", "verify --max-period 5 --deterministic"},
  };
  bool ok = true;
  std::string detail;
  for (const auto& [name, args] : runs) {
    std::string outputs[2];
    for (int k = 0; k < 2; ++k) {
      fs::path out = dir / (name + std::to_string(k));
      std::string extra = (k == 1 && name != "enumerate") ? " --jobs 4" : "";
      std::string cmd = "\"" + cli + "\" " + args + extra + " --out \"" + out.string() + "\"";
      if (std::system(cmd.c_str()) != 0) ok = false;
      outputs[k] = slurp(out);
    }
    bool same = !outputs[0].empty() && outputs[0] == outputs[1];
    ok = ok && same;
    detail += name + (same ? " identical (" + std::to_string(outputs[0].size()) + " bytes); " : " differs; ");
  }
  fs::remove_all(dir);
  report(8, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance PATH_TO_CLI\n";
    return 2;
  }
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(argv[1]);
  return failed == 0 ? 0 : 1;
}
