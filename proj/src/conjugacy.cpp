#include "triod/conjugacy.hpp"

#include "triod/plinear.hpp"
#include "triod/rotation_theory.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace triod {

Rational RotationOrbit::point(long j) const { return frac_of(make_rational(j * p, q)); }

Rational RotationOrbit::step(const Rational& x) const { return frac_of(x + make_rational(p, q)); }

std::vector<Rational> RotationOrbit::points() const {
  std::vector<Rational> out;
  for (long j = 0; j < q; ++j) out.push_back(point(j));
  return out;
}

namespace {

// Splits a sequence into monotone runs; `breaks(i)` forces a new run
// between entries i-1 and i.
template <class Breaks>
int count_runs(const std::vector<Rational>& values, const Breaks& breaks) {
  if (values.empty()) return 0;
  int runs = 1;
  int direction = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    int d = values[i] > values[i - 1] ? 1 : (values[i] < values[i - 1] ? -1 : 0);
    if (breaks(i) || (direction != 0 && d != 0 && d != direction)) {
      ++runs;
      direction = breaks(i) ? 0 : d;
      continue;
    }
    if (direction == 0) direction = d;
  }
  return runs;
}

struct LapCounts {
  int discrete = 0;
  int continuous = 0;
};

LapCounts lap_counts(const ConjugacyReport& r) {
  LapCounts c;
  const Pattern& p = r.pattern;
  for (int b = 0; b < 3; ++b) {
    auto ts = p.times_on(BranchId(b));
    if (ts.empty()) continue;
    std::vector<Rational> psi;
    std::vector<mpz_class> level;
    for (int t : ts) {
      psi.push_back(r.psi[static_cast<std::size_t>(t)]);
      level.push_back(r.code.empty() ? mpz_class(0) : floor_of(r.code[static_cast<std::size_t>(t)]));
    }
    c.discrete += count_runs(psi, [&](std::size_t i) { return level[i] != level[i - 1]; });
    c.continuous += count_runs(psi, [](std::size_t) { return false; });
  }
  return c;
}

}  // namespace

ConjugacyReport build_conjugacy(const Pattern& input) {
  require_valid(input);
  if (!is_triod_twist(input)) throw TriodError(ErrorCode::NotTriodTwist, to_string(input));
  ConjugacyReport r;
  if (!try_orient(input, r.pattern)) r.pattern = input;
  const Pattern& p = r.pattern;
  int n = p.period();
  auto rp = fundamental_loop(p).rotation_pair();
  if (std::gcd(rp.displacement, rp.length) != 1)
    throw TriodError(ErrorCode::NotCoprime, "rotation pair (" + std::to_string(rp.displacement) + "," +
                                                std::to_string(rp.length) + ") is not coprime");
  r.rho = rp.number();
  r.orbit = RotationOrbit{static_cast<long>(rp.displacement), static_cast<long>(rp.length)};
  r.psi.assign(static_cast<std::size_t>(n), Rational(0));
  if (is_primitive_three_cycle(p)) {
    r.base = 0;
    for (int i = 0; i < n; ++i) r.psi[static_cast<std::size_t>(i)] = make_rational(i, 3);
  } else {
    CodeTable table = code_table(p, 0);
    r.base = 0;
    for (int t = 1; t < n; ++t) {
      const Rational& c = table[t];
      const Rational& best = table[r.base];
      if (c < best) r.base = t;
    }
    Rational shift = table[r.base];
    for (int t = 0; t < n; ++t) r.code.push_back(table[t] - shift);
    for (int t = 0; t < n; ++t) r.psi[static_cast<std::size_t>(t)] = frac_of(r.code[static_cast<std::size_t>(t)]);
  }
  r.equivariant = true;
  for (int t = 0; t < n; ++t)
    if (r.psi[static_cast<std::size_t>(p.next(t))] != r.orbit.step(r.psi[static_cast<std::size_t>(t)]))
      r.equivariant = false;
  if (!r.equivariant) throw TriodError(ErrorCode::EquivarianceFailure, to_string(input));
  std::set<Rational> image(r.psi.begin(), r.psi.end());
  auto q = r.orbit.points();
  r.bijective = image.size() == static_cast<std::size_t>(n) && image == std::set<Rational>(q.begin(), q.end());
  auto laps = lap_counts(r);
  r.laps = laps.discrete;
  r.continuous_laps = laps.continuous;
  r.modality = modality(p);
  r.bound = r.modality + 3;
  return r;
}

int psi_laps(const ConjugacyReport& report, const Pattern&) {
  if (report.laps > report.bound)
    throw TriodError(ErrorCode::BoundViolated, std::to_string(report.laps) + " laps exceed modality + 3 = " +
                                                   std::to_string(report.bound));
  return report.laps;
}

std::string conjugacy_json(const ConjugacyReport& r) {
  nlohmann::ordered_json j;
  j["rho"] = to_string(r.rho);
  nlohmann::json psi = nlohmann::json::array();
  for (std::size_t t = 0; t < r.psi.size(); ++t) psi.push_back({static_cast<int>(t), to_string(r.psi[t])});
  j["psi"] = psi;
  j["laps"] = r.laps;
  j["bound"] = r.bound;
  return j.dump();
}

}  // namespace triod
