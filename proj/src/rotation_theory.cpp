#include "triod/rotation_theory.hpp"

#include "triod/plinear.hpp"

#include <algorithm>

namespace triod {

std::vector<Color> point_colors(const Pattern& p) {
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(p.period()));
  for (int t = 0; t < p.period(); ++t) colors.push_back(color_of_shift(p.at(t).branch.steps_to(p.at(p.next(t)).branch)));
  return colors;
}

ColorCensus color_census(const Pattern& p) {
  ColorCensus c;
  for (Color col : point_colors(p)) {
    if (col == Color::Green) ++c.green;
    else if (col == Color::Black) ++c.black;
    else ++c.red;
  }
  return c;
}

Rational rotation_number(const Pattern& p) { return fundamental_loop(p).rotation_number(); }

CodeTable code_table(const Pattern& p, int base) {
  require_valid(p);
  CodeTable table;
  table.base = base;
  table.rho = rotation_number(p);
  if (table.rho == make_rational(1, 3)) throw TriodError(ErrorCode::RotationOneThird, "code function needs rho != 1/3");
  int n = p.period();
  table.colors = point_colors(p);
  table.code.assign(static_cast<std::size_t>(n), Rational(0));
  table.additive.assign(static_cast<std::size_t>(n), Rational(0));
  table.partial_sums.assign(1, Rational(0));
  int x = base;
  Rational t = 0;
  for (int k = 1; k <= n; ++k) {
    t += make_rational(static_cast<int>(table.colors[static_cast<std::size_t>(x)]), 3);
    table.partial_sums.push_back(t);
    x = p.next(x);
    if (k < n) {
      table.code[static_cast<std::size_t>(x)] = Rational(k) * table.rho - Rational(floor_of(t));
      table.additive[static_cast<std::size_t>(x)] = Rational(k) * table.rho - t;
    }
  }
  return table;
}

const char* monotonicity_name(CodeMonotonicity m) {
  switch (m) {
    case CodeMonotonicity::Decreasing: return "Decreasing";
    case CodeMonotonicity::NonDecreasing: return "NonDecreasing";
    case CodeMonotonicity::StrictlyIncreasing: return "StrictlyIncreasing";
  }
  return "?";
}

CodeMonotonicity code_monotonicity(const Pattern& p, const CodeTable& table) {
  bool low = table.rho <= make_rational(1, 3);
  bool strict = true;
  for (int b = 0; b < 3; ++b) {
    auto ts = p.times_on(BranchId(b));
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        // ts[j] > ts[i] in the tree order.
        const Rational& outer = table[ts[j]];
        const Rational& inner = table[ts[i]];
        if (low ? outer > inner : outer < inner) return CodeMonotonicity::Decreasing;
      }
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
      if (table[ts[i]] == table[ts[i + 1]]) strict = false;
  }
  return strict ? CodeMonotonicity::StrictlyIncreasing : CodeMonotonicity::NonDecreasing;
}

bool is_order_preserving(const Pattern& p) {
  require_valid(p);
  int n = p.period();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.at(x).branch != p.at(y).branch || p.at(x).rank <= p.at(y).rank) continue;
      const PointSpec& fx = p.at(p.next(x));
      const PointSpec& fy = p.at(p.next(y));
      if (fx.branch == fy.branch && fx.rank < fy.rank) return false;
    }
  return true;
}

bool is_primitive_three_cycle(const Pattern& p) {
  if (p.period() != 3) return false;
  auto k = p.branch_counts();
  if (k[0] != 1 || k[1] != 1 || k[2] != 1) return false;
  auto c = color_census(p);
  return c.black == 3;
}

bool twist_by_code(const Pattern& oriented) {
  if (rotation_number(oriented) == make_rational(1, 3)) return is_primitive_three_cycle(oriented);
  CodeTable table = code_table(oriented, 0);
  return code_monotonicity(oriented, table) == CodeMonotonicity::StrictlyIncreasing;
}

bool is_triod_twist(const Pattern& p) {
  require_valid(p);
  if (!fixes_only_hub(p) || !is_regular(p)) return false;
  Pattern oriented;
  if (!try_orient(p, oriented)) oriented = p;
  return twist_by_code(oriented);
}

namespace {

Rational spread_of(const std::vector<Rational>& values, const std::vector<int>& subset) {
  if (subset.empty()) throw TriodError(ErrorCode::EmptySubset, "chi of an empty set");
  Rational lo = values[static_cast<std::size_t>(subset.front())], hi = lo;
  for (int t : subset) {
    const Rational& v = values[static_cast<std::size_t>(t)];
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

std::vector<int> all_times(const CodeTable& table) {
  std::vector<int> all(table.code.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return all;
}

}  // namespace

Rational chi(const CodeTable& table, const std::vector<int>& subset) { return spread_of(table.code, subset); }
Rational chi(const CodeTable& table) { return chi(table, all_times(table)); }

Rational chi_unfloored(const CodeTable& table, const std::vector<int>& subset) {
  return spread_of(table.additive, subset);
}
Rational chi_unfloored(const CodeTable& table) { return chi_unfloored(table, all_times(table)); }

namespace {

std::vector<State> states_from_colors(const Pattern& p, const std::vector<Color>& colors) {
  std::vector<State> out;
  for (int b = 0; b < 3; ++b) {
    BranchId bid(b);
    for (int t : p.times_on(bid)) {
      Color c = colors[static_cast<std::size_t>(t)];
      if (!out.empty() && out.back().branch == bid && out.back().color == c) {
        out.back().times.push_back(t);
      } else {
        out.push_back(State{c, bid, {t}});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<State> states(const Pattern& p, const CodeTable& table) { return states_from_colors(p, table.colors); }
std::vector<State> states(const Pattern& p) { return states_from_colors(p, point_colors(p)); }

std::vector<int> Country::times() const {
  std::vector<int> out;
  for (const auto& s : states) out.insert(out.end(), s.times.begin(), s.times.end());
  return out;
}

std::vector<Country> countries(const Pattern& p) {
  std::vector<Country> out;
  std::vector<State> greens;
  for (auto& s : states(p))
    if (s.color == Color::Green) greens.push_back(std::move(s));
  // greens is grouped by branch and ordered outward within a branch.
  for (std::size_t i = 0; i < greens.size(); ++i) {
    const State& s = greens[i];
    bool joins = false;
    if (i > 0 && greens[i - 1].branch == s.branch) {
      // s (outer) and greens[i-1] (inner) are adjacent green states.
      const State& inner = greens[i - 1];
      for (int a : s.times)
        for (int b : inner.times)
          if (p.at(b).rank >= p.at(p.next(a)).rank && p.at(p.next(a)).branch == s.branch) joins = true;
    }
    if (joins) out.back().states.push_back(s);
    else out.push_back(Country{s.branch, {s}});
  }
  return out;
}

std::vector<Country> countries(const Pattern& p, const CodeTable&) { return countries(p); }

bool country_above(const Pattern& p, const Country& x, const Country& y) {
  if (x.branch != y.branch) return false;
  return p.at(x.inner()).rank > p.at(y.outer()).rank;
}

int phi_anchor(const Pattern& p, const Country& c) { return p.next(c.inner()); }

std::optional<std::size_t> phi(const Pattern& p, const std::vector<Country>& all, std::size_t index, PhiKind which) {
  Rational rho = rotation_number(p);
  if (!(rho < make_rational(1, 3))) throw TriodError(ErrorCode::WrongRegime, "phi needs rho < 1/3");
  auto colors = point_colors(p);
  auto color = [&](int t) { return colors[static_cast<std::size_t>(t)]; };
  int anchor = phi_anchor(p, all[index]);
  if (color(anchor) != Color::Black) return std::nullopt;
  int landing = p.next(anchor);
  if (which == PhiKind::Two) {
    if (color(landing) != Color::Black) return std::nullopt;
    landing = p.next(landing);
  }
  BranchId b = p.at(landing).branch;
  if (color(landing) == Color::Green) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto ts = all[i].times();
      if (std::find(ts.begin(), ts.end(), landing) != ts.end()) return i;
    }
    return std::nullopt;
  }
  if (color(landing) != Color::Black) return std::nullopt;
  // Nearest green country lying entirely above the landing point.
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].branch != b || p.at(all[i].inner()).rank <= p.at(landing).rank) continue;
    if (!best || p.at(all[i].inner()).rank < p.at(all[*best].inner()).rank) best = i;
  }
  return best;
}

void trains(const Pattern& p, TrainKind kind, int max_len,
            const std::function<bool(const std::vector<int>&)>& visit) {
  auto colors = point_colors(p);
  int n = p.period();
  auto allowed = [&](int t) {
    Color c = colors[static_cast<std::size_t>(t)];
    switch (kind) {
      case TrainKind::Black: return c == Color::Black;
      case TrainKind::Green: return c == Color::Green;
      case TrainKind::Mixed: return c == Color::Black || c == Color::Green;
      case TrainKind::Any: return true;
    }
    return false;
  };
  auto is_mixed = [&](const std::vector<int>& seq) {
    bool g = false, b = false;
    for (int t : seq) {
      g |= colors[static_cast<std::size_t>(t)] == Color::Green;
      b |= colors[static_cast<std::size_t>(t)] == Color::Black;
    }
    return g && b;
  };
  std::vector<int> seq;
  bool stopped = false;
  auto rec = [&](auto&& self) -> void {
    if (stopped) return;
    if (seq.size() >= 2 && (kind != TrainKind::Mixed || is_mixed(seq))) {
      if (!visit(seq)) {
        stopped = true;
        return;
      }
    }
    if (static_cast<int>(seq.size()) > max_len) return;
    const PointSpec& img = p.at(p.next(seq.back()));
    for (int y = 0; y < n; ++y) {
      if (p.at(y).branch != img.branch || p.at(y).rank < img.rank || !allowed(y)) continue;
      seq.push_back(y);
      self(self);
      seq.pop_back();
      if (stopped) return;
    }
  };
  for (int x = 0; x < n && !stopped; ++x) {
    if (!allowed(x)) continue;
    seq.assign(1, x);
    rec(rec);
  }
}

}  // namespace triod
