#include "triod/verify.hpp"

#include "triod/sharkovsky.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace triod {

CheckContext::CheckContext(Pattern pattern, int twist_oracle_multiplier)
    : pattern_(std::move(pattern)), multiplier_(twist_oracle_multiplier) {}

const PLinearMap& CheckContext::map() {
  if (!map_) map_ = std::make_unique<PLinearMap>(pattern_);
  return *map_;
}

const OrientedGraph& CheckContext::graph() {
  if (!graph_) graph_ = build_graph(pattern_);
  return *graph_;
}

bool CheckContext::fixes_only_hub() {
  if (!fixes_only_hub_) fixes_only_hub_ = triod::fixes_only_hub(map());
  return *fixes_only_hub_;
}

bool CheckContext::regular_by_orbits() {
  if (!regular_) regular_ = is_regular_by_orbits(map());
  return *regular_;
}

bool CheckContext::mixed_two_loop() {
  if (!mixed_) mixed_ = has_mixed_two_loop(graph());
  return *mixed_;
}

bool CheckContext::admissible_regular() { return regular_by_orbits() && fixes_only_hub(); }

bool CheckContext::orientable() {
  oriented();
  return *orientable_;
}

const Pattern& CheckContext::oriented() {
  if (!oriented_) {
    Pattern out;
    orientable_ = try_orient(pattern_, out);
    oriented_ = *orientable_ ? out : pattern_;
  }
  return *oriented_;
}

const PLinearMap& CheckContext::oriented_map() {
  if (!oriented_map_) oriented_map_ = std::make_unique<PLinearMap>(oriented());
  return *oriented_map_;
}

const OrientedGraph& CheckContext::oriented_graph() {
  if (!oriented_graph_) oriented_graph_ = build_graph(oriented());
  return *oriented_graph_;
}

bool CheckContext::twist() {
  if (!twist_) twist_ = admissible_regular() && twist_by_code(oriented());
  return *twist_;
}

Rational CheckContext::rho() {
  if (!rho_) rho_ = rotation_number(oriented());
  return *rho_;
}

int CheckContext::modality() {
  if (!modality_) modality_ = triod::modality(map());
  return *modality_;
}

const std::optional<CodeTable>& CheckContext::table() {
  if (!table_) {
    if (rho() == make_rational(1, 3)) table_.emplace(std::nullopt);
    else table_.emplace(code_table(oriented(), 0));
  }
  return *table_;
}

const std::vector<Color>& CheckContext::colors() {
  if (!colors_) colors_ = point_colors(oriented());
  return *colors_;
}

const std::vector<State>& CheckContext::states() {
  if (!states_) states_ = triod::states(oriented());
  return *states_;
}

const std::vector<Country>& CheckContext::countries() {
  if (!countries_) countries_ = triod::countries(oriented());
  return *countries_;
}

const ConjugacyReport& CheckContext::conjugacy() {
  if (!conjugacy_) conjugacy_ = build_conjugacy(pattern_);
  return *conjugacy_;
}

namespace {

using R = CheckResult;

std::string rs(const Rational& q) { return to_string(q); }
std::string pt(int t) { return "x" + std::to_string(t); }

Rational third(int k) { return make_rational(k, 3); }

std::string join_times(const std::vector<int>& ts) {
  std::string s = "{";
  for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? "," : "") + pt(ts[i]);
  return s + "}";
}

// ---------------------------------------------------------------- plinear

R markov_soundness(CheckContext& ctx) {
  const PLinearMap& f = ctx.map();
  MarkovGraph g = markov_graph(f);
  int n = f.piece_count();
  for (int i = 0; i < n; ++i) {
    Arc image = f.piece_image(i);
    for (int j = 0; j < n; ++j) {
      bool covers = image.contains(f.point_in_piece(j, 0)) && image.contains(f.point_in_piece(j, 1));
      if (covers != g.has_edge(i, j))
        return R::fail("piece " + std::to_string(i) + " image " + (covers ? "covers" : "misses") + " piece " +
                       std::to_string(j) + " but the edge is " + (covers ? "absent" : "present"));
    }
  }
  for (const auto& e : g.edges) {
    if (Rational(e.stretch) != f.piece_image(e.from).length())
      return R::fail("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " stretch " +
                     std::to_string(e.stretch) + " differs from image length " + rs(f.piece_image(e.from).length()));
    for (const Rational& v : {Rational(0), make_rational(1, 2), Rational(1)}) {
      Rational u = (Rational(e.offset) + Rational(e.sign) * v) / Rational(e.stretch);
      TriodPoint x = f.point_in_piece(e.from, u);
      if (!(f.evaluate(x) == f.point_in_piece(e.to, v)))
        return R::fail("inverse branch of edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                       " at v=" + rs(v) + " sends " + to_string(x) + " to " + to_string(f.evaluate(x)));
    }
  }
  return R::pass();
}

// Signed position of y along branch b: coord on b, minus the distance elsewhere.
Rational along(const TriodPoint& y, BranchId b) {
  if (y.is_hub()) return 0;
  return y.lies_on(b) ? y.coord() : Rational(-y.coord());
}

int sign_of(const Rational& q) { return sgn(q); }

// Every sign change of f^k(x) - x on the 1/64 grid must hold an enumerated
// orbit point, and every enumerated point must be isolated by a sign change
// once its cell is bisected far enough.
R orbit_grid_oracle(CheckContext& ctx) {
  if (ctx.period() > 4) return R::vacuous();
  constexpr int kGrid = 64;
  constexpr int kMaxOrbit = 3;
  constexpr int kMaxDepth = 24;
  const PLinearMap& f = ctx.map();
  auto orbits = periodic_orbits(f, kMaxOrbit);
  for (int k = 1; k <= kMaxOrbit; ++k) {
    std::vector<TriodPoint> pts;
    bool degenerate = false;
    for (const auto& o : orbits)
      if (k % o.period == 0) {
        pts.insert(pts.end(), o.points.begin(), o.points.end());
        degenerate = degenerate || o.degenerate;
      }
    for (int piece = 0; piece < f.piece_count(); ++piece) {
      const Piece& pc = f.pieces()[static_cast<std::size_t>(piece)];
      auto h = [&](const Rational& u) -> std::optional<Rational> {
        TriodPoint x = f.point_in_piece(piece, u);
        if (x.is_hub()) return std::nullopt;
        return along(f.iterate(x, k), pc.branch) - x.coord();
      };
      std::vector<Rational> us;
      for (const auto& x : pts) {
        if (!x.lies_on(pc.branch)) continue;
        Rational u = x.coord() - pc.index;
        if (u >= 0 && u <= 1) us.push_back(u);
      }
      auto listed = [&](const Rational& u) { return std::find(us.begin(), us.end(), u) != us.end(); };
      std::string problem;
      // Interior roots of (lo, hi) against the enumerated points strictly inside.
      auto resolve = [&](auto&& self, const Rational& lo, const Rational& hi, const std::optional<Rational>& hl,
                         const std::optional<Rational>& hh, std::vector<Rational> inside, int depth) -> bool {
        bool change = hl && hh && sign_of(*hl) * sign_of(*hh) < 0;
        bool flat = hl && hh && *hl == 0 && *hh == 0;
        if (flat && degenerate) return true;
        if (inside.empty()) {
          if (change) problem = "a root in (" + rs(lo) + "," + rs(hi) + ") with no enumerated orbit point";
          return !change;
        }
        if (change && inside.size() == 1) return true;
        if (depth == kMaxDepth) {
          problem = "orbit point at " + rs(inside.front()) + " not isolated by a sign change";
          return false;
        }
        Rational mid = (lo + hi) / 2;
        auto hm = h(mid);
        if (hm && *hm == 0 && !listed(mid) && !degenerate) {
          problem = "a root at " + rs(mid) + " with no enumerated orbit point";
          return false;
        }
        std::vector<Rational> left, right;
        for (const auto& u : inside) {
          if (u < mid) left.push_back(u);
          else if (u > mid) right.push_back(u);
          else if (!hm || *hm != 0) {
            problem = "orbit point at " + rs(u) + " where f^k(x) - x = " + (hm ? rs(*hm) : std::string("hub"));
            return false;
          }
        }
        return self(self, lo, mid, hl, hm, left, depth + 1) && self(self, mid, hi, hm, hh, right, depth + 1);
      };
      std::vector<std::optional<Rational>> node(kGrid + 1);
      for (int i = 0; i <= kGrid; ++i) node[static_cast<std::size_t>(i)] = h(make_rational(i, kGrid));
      for (int i = 0; i <= kGrid; ++i) {
        Rational u = make_rational(i, kGrid);
        const auto& v = node[static_cast<std::size_t>(i)];
        bool zero = v && *v == 0;
        if (listed(u) && !zero)
          return R::fail("period-" + std::to_string(k) + " point on grid node " + rs(u) + " of piece " +
                         std::to_string(piece) + " where f^k(x) - x = " + (v ? rs(*v) : std::string("hub")));
        if (zero && !listed(u) && !degenerate)
          return R::fail("grid node " + rs(u) + " of piece " + std::to_string(piece) + " is a root of f^" +
                         std::to_string(k) + "(x) - x with no enumerated orbit point");
      }
      for (int c = 0; c < kGrid; ++c) {
        Rational lo = make_rational(c, kGrid), hi = make_rational(c + 1, kGrid);
        std::vector<Rational> inside;
        for (const auto& u : us)
          if (lo < u && u < hi) inside.push_back(u);
        if (!resolve(resolve, lo, hi, node[static_cast<std::size_t>(c)], node[static_cast<std::size_t>(c + 1)], inside, 0))
          return R::fail("f^" + std::to_string(k) + " on piece " + std::to_string(piece) + ", grid cell " +
                         std::to_string(c) + ": " + problem);
      }
    }
  }
  return R::pass();
}

void closed_walks(const OrientedGraph& g, int max_len, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> walk;
  auto rec = [&](auto&& self) -> void {
    int v = walk.back();
    for (int w : g.successors(v)) {
      if (w == walk.front()) visit(walk);
      if (static_cast<int>(walk.size()) < max_len) {
        walk.push_back(w);
        self(self);
        walk.pop_back();
      }
    }
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    walk.assign(1, s);
    rec(rec);
  }
}

R loop_orbit_correspondence(CheckContext& ctx) {
  constexpr int kMaxLen = 4;
  const Pattern& p = ctx.pattern();
  const OrientedGraph& g = ctx.graph();
  const PLinearMap& f = ctx.map();
  std::map<std::vector<BranchId>, bool> realized;
  std::optional<std::vector<int>> missing;
  closed_walks(g, kMaxLen, [&](const std::vector<int>& walk) {
    if (missing) return;
    std::vector<BranchId> it;
    for (int t : walk) it.push_back(p.at(t).branch);
    auto found = realized.find(it);
    if (found == realized.end()) found = realized.emplace(it, !orbits_with_itinerary(f, it).empty()).first;
    if (!found->second) missing = walk;
  });
  if (missing) return R::fail("point loop " + join_times(*missing) + " has no periodic orbit following its branches");
  for (const auto& o : periodic_orbits(f, kMaxLen)) {
    int q = o.period;
    std::vector<std::vector<int>> above(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
      for (int t = 0; t < p.period(); ++t)
        if (tree_geq(p.location(t), o.points[static_cast<std::size_t>(i)])) above[static_cast<std::size_t>(i)].push_back(t);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int i) -> bool {
      if (i == q) return g.has_arrow(chosen.back(), chosen.front());
      for (int t : above[static_cast<std::size_t>(i)]) {
        if (i > 0 && !g.has_arrow(chosen.back(), t)) continue;
        chosen.push_back(t);
        bool ok = self(self, i + 1);
        chosen.pop_back();
        if (ok) return true;
      }
      return false;
    };
    if (!rec(rec, 0)) return R::fail("orbit " + to_string(o.pattern) + " of period " + std::to_string(q) +
                                     " is not dominated by any point loop");
  }
  return R::pass();
}

R self_forcing(CheckContext& ctx) {
  if (!forces(ctx.pattern(), ctx.pattern(), ctx.period())) return R::fail("pattern does not force itself");
  return R::pass();
}

// ------------------------------------------------------------- loop_graph

R reach_rule_oracle(CheckContext& ctx) {
  if (ctx.period() > 4) return R::vacuous();
  OrientedGraph sampled = build_graph_by_sampling(ctx.pattern());
  const OrientedGraph& g = ctx.graph();
  int n = ctx.period();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (g.has_arrow(x, y) != sampled.has_arrow(x, y))
        return R::fail("arrow " + pt(x) + "->" + pt(y) + (g.has_arrow(x, y) ? " only" : " missing") +
                       " under the reach rule");
      if (g.has_arrow(x, y) && g.thirds(x, y) != sampled.thirds(x, y))
        return R::fail("displacement of " + pt(x) + "->" + pt(y) + " differs");
    }
  return R::pass();
}

R integral_displacement(CheckContext& ctx) {
  for (const auto& loop : elementary_loops(ctx.graph()))
    if (!loop.integral())
      return R::fail("elementary loop " + join_times(loop.vertices) + " has displacement " + rs(third(loop.thirds)));
  return R::pass();
}

R graph_transitivity(CheckContext& ctx) {
  if (!ctx.graph().is_transitive()) return R::fail("oriented graph is not transitive");
  return R::pass();
}

R fundamental_rotation_census(CheckContext& ctx) {
  const Pattern& p = ctx.pattern();
  auto c = color_census(p);
  Rational expected = make_rational(c.black + 2 * c.red, 3 * p.period());
  Rational actual = rotation_number(p);
  if (actual != expected)
    return R::fail("fundamental loop rotation " + rs(actual) + " differs from (b+2r)/(3n) = " + rs(expected));
  return R::pass();
}

R regularity_cross_check(CheckContext& ctx) {
  if (ctx.regular_by_orbits() == ctx.mixed_two_loop())
    return R::fail(std::string("orbit search says ") + (ctx.regular_by_orbits() ? "regular" : "not regular") +
                   " but the mixed two-loop test disagrees");
  return R::pass();
}

}  // namespace

namespace {

// -------------------------------------------------------- regular cycles

R black_three_loops(CheckContext& ctx) {
  if (!ctx.admissible_regular()) return R::vacuous();
  const OrientedGraph& g = ctx.oriented_graph();
  auto black = [&](int u, int v) { return g.has_arrow(u, v) && g.thirds(u, v) == 1; };
  for (int x = 0; x < ctx.period(); ++x) {
    bool found = false;
    for (int y : g.successors(x))
      for (int z : g.successors(y))
        if (black(x, y) && black(y, z) && black(z, x)) found = true;
    if (!found) return R::fail(pt(x) + " lies on no black loop of length 3");
  }
  return R::pass();
}

R green_moves_inward(CheckContext& ctx) {
  if (!ctx.admissible_regular()) return R::vacuous();
  const Pattern& p = ctx.oriented();
  for (int x = 0; x < p.period(); ++x) {
    if (ctx.colors()[static_cast<std::size_t>(x)] != Color::Green) continue;
    if (p.at(p.next(x)).rank >= p.at(x).rank)
      return R::fail("green " + pt(x) + " at rank " + std::to_string(p.at(x).rank) + " maps out to rank " +
                     std::to_string(p.at(p.next(x)).rank));
  }
  return R::pass();
}

R every_branch_occupied(CheckContext& ctx) {
  if (!ctx.admissible_regular()) return R::vacuous();
  auto k = ctx.pattern().branch_counts();
  for (int b = 0; b < 3; ++b)
    if (k[static_cast<std::size_t>(b)] == 0) return R::fail("branch b" + std::to_string(b) + " is empty");
  return R::pass();
}

R canonical_ordering_exists(CheckContext& ctx) {
  if (!ctx.admissible_regular()) return R::vacuous();
  if (!ctx.orientable()) return R::fail("no branch ordering makes every innermost point black");
  Pattern c = canonical_branch_ordering(ctx.pattern());
  Pattern check;
  if (!try_orient(c, check) || !(check == c)) return R::fail("canonical ordering " + to_string(c) + " is not oriented");
  return R::pass();
}

R forces_three_cycle(CheckContext& ctx) {
  if (!ctx.admissible_regular()) return R::vacuous();
  if (!forces(ctx.oriented(), primitive_three_cycle(), 3)) return R::fail("primitive 3-cycle is not forced");
  return R::pass();
}

// Floored codes agree up to a constant along each branch; unfloored codes
// agree up to a constant on all of P.
R code_base_independence(CheckContext& ctx) {
  if (!ctx.admissible_regular() || !ctx.table()) return R::vacuous();
  const CodeTable& t0 = *ctx.table();
  const Pattern& p = ctx.oriented();
  int n = ctx.period();
  for (int base = 1; base < n; ++base) {
    CodeTable tb = code_table(p, base);
    for (int x = 0; x < n; ++x) {
      if (tb.unfloored(x) - tb.unfloored(0) != t0.unfloored(x) - t0.unfloored(0))
        return R::fail("unfloored L(" + pt(x) + ")-L(x0) is " + rs(t0.unfloored(x) - t0.unfloored(0)) +
                       " from base x0 but " + rs(tb.unfloored(x) - tb.unfloored(0)) + " from base " + pt(base));
      for (int y = 0; y < n; ++y)
        if (p.at(x).branch == p.at(y).branch && tb[x] - tb[y] != t0[x] - t0[y])
          return R::fail("L(" + pt(x) + ")-L(" + pt(y) + ") is " + rs(t0[x] - t0[y]) + " from base x0 but " +
                         rs(tb[x] - tb[y]) + " from base " + pt(base));
    }
  }
  return R::pass();
}

// ------------------------------------------------------------ twist cycles

R twist_color_census(CheckContext& ctx) {
  if (!ctx.twist()) return R::vacuous();
  auto c = color_census(ctx.oriented());
  Rational rho = ctx.rho(), third = make_rational(1, 3);
  std::string got = "green " + std::to_string(c.green) + ", black " + std::to_string(c.black) + ", red " +
                    std::to_string(c.red) + " at rho " + rs(rho);
  if (rho < third && (c.red != 0 || c.green == 0 || c.black == 0)) return R::fail(got);
  if (rho == third && !is_primitive_three_cycle(ctx.oriented())) return R::fail(got);
  if (rho > third && (c.green != 0 || c.red == 0 || c.black == 0)) return R::fail(got);
  return R::pass();
}

R twist_order_preserving(CheckContext& ctx) {
  if (!ctx.twist()) return R::vacuous();
  if (!is_order_preserving(ctx.pattern())) return R::fail("twist pattern is not order-preserving");
  return R::pass();
}

R twist_rotation_below_half(CheckContext& ctx) {
  if (!ctx.twist()) return R::vacuous();
  if (!(ctx.rho() < make_rational(1, 2))) return R::fail("rho = " + rs(ctx.rho()));
  return R::pass();
}

R state_count_bound(CheckContext& ctx) {
  if (!ctx.twist()) return R::vacuous();
  int g = 0, r = 0;
  for (const auto& s : ctx.states()) {
    if (s.color == Color::Green) ++g;
    if (s.color == Color::Red) ++r;
  }
  int m = ctx.modality();
  // |S| < m/2 + 2  <=>  2|S| < m + 4
  if (2 * g >= m + 4) return R::fail(std::to_string(g) + " green states with modality " + std::to_string(m));
  if (2 * r >= m + 4) return R::fail(std::to_string(r) + " red states with modality " + std::to_string(m));
  return R::pass();
}

R green_state_oscillation(CheckContext& ctx) {
  if (!ctx.twist() || !(ctx.rho() < make_rational(1, 3))) return R::vacuous();
  Rational bound = 1 - 3 * ctx.rho();
  bool any = false;
  for (const auto& s : ctx.states()) {
    if (s.color != Color::Green) continue;
    any = true;
    Rational c = chi(*ctx.table(), s.times);
    if (c > bound) return R::fail("green state " + join_times(s.times) + " has chi " + rs(c) + " > 1-3rho = " + rs(bound));
  }
  return any ? R::pass() : R::vacuous();
}

R red_state_oscillation(CheckContext& ctx) {
  if (!ctx.twist() || !(ctx.rho() > make_rational(1, 3))) return R::vacuous();
  Rational bound = 3 * ctx.rho() - 1;
  bool any = false;
  for (const auto& s : ctx.states()) {
    if (s.color != Color::Red) continue;
    any = true;
    Rational c = chi(*ctx.table(), s.times);
    if (c > bound) return R::fail("red state " + join_times(s.times) + " has chi " + rs(c) + " > 3rho-1 = " + rs(bound));
  }
  return any ? R::pass() : R::vacuous();
}

R country_oscillation(CheckContext& ctx) {
  if (!ctx.twist() || !(ctx.rho() < make_rational(1, 3))) return R::vacuous();
  bool any = false;
  for (const auto& c : ctx.countries()) {
    any = true;
    long s = static_cast<long>(c.states.size());
    Rational bound = Rational(s) * (1 - 2 * ctx.rho()) - ctx.rho();
    Rational x = chi(*ctx.table(), c.times());
    if (x > bound)
      return R::fail("country " + join_times(c.times()) + " of " + std::to_string(s) + " states has chi " + rs(x) +
                     " > " + rs(bound));
  }
  return any ? R::pass() : R::vacuous();
}

// For every point of color `from`, some point of color `to` satisfies
// sign * (L(x) - L(z)) <= bound, with the unfloored code.
R spread(CheckContext& ctx, Color from, Color to, int sign, const Rational& bound, const std::string& what) {
  const CodeTable& t = *ctx.table();
  int n = ctx.period();
  bool any = false;
  for (int x = 0; x < n; ++x) {
    if (ctx.colors()[static_cast<std::size_t>(x)] != from) continue;
    any = true;
    std::optional<Rational> best;
    for (int z = 0; z < n; ++z) {
      if (ctx.colors()[static_cast<std::size_t>(z)] != to) continue;
      Rational v = Rational(sign) * (t.unfloored(x) - t.unfloored(z));
      if (!best || v < *best) best = v;
    }
    if (!best || *best > bound)
      return R::fail(pt(x) + ": smallest " + what + " is " + (best ? rs(*best) : std::string("undefined")) + " > " + rs(bound));
  }
  return any ? R::pass() : R::vacuous();
}

R green_spread_below(CheckContext& ctx) {
  if (!ctx.twist() || !(ctx.rho() < make_rational(1, 3))) return R::vacuous();
  return spread(ctx, Color::Black, Color::Green, 1, ctx.rho(), "L(x)-L(z) over green z");
}

R green_spread_above(CheckContext& ctx) {
  if (!ctx.twist() || !(ctx.rho() < make_rational(1, 3))) return R::vacuous();
  return spread(ctx, Color::Black, Color::Green, -1, ctx.rho(), "L(z)-L(x) over green z");
}

R red_spread_below(CheckContext& ctx) {
  if (!ctx.twist() || !(ctx.rho() > make_rational(1, 3))) return R::vacuous();
  return spread(ctx, Color::Black, Color::Red, 1, 4 * ctx.rho() - make_rational(5, 3), "L(b)-L(r) over red r");
}

R red_spread_above(CheckContext& ctx) {
  if (!ctx.twist() || !(ctx.rho() > make_rational(1, 3))) return R::vacuous();
  return spread(ctx, Color::Black, Color::Red, -1, 5 * ctx.rho() - make_rational(5, 3), "L(r)-L(b) over red r");
}

R total_oscillation(CheckContext& ctx) {
  if (!ctx.twist() || !ctx.table()) return R::vacuous();
  int m = ctx.modality();
  Rational c = chi(*ctx.table());
  if (!(c < Rational(m + 3))) return R::fail("chi(P) = " + rs(c) + " with modality " + std::to_string(m));
  Rational u = chi_unfloored(*ctx.table());
  if (!(u < Rational(m + 3)))
    return R::fail("unfloored chi(P) = " + rs(u) + " with modality " + std::to_string(m));
  return R::pass();
}

bool green_regime(CheckContext& ctx) { return ctx.twist() && ctx.rho() < make_rational(1, 3); }
bool red_regime(CheckContext& ctx) { return ctx.twist() && ctx.rho() > make_rational(1, 3); }

R phi_anchor_black(CheckContext& ctx) {
  if (!green_regime(ctx)) return R::vacuous();
  for (const auto& c : ctx.countries()) {
    int anchor = phi_anchor(ctx.oriented(), c);
    if (ctx.colors()[static_cast<std::size_t>(anchor)] != Color::Black)
      return R::fail("country " + join_times(c.times()) + " has anchor " + pt(anchor) + " of color " +
                     color_name(ctx.colors()[static_cast<std::size_t>(anchor)]));
  }
  return ctx.countries().empty() ? R::vacuous() : R::pass();
}

R phi_absent_single_country(CheckContext& ctx) {
  if (!green_regime(ctx)) return R::vacuous();
  const Pattern& p = ctx.oriented();
  const auto& all = ctx.countries();
  bool triggered = false;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (phi(p, all, i, PhiKind::One) || phi(p, all, i, PhiKind::Two)) continue;
    triggered = true;
    BranchId b = all[i].branch;
    for (int x = 0; x < p.period(); ++x)
      if (ctx.colors()[static_cast<std::size_t>(x)] == Color::Green && p.at(x).branch != b)
        return R::fail("neither map exists for country " + join_times(all[i].times()) + " yet green " + pt(x) +
                       " lies on b" + std::to_string(p.at(x).branch.index()));
    int on_branch = 0;
    for (const auto& c : all)
      if (c.branch == b) ++on_branch;
    if (on_branch != 1)
      return R::fail("neither map exists for country " + join_times(all[i].times()) + " yet its branch holds " +
                     std::to_string(on_branch) + " countries");
  }
  return triggered ? R::pass() : R::vacuous();
}

R phi_cube_descends(CheckContext& ctx) {
  if (!green_regime(ctx)) return R::vacuous();
  const Pattern& p = ctx.oriented();
  const auto& all = ctx.countries();
  bool triggered = false;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::optional<std::size_t> c = i;
    for (int k = 0; k < 3 && c; ++k) c = phi(p, all, *c, PhiKind::One);
    if (!c) continue;
    bool has_lower = false;
    for (const auto& other : all)
      if (country_above(p, all[i], other)) has_lower = true;
    if (!has_lower) continue;
    triggered = true;
    if (!country_above(p, all[i], all[*c]))
      return R::fail("country " + join_times(all[i].times()) + " is not above its third image " +
                     join_times(all[*c].times()));
  }
  return triggered ? R::pass() : R::vacuous();
}

R black_train_return(CheckContext& ctx) {
  constexpr int kMaxLen = 9;
  if (!ctx.twist()) return R::vacuous();
  const Pattern& p = ctx.oriented();
  int n = p.period();
  auto black = [&](int t) { return ctx.colors()[static_cast<std::size_t>(t)] == Color::Black; };
  bool triggered = false;
  for (int x0 = 0; x0 < n; ++x0) {
    if (!black(x0)) continue;
    std::vector<bool> reach(static_cast<std::size_t>(n), false);
    reach[static_cast<std::size_t>(x0)] = true;
    for (int len = 1; len <= kMaxLen; ++len) {
      std::vector<bool> next(static_cast<std::size_t>(n), false);
      for (int x = 0; x < n; ++x) {
        if (!reach[static_cast<std::size_t>(x)]) continue;
        const PointSpec& fx = p.at(p.next(x));
        for (int y = 0; y < n; ++y)
          if (black(y) && p.at(y).branch == fx.branch && p.at(y).rank >= fx.rank) next[static_cast<std::size_t>(y)] = true;
      }
      reach = std::move(next);
      for (int y = 0; y < n; ++y) {
        if (!reach[static_cast<std::size_t>(y)] || p.at(y).branch != p.at(x0).branch) continue;
        triggered = true;
        if (p.at(y).rank < p.at(x0).rank)
          return R::fail("black train of length " + std::to_string(len) + " from " + pt(x0) + " ends below it at " + pt(y));
      }
    }
  }
  return triggered ? R::pass() : R::vacuous();
}

std::vector<const State*> red_states_on(CheckContext& ctx, BranchId b) {
  std::vector<const State*> out;
  for (const auto& s : ctx.states())
    if (s.color == Color::Red && s.branch == b) out.push_back(&s);
  return out;  // outward
}

R innermost_red_states(CheckContext& ctx) {
  if (!red_regime(ctx)) return R::vacuous();
  const CodeTable& t = *ctx.table();
  Rational bound = 2 * ctx.rho() - make_rational(2, 3);
  bool triggered = false;
  for (int j = 0; j < 3; ++j) {
    auto r0 = red_states_on(ctx, BranchId(j));
    auto r2 = red_states_on(ctx, BranchId(j + 2));
    if (r0.empty() || r2.empty()) continue;
    triggered = true;
    std::optional<Rational> best;
    for (int x : r0.front()->times)
      for (int y : r2.front()->times)
        if (Rational d = t.unfloored(x) - t.unfloored(y); !best || d < *best) best = d;
    if (!(*best < bound))
      return R::fail("innermost red states on b" + std::to_string(j) + " and b" + std::to_string((j + 2) % 3) +
                     ": smallest L(x)-L(y) is " + rs(*best) + ", not below 2rho-2/3 = " + rs(bound));
  }
  return triggered ? R::pass() : R::vacuous();
}

R adjacent_red_states(CheckContext& ctx) {
  if (!red_regime(ctx)) return R::vacuous();
  const CodeTable& t = *ctx.table();
  Rational bound = 3 * ctx.rho() - 1;
  bool triggered = false;
  for (int j = 0; j < 3; ++j) {
    auto reds = red_states_on(ctx, BranchId(j));
    for (std::size_t i = 0; i + 1 < reds.size(); ++i) {
      triggered = true;
      const State& s = *reds[i];
      const State& r = *reds[i + 1];
      for (int x : r.times)
        for (int y : s.times)
          if (t[x] - t[y] > bound)
            return R::fail("adjacent red states " + join_times(r.times) + " > " + join_times(s.times) + ": L(" + pt(x) +
                           ")-L(" + pt(y) + ") = " + rs(t[x] - t[y]) + " > 3rho-1 = " + rs(bound));
    }
  }
  return triggered ? R::pass() : R::vacuous();
}

R twist_oracle(CheckContext& ctx) {
  if (!ctx.admissible_regular()) return R::vacuous();
  bool by_code = ctx.twist();
  Rational rho = ctx.rho();
  int num = static_cast<int>(rho.get_num().get_si());
  int den = static_cast<int>(rho.get_den().get_si());
  int multiple = std::max(ctx.twist_oracle_multiplier(), ctx.period() / den);
  Pattern self = canonicalize(ctx.oriented());
  auto witness = find_orbit_with_rotation(ctx.oriented_map(), num, den, multiple,
                                          [&](const OrbitRecord& o) { return !(o.pattern == self); });
  if (by_code && witness)
    return R::fail("code criterion says twist, but the map also has " + to_string(witness->pattern) +
                   " with rotation number " + rs(rho));
  if (!by_code && !witness)
    return R::inconclusive("code criterion says not twist; no other orbit of rotation number " + rs(rho) +
                           " up to period " + std::to_string(multiple * den));
  return R::pass();
}

// ------------------------------------------------------------- conjugacy

R conjugacy_equivariance(CheckContext& ctx) {
  if (!ctx.twist()) return R::vacuous();
  const auto& c = ctx.conjugacy();
  const Pattern& p = ctx.pattern();
  for (int t = 0; t < p.period(); ++t) {
    Rational lhs = c.psi[static_cast<std::size_t>(p.next(t))];
    Rational rhs = frac_of(c.psi[static_cast<std::size_t>(t)] + make_rational(c.orbit.p, c.orbit.q));
    if (lhs != rhs) return R::fail("psi(f(" + pt(t) + ")) = " + rs(lhs) + " but psi(" + pt(t) + ") + rho = " + rs(rhs));
  }
  return R::pass();
}

R conjugacy_bijective(CheckContext& ctx) {
  if (!ctx.twist()) return R::vacuous();
  const auto& c = ctx.conjugacy();
  std::set<Rational> image(c.psi.begin(), c.psi.end());
  auto q = c.orbit.points();
  if (image.size() != c.psi.size() || image != std::set<Rational>(q.begin(), q.end()))
    return R::fail("psi takes " + std::to_string(image.size()) + " values on " + std::to_string(c.psi.size()) +
                   " points, orbit of 0 has " + std::to_string(q.size()));
  return R::pass();
}

R conjugacy_lap_bound(CheckContext& ctx) {
  if (!ctx.twist()) return R::vacuous();
  psi_laps(ctx.conjugacy(), ctx.pattern());
  return R::pass();
}

R conjugacy_integer_levels(CheckContext& ctx) {
  if (!ctx.twist() || !ctx.table()) return R::vacuous();
  const auto& c = ctx.conjugacy();
  std::set<mpz_class> levels;
  for (const auto& l : c.code) levels.insert(floor_of(l));
  Rational x = chi(*ctx.table());
  mpz_class limit = ceil_of(x) + 1;
  if (mpz_class(static_cast<long>(levels.size())) > limit)
    return R::fail(std::to_string(levels.size()) + " integer levels exceed ceil(chi)+1 with chi = " + rs(x));
  return R::pass();
}

// ------------------------------------------------------------ sharkovsky

R mrp_hull(CheckContext& ctx) {
  constexpr int kMaxPattern = 5;
  constexpr int kMaxForced = 6;
  if (ctx.period() > kMaxPattern || !ctx.admissible_regular()) return R::vacuous();
  RotationInterval range = rotation_set(ctx.oriented_graph());
  std::vector<MrpPoint> seen;
  for (const auto& o : periodic_orbits(ctx.oriented_map(), kMaxForced)) {
    int d = o.displacement_thirds() / 3;
    if (d == 0) continue;
    auto m = mrp_of(RotationPair{d, o.period});
    seen.push_back({m.t, SharkovskyKey(static_cast<long>(m.m))});
  }
  MrpHull hull{{range.lo, SharkovskyKey(0)}, {range.hi, SharkovskyKey(0)}};
  for (const auto& s : seen) {
    if (s.t == hull.lo.t && sharkovsky_compare(s.m, hull.lo.m) == std::strong_ordering::greater) hull.lo.m = s.m;
    if (s.t == hull.hi.t && sharkovsky_compare(s.m, hull.hi.m) == std::strong_ordering::greater) hull.hi.m = s.m;
  }
  for (const auto& s : seen)
    if (!mrp_hull_contains(hull, s))
      return R::fail("forced mrp (" + rs(s.t) + "," + to_string(s.m) + ") outside [(" + rs(hull.lo.t) + "," +
                     to_string(hull.lo.m) + "),(" + rs(hull.hi.t) + "," + to_string(hull.hi.m) + ")]");
  return R::pass();
}

}  // namespace

const std::vector<CheckDef>& registered_checks() {
  static const std::vector<CheckDef> checks = {
      {"markov_soundness", "piece edges match image-arc coverage; inverse branches are exact", markov_soundness},
      {"orbit_grid_oracle", "orbits of period <= 3 match a 1/64 grid root search (patterns of period <= 4)", orbit_grid_oracle},
      {"loop_orbit_correspondence", "point loops of length <= 4 and periodic orbits realize each other", loop_orbit_correspondence},
      {"self_forcing", "every pattern forces itself", self_forcing},
      {"reach_rule_oracle", "reach-rule arrows match exact sampling (patterns of period <= 4)", reach_rule_oracle},
      {"integral_displacement", "elementary loops have integer displacement", integral_displacement},
      {"graph_transitivity", "the oriented graph of a cycle is transitive", graph_transitivity},
      {"fundamental_rotation_census", "fundamental loop rotation number equals (b+2r)/(3n)", fundamental_rotation_census},
      {"regularity_cross_check", "period-2 orbit search agrees with the mixed two-loop test", regularity_cross_check},
      {"black_three_loops", "regular: every point lies on a black loop of length 3", black_three_loops},
      {"green_moves_inward", "regular: every green point maps closer to the hub", green_moves_inward},
      {"every_branch_occupied", "regular: each branch carries a point", every_branch_occupied},
      {"canonical_ordering_exists", "regular: some branch ordering makes the innermost points black", canonical_ordering_exists},
      {"forces_three_cycle", "regular: the primitive 3-cycle is forced", forces_three_cycle},
      {"code_base_independence", "regular: code differences along a branch, and unfloored differences across P, do not depend on the base point", code_base_independence},
      {"twist_color_census", "twist: no red below 1/3, primitive 3-cycle at 1/3, no green above", twist_color_census},
      {"twist_order_preserving", "twist: order-preserving", twist_order_preserving},
      {"twist_rotation_below_half", "twist: rotation number below 1/2", twist_rotation_below_half},
      {"state_count_bound", "twist: fewer than m/2+2 green states and red states", state_count_bound},
      {"green_state_oscillation", "twist, rho < 1/3: chi(A) <= 1-3rho for green states", green_state_oscillation},
      {"red_state_oscillation", "twist, rho > 1/3: chi(R) <= 3rho-1 for red states", red_state_oscillation},
      {"country_oscillation", "twist, rho < 1/3: chi(C) <= s(1-2rho)-rho for a country of s states", country_oscillation},
      {"green_spread_below", "twist, rho < 1/3: each black x has green z with L(x)-L(z) <= rho", green_spread_below},
      {"green_spread_above", "twist, rho < 1/3: each black x has green z with L(z)-L(x) <= rho", green_spread_above},
      {"red_spread_below", "twist, rho > 1/3: each black b has red r with L(b)-L(r) <= 4rho-5/3", red_spread_below},
      {"red_spread_above", "twist, rho > 1/3: each black b has red r with L(r)-L(b) <= 5rho-5/3", red_spread_above},
      {"total_oscillation", "twist: chi(P) < m+3", total_oscillation},
      {"phi_anchor_black", "twist, rho < 1/3: the anchor f(i(A)) of each country is black", phi_anchor_black},
      {"phi_absent_single_country", "twist, rho < 1/3: no first or second image forces a single green country", phi_absent_single_country},
      {"phi_cube_descends", "twist, rho < 1/3: a country with a lower neighbour lies above its third image", phi_cube_descends},
      {"black_train_return", "twist: black trains of length <= 9 return outward of their start", black_train_return},
      {"innermost_red_states", "twist, rho > 1/3: innermost red states of b_j and b_j+2 satisfy L(x)-L(y) < 2rho-2/3", innermost_red_states},
      {"adjacent_red_states", "twist, rho > 1/3: adjacent red states satisfy L(r)-L(s) <= 3rho-1", adjacent_red_states},
      {"twist_oracle", "code criterion agrees with bounded search for other orbits of the same rotation number", twist_oracle},
      {"conjugacy_equivariance", "twist: psi(f(x)) = psi(x) + p/q mod 1", conjugacy_equivariance},
      {"conjugacy_bijective", "twist: psi is a bijection onto the orbit of 0", conjugacy_bijective},
      {"conjugacy_lap_bound", "twist: psi has at most m+3 laps", conjugacy_lap_bound},
      {"conjugacy_integer_levels", "twist: distinct integer parts of the code <= ceil(chi)+1", conjugacy_integer_levels},
      {"mrp_hull", "regular, period <= 5: forced mrps (period <= 6) lie in the hull at the rotation set ends", mrp_hull},
  };
  return checks;
}

const CheckDef* find_check(const std::string& name) {
  for (const auto& c : registered_checks())
    if (c.name == name) return &c;
  return nullptr;
}

void CheckTally::add(const Pattern& p, const CheckResult& r, int max_dumps) {
  ++examined;
  switch (r.outcome) {
    case Outcome::Pass: ++passes; break;
    case Outcome::Vacuous: ++vacuous; break;
    case Outcome::Fail:
      ++failures;
      if (static_cast<int>(counterexamples.size()) < max_dumps) counterexamples.push_back({p, r.detail});
      break;
    case Outcome::Inconclusive:
      ++inconclusive;
      if (static_cast<int>(inconclusive_examples.size()) < max_dumps) inconclusive_examples.push_back({p, r.detail});
      break;
  }
}

long SuiteReport::failures() const {
  long total = 0;
  for (const auto& c : checks) total += c.failures;
  return total;
}

const CheckTally* SuiteReport::tally(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.max_period < 1 || cfg.min_period < 1 || cfg.min_period > cfg.max_period)
    throw std::invalid_argument("period range must satisfy 1 <= min <= max");
  std::vector<const CheckDef*> selected;
  if (cfg.checks.empty()) {
    for (const auto& c : registered_checks()) selected.push_back(&c);
  } else {
    for (const auto& name : cfg.checks) {
      const CheckDef* c = find_check(name);
      if (!c) throw std::invalid_argument("unknown check: " + name);
      if (std::find(selected.begin(), selected.end(), c) == selected.end()) selected.push_back(c);
    }
  }
  for (const auto& c : cfg.extra_checks) selected.push_back(&c);

  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = cfg;
  std::vector<Pattern> corpus;
  for (int n = cfg.min_period; n <= cfg.max_period; ++n) {
    auto ps = enumerate_patterns(n);
    report.corpus.emplace_back(n, static_cast<long>(ps.size()));
    corpus.insert(corpus.end(), std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()));
  }

  std::vector<std::vector<CheckResult>> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      CheckContext ctx(corpus[i], cfg.twist_oracle_multiplier);
      auto& out = results[i];
      out.reserve(selected.size());
      for (const CheckDef* c : selected) {
        try {
          out.push_back(c->run(ctx));
        } catch (const TriodError& e) {
          out.push_back(CheckResult::fail(std::string(error_name(e.code())) + ": " + e.what()));
        } catch (const std::exception& e) {
          out.push_back(CheckResult::fail(std::string("exception: ") + e.what()));
        }
      }
    }
  };
  int jobs = std::max(1, cfg.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const CheckDef* c : selected) {
    CheckTally t;
    t.name = c->name;
    t.description = c->description;
    report.checks.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t k = 0; k < selected.size(); ++k) report.checks[k].add(corpus[i], results[i][k], cfg.max_dumps);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

nlohmann::ordered_json dumps(const std::vector<Counterexample>& xs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& x : xs) {
    nlohmann::ordered_json e;
    e["pattern"] = nlohmann::ordered_json::parse(serialize(x.pattern));
    e["detail"] = x.detail;
    arr.push_back(e);
  }
  return arr;
}

}  // namespace

std::string report_json(const SuiteReport& report, bool deterministic) {
  nlohmann::ordered_json j;
  j["min_period"] = report.config.min_period;
  j["max_period"] = report.config.max_period;
  j["twist_oracle_multiplier"] = report.config.twist_oracle_multiplier;
  nlohmann::ordered_json corpus = nlohmann::ordered_json::object();
  long total = 0;
  for (const auto& [n, count] : report.corpus) {
    corpus[std::to_string(n)] = count;
    total += count;
  }
  j["corpus"] = corpus;
  j["patterns"] = total;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["description"] = c.description;
    e["examined"] = c.examined;
    e["passes"] = c.passes;
    e["vacuous"] = c.vacuous;
    e["failures"] = c.failures;
    e["inconclusive"] = c.inconclusive;
    e["counterexamples"] = dumps(c.counterexamples);
    e["inconclusive_examples"] = dumps(c.inconclusive_examples);
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["failures"] = report.failures();
  j["ok"] = report.failures() == 0;
  if (!deterministic) {
    j["jobs"] = report.config.jobs;
    j["seconds"] = report.seconds;
  }
  return j.dump(2);
}

}  // namespace triod
