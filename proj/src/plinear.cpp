#include "triod/plinear.hpp"

#include "triod/loop_graph.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>

namespace triod {

namespace {

using i128 = __int128;

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

// u0 = (offset + sign * u_depth) / scale, accumulated along a path.
struct Composite {
  i128 offset = 0;
  int sign = 1;
  i128 scale = 1;

  Composite then(const MarkovEdge& e) const {
    constexpr i128 kLimit = static_cast<i128>(1) << 100;
    if (scale > kLimit / e.stretch) throw TriodError(ErrorCode::Overflow, "loop composition too long");
    Composite c;
    c.offset = offset * e.stretch + sign * e.offset;
    c.sign = sign * e.sign;
    c.scale = scale * e.stretch;
    return c;
  }

  bool is_identity() const { return scale == 1 && sign == 1; }
  bool is_flip() const { return scale == 1 && sign == -1; }
};

// Fixed points of the loop map in the start piece's normalized coordinate.
// Identity loops return interior representatives.
std::vector<Rational> loop_fixed_points(const Composite& c) {
  if (c.is_identity()) return {make_rational(1, 3), make_rational(1, 2), make_rational(2, 3)};
  Rational u(to_mpz(c.offset), to_mpz(c.scale - c.sign));
  u.canonicalize();
  return {u};
}

bool is_primitive_minimal_rotation(const std::vector<int>& seq) {
  std::size_t n = seq.size();
  for (std::size_t s = 1; s < n; ++s) {
    // Compare rotation starting at s with the sequence itself.
    int cmp = 0;
    for (std::size_t i = 0; i < n && cmp == 0; ++i) {
      int a = seq[(s + i) % n];
      int b = seq[i];
      cmp = (a < b) ? -1 : (a > b ? 1 : 0);
    }
    if (cmp <= 0) return false;  // smaller rotation, or periodic sequence
  }
  return true;
}

// Depth-first enumeration of closed paths of a fixed length through `start`.
// allow(depth, piece) filters the piece visited after `depth` steps.
template <class Allow, class Visit>
void dfs_loops(const MarkovGraph& g, int start, int length, const Allow& allow, const Visit& visit) {
  std::vector<int> pieces;
  pieces.reserve(static_cast<std::size_t>(length) + 1);
  pieces.push_back(start);
  std::vector<Composite> comp;
  comp.reserve(static_cast<std::size_t>(length) + 1);
  comp.push_back(Composite{});
  auto rec = [&](auto&& self, int depth) -> bool {
    int v = pieces.back();
    for (int ei : g.out[static_cast<std::size_t>(v)]) {
      const MarkovEdge& e = g.edges[static_cast<std::size_t>(ei)];
      int w = e.to;
      if (depth + 1 == length) {
        if (w != start) continue;
      } else if (!allow(depth + 1, w)) {
        continue;
      }
      pieces.push_back(w);
      comp.push_back(comp.back().then(e));
      bool stop = (depth + 1 == length) ? visit(pieces, comp.back()) : self(self, depth + 1);
      pieces.pop_back();
      comp.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(rec, 0);
}

std::vector<TriodPoint> canonical_rotation(std::vector<TriodPoint> pts) {
  auto it = std::min_element(pts.begin(), pts.end());
  std::rotate(pts.begin(), it, pts.end());
  return pts;
}

}  // namespace

PLinearMap::PLinearMap(Pattern pattern) : pattern_(std::move(pattern)) {
  require_valid(pattern_);
  counts_ = pattern_.branch_counts();
  for (int b = 0; b < 3; ++b) {
    first_piece_[static_cast<std::size_t>(b)] = static_cast<int>(pieces_.size());
    for (int j = 0; j < counts_[static_cast<std::size_t>(b)]; ++j) pieces_.push_back({BranchId(b), j});
  }
}

PLinearMap build_plinear(const Pattern& p) { return PLinearMap(p); }

int PLinearMap::piece_id(BranchId b, int index) const {
  return first_piece_[static_cast<std::size_t>(b.index())] + index;
}

TriodPoint PLinearMap::marked(BranchId b, int coord) const {
  if (coord == 0) return TriodPoint::hub();
  return TriodPoint::on_branch(b, Rational(coord));
}

TriodPoint PLinearMap::marked_image(BranchId b, int coord) const {
  if (coord == 0) return TriodPoint::hub();
  return pattern_.location(pattern_.next(pattern_.time_of(b, coord)));
}

Arc PLinearMap::piece_image(int piece) const {
  const Piece& pc = pieces_[static_cast<std::size_t>(piece)];
  return Arc(marked_image(pc.branch, pc.index), marked_image(pc.branch, pc.index + 1));
}

TriodPoint PLinearMap::point_in_piece(int piece, const Rational& u) const {
  const Piece& pc = pieces_[static_cast<std::size_t>(piece)];
  Rational c = Rational(pc.index) + u;
  if (c == 0) return TriodPoint::hub();
  return TriodPoint::on_branch(pc.branch, c);
}

TriodPoint PLinearMap::evaluate(const TriodPoint& x) const {
  if (x.is_hub()) return x;
  int k = counts_[static_cast<std::size_t>(x.branch().index())];
  if (k == 0) return TriodPoint::hub();
  if (x.coord() >= k) return marked_image(x.branch(), k);
  mpz_class c = ceil_of(x.coord());
  int j = static_cast<int>(c.get_si()) - 1;
  Rational u = x.coord() - Rational(j);
  if (u == 1) return marked_image(x.branch(), j + 1);
  return piece_image(piece_id(x.branch(), j)).point_at(u);
}

TriodPoint PLinearMap::iterate(TriodPoint x, int times) const {
  for (int i = 0; i < times; ++i) x = evaluate(x);
  return x;
}

namespace {

enum class Heading { Inward, Outward };

// Direction in which the tree path from `from` (not the hub) toward `to` starts.
Heading heading(const TriodPoint& from, const TriodPoint& to) {
  if (!to.is_hub() && to.branch() == from.branch() && to.coord() > from.coord()) return Heading::Outward;
  return Heading::Inward;
}

}  // namespace

int modality(const PLinearMap& f) {
  const Pattern& p = f.pattern();
  auto counts = p.branch_counts();
  int folds = 0;
  std::set<int> germ_targets;
  int germs = 0;
  for (int b = 0; b < 3; ++b) {
    BranchId bid(b);
    int k = counts[static_cast<std::size_t>(b)];
    if (k == 0) continue;
    ++germs;
    germ_targets.insert(f.marked_image(bid, 1).branch().index());
    for (int r = 1; r < k; ++r) {
      TriodPoint y = f.marked_image(bid, r);
      if (heading(y, f.marked_image(bid, r - 1)) == heading(y, f.marked_image(bid, r + 1))) ++folds;
    }
  }
  folds += germs - static_cast<int>(germ_targets.size());
  return folds + 1;
}

int modality(const Pattern& p) { return modality(build_plinear(p)); }

bool MarkovGraph::has_edge(int from, int to) const {
  for (int ei : out[static_cast<std::size_t>(from)])
    if (edges[static_cast<std::size_t>(ei)].to == to) return true;
  return false;
}

MarkovGraph markov_graph(const PLinearMap& f) {
  MarkovGraph g;
  g.vertex_count = f.piece_count();
  g.out.resize(static_cast<std::size_t>(g.vertex_count));
  auto coord_of = [](const TriodPoint& x) { return x.is_hub() ? 0 : static_cast<int>(x.coord().get_num().get_si()); };
  for (int id = 0; id < g.vertex_count; ++id) {
    const Piece& pc = f.pieces()[static_cast<std::size_t>(id)];
    TriodPoint a = f.marked_image(pc.branch, pc.index);
    TriodPoint b = f.marked_image(pc.branch, pc.index + 1);
    int ca = coord_of(a), cb = coord_of(b);
    struct Step { int piece; int s0; bool outward; };
    std::vector<Step> steps;
    auto inward_run = [&](BranchId br, int from, int to, int base) {
      for (int i = from - 1; i >= to; --i) steps.push_back({f.piece_id(br, i), base + (from - (i + 1)), false});
    };
    auto outward_run = [&](BranchId br, int from, int to, int base) {
      for (int i = from; i < to; ++i) steps.push_back({f.piece_id(br, i), base + (i - from), true});
    };
    int length = 0;
    if (a.is_hub()) {
      outward_run(b.branch(), 0, cb, 0);
      length = cb;
    } else if (b.is_hub()) {
      inward_run(a.branch(), ca, 0, 0);
      length = ca;
    } else if (a.branch() == b.branch()) {
      if (ca < cb) outward_run(a.branch(), ca, cb, 0);
      else inward_run(a.branch(), ca, cb, 0);
      length = std::abs(ca - cb);
    } else {
      inward_run(a.branch(), ca, 0, 0);
      outward_run(b.branch(), 0, cb, ca);
      length = ca + cb;
    }
    for (const Step& s : steps) {
      MarkovEdge e;
      e.from = id;
      e.to = s.piece;
      e.offset = s.outward ? s.s0 : s.s0 + 1;
      e.sign = s.outward ? 1 : -1;
      e.stretch = length;
      g.out[static_cast<std::size_t>(id)].push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back(e);
    }
  }
  return g;
}

int OrbitRecord::displacement_thirds() const {
  int total = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    total += points[i].branch().steps_to(points[(i + 1) % points.size()].branch());
  return total;
}

std::vector<BranchId> OrbitRecord::itinerary() const {
  std::vector<BranchId> out;
  for (const auto& x : points) out.push_back(x.branch());
  return out;
}

Pattern pattern_of_orbit(const std::vector<TriodPoint>& points) {
  std::vector<PointSpec> specs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    int rank = 1;
    for (const auto& y : points)
      if (!y.is_hub() && y.branch() == points[i].branch() && y.coord() < points[i].coord()) ++rank;
    specs[i] = {points[i].branch(), rank};
  }
  return Pattern(std::move(specs));
}

namespace {

// Orbit through x0, which must be periodic with period dividing max_steps.
std::optional<OrbitRecord> trace_orbit(const PLinearMap& f, const TriodPoint& x0, int max_steps, bool degenerate) {
  if (x0.is_hub()) return std::nullopt;
  OrbitRecord rec;
  rec.points.push_back(x0);
  TriodPoint x = f.evaluate(x0);
  while (!(x == x0)) {
    if (static_cast<int>(rec.points.size()) >= max_steps || x.is_hub()) return std::nullopt;
    rec.points.push_back(x);
    x = f.evaluate(x);
  }
  rec.points = canonical_rotation(std::move(rec.points));
  rec.period = static_cast<int>(rec.points.size());
  rec.pattern = pattern_of_orbit(rec.points);
  rec.degenerate = degenerate;
  return rec;
}

OrbitRecord pattern_orbit(const PLinearMap& f) {
  const Pattern& p = f.pattern();
  std::vector<TriodPoint> pts;
  for (int t = 0; t < p.period(); ++t) pts.push_back(p.location(t));
  OrbitRecord rec;
  rec.points = canonical_rotation(std::move(pts));
  rec.period = p.period();
  rec.pattern = pattern_of_orbit(rec.points);
  return rec;
}

bool interior(const Rational& u) { return u > 0 && u < 1; }

// Solutions of one closed path, as orbits. The flag reports flip loops whose
// square is an interval of periodic points.
template <class Emit>
void solve_loop(const PLinearMap& f, int start, const Composite& c, int length, const Emit& emit) {
  for (const Rational& u : loop_fixed_points(c)) {
    if (!interior(u)) continue;
    if (auto orbit = trace_orbit(f, f.point_in_piece(start, u), length, c.is_identity())) emit(*orbit);
  }
}

void emit_doubled_flip(const PLinearMap& f, int start, int length, int max_length,
                       const std::function<void(const OrbitRecord&)>& emit) {
  if (2 * length > max_length) return;
  Composite identity;
  solve_loop(f, start, identity, 2 * length, emit);
}

bool orbit_less(const OrbitRecord& x, const OrbitRecord& y) {
  if (x.period != y.period) return x.period < y.period;
  if (!(x.pattern == y.pattern)) return x.pattern < y.pattern;
  return x.points < y.points;
}

std::vector<OrbitRecord> collect(std::map<std::vector<TriodPoint>, OrbitRecord>& found) {
  std::vector<OrbitRecord> out;
  out.reserve(found.size());
  for (auto& [key, rec] : found) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(), orbit_less);
  return out;
}

}  // namespace

std::vector<OrbitRecord> periodic_orbits(const PLinearMap& f, int max_period) {
  std::map<std::vector<TriodPoint>, OrbitRecord> found;
  auto emit = [&](const OrbitRecord& rec) { found.emplace(rec.points, rec); };
  if (f.pattern().period() <= max_period) emit(pattern_orbit(f));
  MarkovGraph g = markov_graph(f);
  for (int s = 0; s < g.vertex_count; ++s) {
    for (int len = 1; len <= max_period; ++len) {
      dfs_loops(g, s, len, [s](int, int piece) { return piece >= s; },
                [&](const std::vector<int>& pieces, const Composite& c) {
                  std::vector<int> seq(pieces.begin(), pieces.end() - 1);
                  if (!is_primitive_minimal_rotation(seq)) return false;
                  solve_loop(f, s, c, len, emit);
                  if (c.is_flip()) emit_doubled_flip(f, s, len, max_period, emit);
                  return false;
                });
    }
  }
  return collect(found);
}

std::vector<OrbitRecord> orbits_with_itinerary(const PLinearMap& f, const std::vector<BranchId>& branches) {
  std::map<std::vector<TriodPoint>, OrbitRecord> found;
  int len = static_cast<int>(branches.size());
  if (len == 0) return {};
  auto emit = [&](const OrbitRecord& rec) { found.emplace(rec.points, rec); };
  const Pattern& p = f.pattern();
  if (len % p.period() == 0) {
    for (int t = 0; t < p.period(); ++t) {
      bool match = true;
      for (int i = 0; i < len && match; ++i) match = p.at((t + i) % p.period()).branch == branches[static_cast<std::size_t>(i)];
      if (match) {
        emit(pattern_orbit(f));
        break;
      }
    }
  }
  MarkovGraph g = markov_graph(f);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (f.pieces()[static_cast<std::size_t>(s)].branch != branches[0]) continue;
    dfs_loops(g, s, len,
              [&](int depth, int piece) {
                return f.pieces()[static_cast<std::size_t>(piece)].branch == branches[static_cast<std::size_t>(depth)];
              },
              [&](const std::vector<int>&, const Composite& c) {
                solve_loop(f, s, c, len, emit);
                return false;
              });
  }
  return collect(found);
}

std::optional<OrbitRecord> find_orbit_with_rotation(const PLinearMap& f, int num, int den, int max_multiple,
                                                    const std::function<bool(const OrbitRecord&)>& accept) {
  MarkovGraph g = markov_graph(f);
  int n = g.vertex_count;
  int max_len = den * max_multiple;
  constexpr int kMaxSum = 256;
  if (2 * max_len >= kMaxSum) throw TriodError(ErrorCode::Overflow, "rotation search length too large");
  using Sums = std::bitset<kMaxSum>;
  auto step_of = [&](int from, int to) {
    return f.pieces()[static_cast<std::size_t>(from)].branch.steps_to(f.pieces()[static_cast<std::size_t>(to)].branch);
  };
  std::optional<OrbitRecord> hit;
  auto emit = [&](const OrbitRecord& rec) {
    if (!hit && rec.displacement_thirds() * den == 3 * num * rec.period && accept(rec)) hit = rec;
  };
  for (int s = 0; s < n && !hit; ++s) {
    // reach[r][v]: displacement sums of r-step paths v -> s through pieces >= s.
    std::vector<std::vector<Sums>> reach(static_cast<std::size_t>(max_len) + 1,
                                         std::vector<Sums>(static_cast<std::size_t>(n)));
    reach[0][static_cast<std::size_t>(s)].set(0);
    for (int r = 1; r <= max_len; ++r)
      for (int v = s; v < n; ++v)
        for (int ei : g.out[static_cast<std::size_t>(v)]) {
          int w = g.edges[static_cast<std::size_t>(ei)].to;
          if (w < s) continue;
          reach[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)] |=
              reach[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(w)] << static_cast<std::size_t>(step_of(v, w));
        }
    for (int m = 1; m <= max_multiple && !hit; ++m) {
      int len = m * den;
      int target = 3 * m * num;
      if (!reach[static_cast<std::size_t>(len)][static_cast<std::size_t>(s)].test(static_cast<std::size_t>(target))) continue;
      // Running sum along the current path, indexed by depth.
      std::vector<int> sums(static_cast<std::size_t>(len) + 1, 0);
      std::vector<int> path(static_cast<std::size_t>(len) + 1, s);
      dfs_loops(g, s, len,
                [&](int depth, int piece) {
                  if (piece < s) return false;
                  // dfs_loops only asks about the piece after `depth` steps;
                  // the piece before it is recorded in path[depth - 1].
                  int prev = path[static_cast<std::size_t>(depth - 1)];
                  int sum = sums[static_cast<std::size_t>(depth - 1)] + step_of(prev, piece);
                  int need = target - sum;
                  if (need < 0 || !reach[static_cast<std::size_t>(len - depth)][static_cast<std::size_t>(piece)].test(static_cast<std::size_t>(need)))
                    return false;
                  sums[static_cast<std::size_t>(depth)] = sum;
                  path[static_cast<std::size_t>(depth)] = piece;
                  return true;
                },
                [&](const std::vector<int>& pieces, const Composite& c) {
                  std::vector<int> seq(pieces.begin(), pieces.end() - 1);
                  int total = sums[static_cast<std::size_t>(len - 1)] + step_of(pieces[static_cast<std::size_t>(len - 1)], s);
                  if (total != target || !is_primitive_minimal_rotation(seq)) return false;
                  solve_loop(f, s, c, len, emit);
                  if (!hit && c.is_flip()) emit_doubled_flip(f, s, len, max_len, emit);
                  return hit.has_value();
                });
    }
  }
  return hit;
}

bool forces(const Pattern& a, const Pattern& b, int max_period) {
  if (b.period() > max_period) return false;
  Pattern target = canonicalize(b);
  PLinearMap f = build_plinear(a);
  std::vector<BranchId> branches;
  for (const auto& s : target.points()) branches.push_back(s.branch);
  for (const auto& orbit : orbits_with_itinerary(f, branches))
    if (orbit.pattern == target) return true;
  return false;
}

bool is_regular_by_orbits(const PLinearMap& f) {
  for (int b0 = 0; b0 < 3; ++b0)
    for (int b1 = 0; b1 < 3; ++b1) {
      if (b0 == b1) continue;
      for (const auto& orbit : orbits_with_itinerary(f, {BranchId(b0), BranchId(b1)}))
        if (orbit.period == 2) return false;
    }
  return true;
}

bool fixes_only_hub(const PLinearMap& f) {
  for (int b = 0; b < 3; ++b)
    if (!orbits_with_itinerary(f, {BranchId(b)}).empty()) return false;
  return true;
}

bool fixes_only_hub(const Pattern& p) { return fixes_only_hub(build_plinear(p)); }

bool is_regular(const Pattern& p) {
  require_valid(p);
  bool by_orbits = is_regular_by_orbits(build_plinear(p));
  bool by_graph = !has_mixed_two_loop(build_graph(p));
  if (by_orbits != by_graph)
    throw TriodError(ErrorCode::CrossCheckMismatch,
                     "orbit regularity " + std::string(by_orbits ? "true" : "false") +
                         " disagrees with two-loop criterion for " + to_string(p));
  return by_orbits;
}

}  // namespace triod
