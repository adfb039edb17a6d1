#include "triod/loop_graph.hpp"

#include "triod/plinear.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace triod {

const char* color_name(Color c) {
  switch (c) {
    case Color::Green: return "green";
    case Color::Black: return "black";
    case Color::Red: return "red";
  }
  return "?";
}

OrientedGraph::OrientedGraph(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& x, const Arrow& y) { return std::pair(x.from, x.to) < std::pair(y.from, y.to); });
  succ_.resize(static_cast<std::size_t>(vertex_count_));
  thirds_.assign(static_cast<std::size_t>(vertex_count_), std::vector<int>(static_cast<std::size_t>(vertex_count_), -1));
  for (const auto& a : arrows_) {
    succ_[static_cast<std::size_t>(a.from)].push_back(a.to);
    thirds_[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)] = a.thirds;
  }
}

bool OrientedGraph::has_arrow(int from, int to) const {
  return thirds_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] >= 0;
}

int OrientedGraph::thirds(int from, int to) const {
  return thirds_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
}

bool OrientedGraph::is_transitive() const {
  if (vertex_count_ == 0) return true;
  auto reach_all = [&](bool reverse) {
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < vertex_count_; ++w) {
        bool edge = reverse ? has_arrow(w, v) : has_arrow(v, w);
        if (edge && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return reach_all(false) && reach_all(true);
}

OrientedGraph build_graph(const Pattern& p) {
  require_valid(p);
  int n = p.period();
  std::vector<Arrow> arrows;
  for (int x = 0; x < n; ++x) {
    BranchId bx = p.at(x).branch;
    for (int y = 0; y < n; ++y) {
      BranchId by = p.at(y).branch;
      bool arrow = false;
      // Marked points p <= x on x's branch are the ranks 1..rank(x).
      for (int r = 1; r <= p.at(x).rank && !arrow; ++r) {
        const PointSpec& img = p.at(p.next(p.time_of(bx, r)));
        arrow = img.branch == by && img.rank >= p.at(y).rank;
      }
      if (arrow) arrows.push_back({x, y, bx.steps_to(by)});
    }
  }
  return OrientedGraph(n, std::move(arrows));
}

OrientedGraph build_graph_by_sampling(const Pattern& p) {
  PLinearMap f = build_plinear(p);
  int n = p.period();
  std::vector<Arrow> arrows;
  for (int x = 0; x < n; ++x) {
    BranchId bx = p.at(x).branch;
    std::vector<TriodPoint> samples{TriodPoint::hub()};
    for (int r = 1; r <= p.at(x).rank; ++r) {
      samples.push_back(TriodPoint::on_branch(bx, Rational(r)));
      samples.push_back(TriodPoint::on_branch(bx, Rational(r) - make_rational(1, 2)));
    }
    std::vector<TriodPoint> images;
    for (const auto& z : samples) images.push_back(f.evaluate(z));
    for (int y = 0; y < n; ++y) {
      TriodPoint target = p.location(y);
      bool arrow = std::any_of(images.begin(), images.end(), [&](const TriodPoint& w) { return tree_geq(w, target); });
      if (arrow) arrows.push_back({x, y, bx.steps_to(p.at(y).branch)});
    }
  }
  return OrientedGraph(n, std::move(arrows));
}

PointLoop fundamental_loop(const Pattern& p) {
  require_valid(p);
  PointLoop loop;
  for (int t = 0; t < p.period(); ++t) {
    loop.vertices.push_back(t);
    loop.thirds += p.at(t).branch.steps_to(p.at(p.next(t)).branch);
  }
  return loop;
}

std::vector<PointLoop> elementary_loops(const OrientedGraph& g) {
  // Johnson's algorithm: circuits whose least vertex is s, in the subgraph of
  // vertices >= s.
  int n = g.vertex_count();
  std::vector<PointLoop> loops;
  std::vector<char> blocked(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> block_map(static_cast<std::size_t>(n));
  std::vector<int> stack;

  auto unblock = [&](auto&& self, int u) -> void {
    blocked[static_cast<std::size_t>(u)] = 0;
    auto& bm = block_map[static_cast<std::size_t>(u)];
    while (!bm.empty()) {
      int w = bm.back();
      bm.pop_back();
      if (blocked[static_cast<std::size_t>(w)]) self(self, w);
    }
  };

  for (int s = 0; s < n; ++s) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (auto& bm : block_map) bm.clear();
    auto circuit = [&](auto&& self, int v) -> bool {
      bool found = false;
      stack.push_back(v);
      blocked[static_cast<std::size_t>(v)] = 1;
      for (int w : g.successors(v)) {
        if (w < s) continue;
        if (w == s) {
          PointLoop loop;
          loop.vertices = stack;
          for (std::size_t i = 0; i < stack.size(); ++i)
            loop.thirds += g.thirds(stack[i], stack[(i + 1) % stack.size()]);
          loops.push_back(std::move(loop));
          found = true;
        } else if (!blocked[static_cast<std::size_t>(w)]) {
          if (self(self, w)) found = true;
        }
      }
      if (found) {
        unblock(unblock, v);
      } else {
        for (int w : g.successors(v)) {
          if (w < s) continue;
          auto& bm = block_map[static_cast<std::size_t>(w)];
          if (std::find(bm.begin(), bm.end(), v) == bm.end()) bm.push_back(v);
        }
      }
      stack.pop_back();
      return found;
    };
    circuit(circuit, s);
  }
  std::sort(loops.begin(), loops.end(), [](const PointLoop& x, const PointLoop& y) { return x.vertices < y.vertices; });
  return loops;
}

RotationInterval rotation_set(const OrientedGraph& g) {
  if (!g.is_transitive()) throw TriodError(ErrorCode::NotTransitive, "oriented graph is not transitive");
  auto loops = elementary_loops(g);
  if (loops.empty()) throw TriodError(ErrorCode::NotTransitive, "oriented graph has no loops");
  RotationInterval r{loops.front().rotation_number(), loops.front().rotation_number()};
  for (const auto& l : loops) {
    Rational rho = l.rotation_number();
    if (rho < r.lo) r.lo = rho;
    if (rho > r.hi) r.hi = rho;
  }
  return r;
}

ModifiedRotationPair mrp_of(const RotationPair& rp) {
  if (rp.displacement == 0) return {Rational(0), rp.length};
  long long g = std::gcd(rp.displacement, rp.length);
  return {make_rational(static_cast<long>(rp.displacement / g), static_cast<long>(rp.length / g)), g};
}

bool has_mixed_two_loop(const OrientedGraph& g) {
  for (const auto& a : g.arrows())
    if (a.thirds == 1 && g.has_arrow(a.to, a.from) && g.thirds(a.to, a.from) == 2) return true;
  return false;
}

std::string dump_graph(const OrientedGraph& g) {
  std::ostringstream os;
  for (const auto& a : g.arrows())
    os << "x_" << a.from << " -> x_" << a.to << " d=" << a.thirds << "/3 " << color_name(a.color()) << "\n";
  return os.str();
}

}  // namespace triod
