#pragma once

// The oriented graph G_P of a cycle: arrows, displacements, colors, loops and
// rotation data.

#include "triod/pattern.hpp"

#include <string>
#include <utility>
#include <vector>

namespace triod {

enum class Color { Green = 0, Black = 1, Red = 2 };

const char* color_name(Color c);

// Color of an arrow shifting `thirds` branches clockwise.
inline Color color_of_shift(int thirds) { return static_cast<Color>(((thirds % 3) + 3) % 3); }

struct Arrow {
  int from = 0;  // time index
  int to = 0;
  int thirds = 0;  // displacement is thirds/3

  Color color() const { return color_of_shift(thirds); }
  Rational displacement() const { return make_rational(thirds, 3); }
};

class OrientedGraph {
 public:
  OrientedGraph(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool has_arrow(int from, int to) const;
  // Displacement in thirds of an existing arrow.
  int thirds(int from, int to) const;
  const std::vector<int>& successors(int v) const { return succ_[static_cast<std::size_t>(v)]; }

  bool is_transitive() const;

 private:
  int vertex_count_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> thirds_;  // -1 when absent
};

// Arrow x -> y iff some marked p with p <= x has f(p) >= y.
OrientedGraph build_graph(const Pattern& p);

// Arrow relation recomputed by sampling z over marked points and piece
// midpoints of [a, x] and evaluating the map exactly.
OrientedGraph build_graph_by_sampling(const Pattern& p);

struct RotationPair {
  long long displacement = 0;  // d(loop), an integer
  long long length = 1;

  Rational number() const { return make_rational(static_cast<long>(displacement), static_cast<long>(length)); }
  friend bool operator==(const RotationPair&, const RotationPair&) = default;
};

struct PointLoop {
  std::vector<int> vertices;  // closes from back() to front()
  int thirds = 0;

  int length() const { return static_cast<int>(vertices.size()); }
  bool integral() const { return thirds % 3 == 0; }
  RotationPair rotation_pair() const { return {thirds / 3, length()}; }
  Rational rotation_number() const { return make_rational(thirds, 3 * length()); }
};

PointLoop fundamental_loop(const Pattern& p);

// Simple cycles, each starting at its smallest vertex, sorted lexicographically.
std::vector<PointLoop> elementary_loops(const OrientedGraph& g);

struct RotationInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
};

// Errors: NotTransitive.
RotationInterval rotation_set(const OrientedGraph& g);

struct ModifiedRotationPair {
  Rational t;
  long long m = 1;

  friend bool operator==(const ModifiedRotationPair&, const ModifiedRotationPair&) = default;
};

// (d, q) -> (d/g / (q/g), g); d = 0 gives (0, q).
ModifiedRotationPair mrp_of(const RotationPair& rp);

// Some 2-loop carries displacements 1/3 and 2/3.
bool has_mixed_two_loop(const OrientedGraph& g);

// One line per arrow: "x_t -> x_s d=k/3 color".
std::string dump_graph(const OrientedGraph& g);

}  // namespace triod
