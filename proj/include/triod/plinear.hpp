#pragma once

// The connect-the-dots map of a pattern and its periodic orbits.
//
// Marked points sit at integer coordinates 1..k_b on each branch, so every
// piece [j, j+1] has unit length and its image arc has integer length.

#include "triod/pattern.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace triod {

// Closed arc [index, index+1] on `branch`; index 0 is the piece touching a.
struct Piece {
  BranchId branch;
  int index = 0;

  friend auto operator<=>(const Piece&, const Piece&) = default;
};

class PLinearMap {
 public:
  explicit PLinearMap(Pattern pattern);

  const Pattern& pattern() const { return pattern_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }
  int piece_id(BranchId b, int index) const;

  // Marked point at integer coordinate `coord` on b (0 is the hub).
  TriodPoint marked(BranchId b, int coord) const;
  // Image of that marked point.
  TriodPoint marked_image(BranchId b, int coord) const;

  // Image arc of a piece, oriented from the image of its inner endpoint.
  Arc piece_image(int piece) const;

  // Exact image; points beyond the outermost marked point clamp.
  TriodPoint evaluate(const TriodPoint& x) const;
  TriodPoint iterate(TriodPoint x, int times) const;

  // Point at normalized position u in [0,1] of a piece.
  TriodPoint point_in_piece(int piece, const Rational& u) const;

 private:
  Pattern pattern_;
  std::array<int, 3> counts_{};
  std::vector<Piece> pieces_;
  std::array<int, 3> first_piece_{};
};

PLinearMap build_plinear(const Pattern& p);

// Laps of the map on [P]: folds + 1. A marked interior point folds when its
// two neighbours' images leave its image in the same direction; the hub
// contributes one fold per coincidence among the branch germs.
int modality(const PLinearMap& f);
int modality(const Pattern& p);

// Edge I -> J: the sub-arc of I that f stretches onto J. Its inverse
// branch, in normalized piece coordinates, is u = (offset + sign * v) / stretch.
struct MarkovEdge {
  int from = 0;
  int to = 0;
  int offset = 0;
  int sign = 1;
  int stretch = 1;
};

struct MarkovGraph {
  int vertex_count = 0;
  std::vector<MarkovEdge> edges;
  std::vector<std::vector<int>> out;  // edge indices per vertex

  bool has_edge(int from, int to) const;
};

MarkovGraph markov_graph(const PLinearMap& f);

struct OrbitRecord {
  int period = 0;
  std::vector<TriodPoint> points;  // points[i+1] = f(points[i])
  Pattern pattern;
  bool degenerate = false;  // came from an interval of periodic points

  // Displacement total in thirds along the orbit.
  int displacement_thirds() const;
  std::vector<BranchId> itinerary() const;
};

// Every periodic orbit of period <= max_period other than the hub, P itself
// included when its period fits. Sorted by (period, pattern, points).
std::vector<OrbitRecord> periodic_orbits(const PLinearMap& f, int max_period);

// Orbits whose first `branches.size()` iterates follow the given branches
// (the orbit's period divides the sequence length).
std::vector<OrbitRecord> orbits_with_itinerary(const PLinearMap& f, const std::vector<BranchId>& branches);

// Search for an orbit of rotation number num/den (lowest terms), period
// multiple * den for multiple in 1..max_multiple, accepted by `accept`.
// Returns the first accepted orbit or nullopt. Enumeration is exhaustive
// when nothing is accepted.
std::optional<OrbitRecord> find_orbit_with_rotation(const PLinearMap& f, int num, int den, int max_multiple,
                                                    const std::function<bool(const OrbitRecord&)>& accept);

// A forces B, searched through orbits of period(B) <= max_period.
bool forces(const Pattern& a, const Pattern& b, int max_period);

// Does not force a primitive period-2 pattern. Computed from period-2 orbits
// and cross-checked against the oriented-graph criterion; a disagreement
// throws CrossCheckMismatch.
bool is_regular(const Pattern& p);
bool is_regular_by_orbits(const PLinearMap& f);

// The hub is the only fixed point of the P-linear map. Patterns failing this
// are not exhibited by any map fixing only a.
bool fixes_only_hub(const PLinearMap& f);
bool fixes_only_hub(const Pattern& p);

// Pattern of a finite orbit listed in time order.
Pattern pattern_of_orbit(const std::vector<TriodPoint>& points);

}  // namespace triod
