#pragma once

// Geometry of the triod Y: three branches glued at the hub a.

#include "triod/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace triod {

// Branch label modulo 3, clockwise.
class BranchId {
 public:
  constexpr BranchId() = default;
  constexpr explicit BranchId(int index) : index_(((index % 3) + 3) % 3) {}

  constexpr int index() const { return index_; }

  constexpr BranchId shifted(int k) const { return BranchId(index_ + k); }

  // k in {0,1,2} with other == this + k.
  constexpr int steps_to(BranchId other) const {
    return ((other.index_ - index_) % 3 + 3) % 3;
  }

  friend constexpr auto operator<=>(BranchId, BranchId) = default;

 private:
  int index_ = 0;
};

constexpr BranchId branch_shift(BranchId b, int k) { return b.shifted(k); }

// Either the hub a, or a point at positive distance `coord` from a on `branch`.
class TriodPoint {
 public:
  TriodPoint() = default;  // the hub

  static TriodPoint hub() { return {}; }
  // Throws std::invalid_argument if coord <= 0.
  static TriodPoint on_branch(BranchId branch, Rational coord);

  bool is_hub() const { return !branch_.has_value(); }
  // Precondition: !is_hub().
  BranchId branch() const { return *branch_; }
  // Distance from a; 0 for the hub.
  const Rational& coord() const { return coord_; }

  bool lies_on(BranchId b) const { return branch_ == b; }

  friend bool operator==(const TriodPoint& x, const TriodPoint& y) {
    return x.branch_ == y.branch_ && x.coord_ == y.coord_;
  }

  // Total order for containers: hub first, then by branch, then by coord.
  friend bool operator<(const TriodPoint& x, const TriodPoint& y);

 private:
  std::optional<BranchId> branch_;
  Rational coord_ = 0;
};

std::string to_string(const TriodPoint& p);

enum class TreeOrder { Greater, Less, Equal, Incomparable };

// x > y iff same branch and x farther from a, or y is the hub and x is not.
TreeOrder tree_compare(const TriodPoint& x, const TriodPoint& y);

// x >= y in the tree order.
inline bool tree_geq(const TriodPoint& x, const TriodPoint& y) {
  auto c = tree_compare(x, y);
  return c == TreeOrder::Greater || c == TreeOrder::Equal;
}

// The unique arc joining two points of Y.
class Arc {
 public:
  Arc(TriodPoint from, TriodPoint to);

  const TriodPoint& from() const { return from_; }
  const TriodPoint& to() const { return to_; }

  bool contains_hub() const;
  bool is_degenerate() const { return from_ == to_; }
  Rational length() const;

  // Farthest distance from a reached on branch b, or nullopt if the arc
  // does not meet b away from a.
  std::optional<Rational> extent(BranchId b) const;

  // Closest distance from a among arc points on b (0 when the arc passes a).
  std::optional<Rational> inner_extent(BranchId b) const;

  bool contains(const TriodPoint& p) const;

  // Constant-speed parametrization: s in [0,1] from from() to to().
  TriodPoint point_at(const Rational& s) const;

 private:
  TriodPoint from_;
  TriodPoint to_;
};

Arc arc_between(const TriodPoint& x, const TriodPoint& y);

}  // namespace triod
