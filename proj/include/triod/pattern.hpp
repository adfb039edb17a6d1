#pragma once

// Combinatorial cycles on the triod: a branch and a per-branch rank for each
// time index, with dynamics t -> t+1 mod n.

#include "triod/core.hpp"
#include "triod/error.hpp"

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace triod {

struct PointSpec {
  BranchId branch;
  int rank = 1;  // 1 is nearest to a

  friend auto operator<=>(const PointSpec&, const PointSpec&) = default;
};

class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<PointSpec> points) : points_(std::move(points)) {}
  // Convenience: {{branch, rank}, ...}
  Pattern(std::initializer_list<std::pair<int, int>> points);

  int period() const { return static_cast<int>(points_.size()); }
  const std::vector<PointSpec>& points() const { return points_; }
  const PointSpec& at(int t) const { return points_[static_cast<std::size_t>(t)]; }

  int next(int t) const { return (t + 1) % period(); }
  int prev(int t) const { return (t + period() - 1) % period(); }

  int count_on(BranchId b) const;
  std::array<int, 3> branch_counts() const;

  // Time index of the point with this branch and rank, or -1.
  int time_of(BranchId b, int rank) const;

  // Time indices on b ordered outward from a (rank 1 first).
  std::vector<int> times_on(BranchId b) const;

  // Location of the point at time t in the standard realization (coord = rank).
  TriodPoint location(int t) const;

  // Rotate time: result.at(t) == at(t + shift).
  Pattern time_shifted(int shift) const;

  // Relabel branch i as branch perm(i).
  Pattern relabeled(const std::array<int, 3>& perm) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& x, const Pattern& y) { return x.points_ <=> y.points_; }

 private:
  std::vector<PointSpec> points_;
};

// Named fixtures.
Pattern primitive_two_cycle();    // E2: b0 <-> b1
Pattern primitive_three_cycle();  // E3
Pattern period_four_example();    // E4: (b0,1),(b1,1),(b2,1),(b0,2)

struct ValidationIssue {
  ErrorCode code;
  std::string detail;
};

std::vector<ValidationIssue> validate(const Pattern& p);
// Throws TriodError with the first issue.
void require_valid(const Pattern& p);

// Time rotation with lexicographically minimal (branch, rank) sequence.
Pattern canonicalize(const Pattern& p);
bool is_canonical(const Pattern& p);

// Every valid pattern of period exactly n, once per time-rotation class, in
// lexicographic order.
std::vector<Pattern> enumerate_patterns(int n);
void for_each_pattern(int n, const std::function<void(const Pattern&)>& visit);

// Count of enumerate_patterns(n) without materializing: (n-1)! * C(n+2, 2).
long long pattern_count(int n);

// Canonical representative under time rotation and cyclic branch relabeling,
// used only for census tables.
Pattern census_representative(const Pattern& p);

// Orientation in which every rank-1 point is black, choosing among the three
// cyclic relabelings the lexicographically smallest canonical form.
// Errors: NotRegular, NoCanonicalOrdering.
Pattern canonical_branch_ordering(const Pattern& p);

// Reflects branch labels (b1 <-> b2) when that makes every rank-1 point
// black; time indices are kept. Returns false, leaving out untouched, when
// neither orientation works. Does not check regularity.
bool try_orient(const Pattern& p, Pattern& out);

// {"period":n,"points":[[b,r],...]}
std::string serialize(const Pattern& p);
// Errors: SyntaxError plus validate errors.
Pattern parse_pattern(std::string_view text);

std::string to_string(const Pattern& p);

}  // namespace triod
