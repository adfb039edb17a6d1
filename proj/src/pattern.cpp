#include "triod/pattern.hpp"

#include "triod/plinear.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace triod {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::DuplicateRank: return "DuplicateRank";
    case ErrorCode::RankGap: return "RankGap";
    case ErrorCode::BadBranch: return "BadBranch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NoCanonicalOrdering: return "NoCanonicalOrdering";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::RotationOneThird: return "RotationOneThird";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::NotTriodTwist: return "NotTriodTwist";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::EquivarianceFailure: return "EquivarianceFailure";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Pattern::Pattern(std::initializer_list<std::pair<int, int>> points) {
  points_.reserve(points.size());
  for (auto [b, r] : points) points_.push_back({BranchId(b), r});
}

int Pattern::count_on(BranchId b) const {
  return static_cast<int>(std::count_if(points_.begin(), points_.end(),
                                        [b](const PointSpec& s) { return s.branch == b; }));
}

std::array<int, 3> Pattern::branch_counts() const {
  std::array<int, 3> k{0, 0, 0};
  for (const auto& s : points_) ++k[static_cast<std::size_t>(s.branch.index())];
  return k;
}

int Pattern::time_of(BranchId b, int rank) const {
  for (int t = 0; t < period(); ++t)
    if (points_[static_cast<std::size_t>(t)].branch == b && points_[static_cast<std::size_t>(t)].rank == rank) return t;
  return -1;
}

std::vector<int> Pattern::times_on(BranchId b) const {
  std::vector<int> ts;
  for (int t = 0; t < period(); ++t)
    if (at(t).branch == b) ts.push_back(t);
  std::sort(ts.begin(), ts.end(), [this](int x, int y) { return at(x).rank < at(y).rank; });
  return ts;
}

TriodPoint Pattern::location(int t) const {
  return TriodPoint::on_branch(at(t).branch, Rational(at(t).rank));
}

Pattern Pattern::time_shifted(int shift) const {
  std::vector<PointSpec> out(points_.size());
  int n = period();
  for (int t = 0; t < n; ++t) out[static_cast<std::size_t>(t)] = at(((t + shift) % n + n) % n);
  return Pattern(std::move(out));
}

Pattern Pattern::relabeled(const std::array<int, 3>& perm) const {
  std::vector<PointSpec> out = points_;
  for (auto& s : out) s.branch = BranchId(perm[static_cast<std::size_t>(s.branch.index())]);
  return Pattern(std::move(out));
}

Pattern primitive_two_cycle() { return Pattern{{0, 1}, {1, 1}}; }
Pattern primitive_three_cycle() { return Pattern{{0, 1}, {1, 1}, {2, 1}}; }
Pattern period_four_example() { return Pattern{{0, 1}, {1, 1}, {2, 1}, {0, 2}}; }

std::vector<ValidationIssue> validate(const Pattern& p) {
  std::vector<ValidationIssue> issues;
  if (p.period() == 0) {
    issues.push_back({ErrorCode::EmptyPattern, "period must be at least 1"});
    return issues;
  }
  std::array<std::vector<int>, 3> ranks;
  for (int t = 0; t < p.period(); ++t) {
    const auto& s = p.at(t);
    if (s.rank < 1) {
      issues.push_back({ErrorCode::RankGap, "rank " + std::to_string(s.rank) + " at time " +
                                                std::to_string(t) + " is below 1"});
      continue;
    }
    ranks[static_cast<std::size_t>(s.branch.index())].push_back(s.rank);
  }
  for (int b = 0; b < 3; ++b) {
    auto& rs = ranks[static_cast<std::size_t>(b)];
    std::sort(rs.begin(), rs.end());
    for (std::size_t i = 1; i < rs.size(); ++i)
      if (rs[i] == rs[i - 1])
        issues.push_back({ErrorCode::DuplicateRank,
                          "rank " + std::to_string(rs[i]) + " repeated on b" + std::to_string(b)});
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs[i] != static_cast<int>(i) + 1) {
        issues.push_back({ErrorCode::RankGap,
                          "rank " + std::to_string(i + 1) + " missing on b" + std::to_string(b)});
        break;
      }
  }
  return issues;
}

void require_valid(const Pattern& p) {
  auto issues = validate(p);
  if (!issues.empty()) throw TriodError(issues.front().code, issues.front().detail);
}

Pattern canonicalize(const Pattern& p) {
  require_valid(p);
  // Points are distinct, so the minimal rotation starts at the minimal point.
  auto it = std::min_element(p.points().begin(), p.points().end());
  return p.time_shifted(static_cast<int>(it - p.points().begin()));
}

bool is_canonical(const Pattern& p) {
  return std::min_element(p.points().begin(), p.points().end()) == p.points().begin();
}

long long pattern_count(int n) {
  if (n < 1) return 0;
  long long f = 1;
  for (int i = 2; i < n; ++i) f *= i;
  return f * (static_cast<long long>(n + 2) * (n + 1) / 2);
}

std::vector<Pattern> enumerate_patterns(int n) {
  std::vector<Pattern> out;
  if (n < 1) return out;
  out.reserve(static_cast<std::size_t>(pattern_count(n)));
  for (int k0 = 0; k0 <= n; ++k0) {
    for (int k1 = 0; k0 + k1 <= n; ++k1) {
      int k2 = n - k0 - k1;
      std::vector<PointSpec> items;
      for (int r = 1; r <= k0; ++r) items.push_back({BranchId(0), r});
      for (int r = 1; r <= k1; ++r) items.push_back({BranchId(1), r});
      for (int r = 1; r <= k2; ++r) items.push_back({BranchId(2), r});
      // items is sorted; items[0] is the minimum and leads every canonical form.
      std::vector<PointSpec> rest(items.begin() + 1, items.end());
      do {
        std::vector<PointSpec> seq;
        seq.reserve(items.size());
        seq.push_back(items.front());
        seq.insert(seq.end(), rest.begin(), rest.end());
        out.emplace_back(std::move(seq));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_pattern(int n, const std::function<void(const Pattern&)>& visit) {
  for (const auto& p : enumerate_patterns(n)) visit(p);
}

Pattern census_representative(const Pattern& p) {
  Pattern best = canonicalize(p);
  for (int s = 1; s < 3; ++s) {
    Pattern q = canonicalize(p.relabeled({s % 3, (1 + s) % 3, (2 + s) % 3}));
    if (q < best) best = q;
  }
  return best;
}

namespace {

// 0 green, 1 black, 2 red for the arrow t -> t+1.
int step_kind(const Pattern& p, int t) { return p.at(t).branch.steps_to(p.at(p.next(t)).branch); }

bool rank_one_points_black(const Pattern& p) {
  for (int b = 0; b < 3; ++b) {
    int t = p.time_of(BranchId(b), 1);
    if (t < 0 || step_kind(p, t) != 1) return false;
  }
  return true;
}

}  // namespace

bool try_orient(const Pattern& p, Pattern& out) {
  if (rank_one_points_black(p)) {
    out = p;
    return true;
  }
  Pattern mirrored = p.relabeled({0, 2, 1});
  if (!rank_one_points_black(mirrored)) return false;
  out = std::move(mirrored);
  return true;
}

Pattern canonical_branch_ordering(const Pattern& p) {
  require_valid(p);
  if (!is_regular(p)) throw TriodError(ErrorCode::NotRegular, to_string(p));
  Pattern oriented;
  if (!try_orient(p, oriented))
    throw TriodError(ErrorCode::NoCanonicalOrdering, "rank-1 points cannot all be black: " + to_string(p));
  Pattern best = canonicalize(oriented);
  for (int s = 1; s < 3; ++s) {
    Pattern q = canonicalize(oriented.relabeled({s % 3, (1 + s) % 3, (2 + s) % 3}));
    if (q < best) best = q;
  }
  return best;
}

std::string serialize(const Pattern& p) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& s : p.points()) pts.push_back({s.branch.index(), s.rank});
  nlohmann::ordered_json j;
  j["period"] = p.period();
  j["points"] = pts;
  return j.dump();
}

Pattern parse_pattern(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw TriodError(ErrorCode::SyntaxError, e.what());
  }
  if (!j.is_object() || !j.contains("period") || !j.contains("points") ||
      !j["period"].is_number_integer() || !j["points"].is_array())
    throw TriodError(ErrorCode::SyntaxError, "expected {\"period\":int,\"points\":[[b,r],...]}");
  std::vector<PointSpec> pts;
  for (const auto& e : j["points"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw TriodError(ErrorCode::SyntaxError, "each point must be [branch, rank]");
    int b = e[0].get<int>();
    if (b < 0 || b > 2) throw TriodError(ErrorCode::BadBranch, "branch " + std::to_string(b) + " not in 0..2");
    pts.push_back({BranchId(b), e[1].get<int>()});
  }
  if (j["period"].get<long long>() != static_cast<long long>(pts.size()))
    throw TriodError(ErrorCode::SyntaxError, "period does not match number of points");
  Pattern p(std::move(pts));
  require_valid(p);
  return p;
}

std::string to_string(const Pattern& p) { return serialize(p); }

}  // namespace triod
