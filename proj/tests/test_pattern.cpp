#include "triod/pattern.hpp"

#include <doctest.h>

#include <set>

using namespace triod;

namespace {

// Every (branch, rank) sequence of length n that validates, up to time rotation.
std::set<Pattern> brute_force_corpus(int n) {
  std::set<Pattern> out;
  int symbols = 3 * n;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<PointSpec> pts;
    for (int d : digits) pts.push_back({BranchId(d % 3), d / 3 + 1});
    Pattern p(pts);
    if (validate(p).empty()) out.insert(canonicalize(p));
    int i = 0;
    while (i < n && ++digits[static_cast<std::size_t>(i)] == symbols) digits[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("pattern counts follow (n-1)! * C(n+2, 2)") {
  const long long expected[] = {3, 6, 20, 90, 504, 3360, 25920};
  for (int n = 1; n <= 7; ++n) {
    CHECK(pattern_count(n) == expected[n - 1]);
    long long seen = 0;
    for_each_pattern(n, [&](const Pattern&) { ++seen; });
    CHECK(seen == expected[n - 1]);
  }
}

TEST_CASE("enumeration matches brute force up to time rotation") {
  for (int n = 1; n <= 5; ++n) {
    auto listed = enumerate_patterns(n);
    std::set<Pattern> unique(listed.begin(), listed.end());
    CHECK(unique.size() == listed.size());
    CHECK(unique == brute_force_corpus(n));
    for (const auto& p : listed) CHECK(is_canonical(p));
  }
}

TEST_CASE("serialization round trip") {
  Pattern e4 = period_four_example();
  CHECK(serialize(e4) == R"({"period":4,"points":[[0,1],[1,1],[2,1],[0,2]]})");
  CHECK(parse_pattern(serialize(e4)) == e4);
  CHECK_THROWS_AS(parse_pattern("{"), TriodError);
  CHECK_THROWS_AS(parse_pattern(R"({"period":2,"points":[[0,1],[0,1]]})"), TriodError);
  CHECK_THROWS_AS(parse_pattern(R"({"period":1,"points":[[0,2]]})"), TriodError);
  CHECK_THROWS_AS(parse_pattern(R"({"period":1,"points":[[3,1]]})"), TriodError);
}

TEST_CASE("validation reports each defect") {
  CHECK(validate(Pattern{{0, 1}, {1, 1}}).empty());
  CHECK_FALSE(validate(Pattern{{0, 1}, {0, 1}}).empty());
  CHECK_FALSE(validate(Pattern{{0, 1}, {0, 3}}).empty());
  CHECK_FALSE(validate(Pattern(std::vector<PointSpec>{})).empty());
}

TEST_CASE("canonicalization picks the minimal time rotation") {
  Pattern e4 = period_four_example();
  for (int s = 0; s < 4; ++s) CHECK(canonicalize(e4.time_shifted(s)) == canonicalize(e4));
  CHECK(e4.times_on(BranchId(0)) == std::vector<int>{0, 3});
  CHECK(e4.branch_counts() == std::array<int, 3>{2, 1, 1});
}

TEST_CASE("orientation reflects so that innermost points are black") {
  Pattern e3 = primitive_three_cycle();
  Pattern out;
  REQUIRE(try_orient(e3.relabeled({0, 2, 1}), out));
  CHECK(out == e3);
  REQUIRE(try_orient(e3, out));
  CHECK(out == e3);
}
