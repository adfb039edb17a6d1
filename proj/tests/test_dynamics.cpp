#include "triod/loop_graph.hpp"
#include "triod/plinear.hpp"

#include <doctest.h>

using namespace triod;

namespace {

TriodPoint at(int b, long num, long den = 1) { return TriodPoint::on_branch(BranchId(b), make_rational(num, den)); }

}  // namespace

TEST_CASE("P-linear map moves each marked point along the cycle") {
  for (const Pattern& p : {primitive_two_cycle(), primitive_three_cycle(), period_four_example()}) {
    PLinearMap f = build_plinear(p);
    for (int t = 0; t < p.period(); ++t) CHECK(to_string(f.evaluate(p.location(t))) == to_string(p.location(p.next(t))));
    CHECK(f.evaluate(TriodPoint::hub()).is_hub());
  }
}

TEST_CASE("P-linear map interpolates between marked points") {
  PLinearMap f = build_plinear(period_four_example());
  CHECK(f.evaluate(at(0, 3, 2)).is_hub());
  CHECK(to_string(f.evaluate(at(0, 7, 4))) == to_string(at(0, 1, 2)));
  CHECK(to_string(f.evaluate(at(0, 1, 2))) == to_string(at(1, 1, 2)));
  CHECK(to_string(f.evaluate(at(2, 1, 2))) == to_string(at(0, 1)));
}

TEST_CASE("modality") {
  CHECK(modality(primitive_three_cycle()) == 1);
  CHECK(modality(period_four_example()) == 2);
}

TEST_CASE("forcing and regularity") {
  CHECK_FALSE(forces(primitive_three_cycle(), primitive_two_cycle(), 2));
  CHECK(forces(period_four_example(), primitive_three_cycle(), 3));
  CHECK_FALSE(is_regular(primitive_two_cycle()));
  CHECK(is_regular(primitive_three_cycle()));
  CHECK(is_regular(period_four_example()));
  CHECK(fixes_only_hub(period_four_example()));
}

TEST_CASE("oriented graph of the period-4 example") {
  OrientedGraph g = build_graph(period_four_example());
  CHECK(dump_graph(g) ==
        "x_0 -> x_1 d=1/3 black\n"
        "x_1 -> x_2 d=1/3 black\n"
        "x_2 -> x_0 d=1/3 black\n"
        "x_2 -> x_3 d=1/3 black\n"
        "x_3 -> x_0 d=0/3 green\n"
        "x_3 -> x_1 d=1/3 black\n");
  CHECK(g.is_transitive());
  CHECK(dump_graph(build_graph_by_sampling(period_four_example())) == dump_graph(g));
  auto rs = rotation_set(g);
  CHECK(rs.lo == make_rational(1, 4));
  CHECK(rs.hi == make_rational(1, 3));
}

TEST_CASE("rotation pairs and modified rotation pairs") {
  auto rp = fundamental_loop(primitive_three_cycle()).rotation_pair();
  CHECK(rp == RotationPair{1, 3});
  CHECK(fundamental_loop(period_four_example()).rotation_pair() == RotationPair{1, 4});
  CHECK(mrp_of({2, 6}) == ModifiedRotationPair{make_rational(1, 3), 2});
  CHECK(mrp_of({0, 4}) == ModifiedRotationPair{Rational(0), 4});
  CHECK(mrp_of({1, 3}) == ModifiedRotationPair{make_rational(1, 3), 1});
}

TEST_CASE("mixed two-loops detect irregular patterns") {
  CHECK(has_mixed_two_loop(build_graph(primitive_two_cycle())));
  CHECK_FALSE(has_mixed_two_loop(build_graph(primitive_three_cycle())));
}
