#include "triod/classification.hpp"
#include "triod/conjugacy.hpp"
#include "triod/rotation_theory.hpp"
#include "triod/sharkovsky.hpp"

#include <doctest.h>

using namespace triod;

TEST_CASE("colors and rotation numbers") {
  auto c3 = color_census(primitive_three_cycle());
  CHECK(c3.black == 3);
  CHECK(c3.green + c3.red == 0);
  CHECK(rotation_number(primitive_three_cycle()) == make_rational(1, 3));
  auto c4 = color_census(period_four_example());
  CHECK(c4.green == 1);
  CHECK(c4.black == 3);
  CHECK(rotation_number(period_four_example()) == make_rational(1, 4));
}

TEST_CASE("code table of the period-4 example") {
  CodeTable t = code_table(period_four_example(), 0);
  CHECK(t[0] == 0);
  CHECK(t[1] == make_rational(1, 4));
  CHECK(t[2] == make_rational(1, 2));
  CHECK(t[3] == make_rational(-1, 4));
  CHECK(chi(t) == make_rational(3, 4));
  CHECK(t.unfloored(1) == make_rational(-1, 12));
  CHECK(chi_unfloored(t) == make_rational(1, 4));
  CodeTable t1 = code_table(period_four_example(), 1);
  for (int x = 0; x < 4; ++x) CHECK(t1.unfloored(x) - t1.unfloored(0) == t.unfloored(x) - t.unfloored(0));
  CHECK(t1[3] - t1[0] == t[3] - t[0]);
  CHECK_THROWS_AS(code_table(primitive_three_cycle(), 0), TriodError);
}

TEST_CASE("twist classification") {
  CHECK(is_triod_twist(primitive_three_cycle()));
  CHECK(is_triod_twist(period_four_example()));
  CHECK_FALSE(is_triod_twist(primitive_two_cycle()));
  CHECK(is_order_preserving(period_four_example()));
}

TEST_CASE("classification records") {
  auto e4 = classify(period_four_example());
  CHECK(e4.twist);
  CHECK(e4.modality == 2);
  CHECK(*e4.chi == make_rational(3, 4));
  CHECK(*e4.laps == 3);
  CHECK(*e4.bound == 5);
  CHECK(to_csv_row(e4) == R"csv(4,1/4,"(1,4)","(1/4,1)",1,3,0,true,true,true,2,3/4,3,5)csv");
  auto e2 = classify(primitive_two_cycle());
  CHECK_FALSE(e2.twist);
  CHECK_FALSE(e2.regular);
  CHECK(std::string(csv_header()) == "period,rho,rp,mrp,green,black,red,regular,order_preserving,twist,modality,chi,laps,bound");
}

TEST_CASE("conjugacy to the rotation orbit") {
  CHECK(conjugacy_json(build_conjugacy(primitive_three_cycle())) ==
        R"({"rho":"1/3","psi":[[0,"0/1"],[1,"1/3"],[2,"2/3"]],"laps":3,"bound":4})");
  auto r = build_conjugacy(period_four_example());
  CHECK(conjugacy_json(r) == R"({"rho":"1/4","psi":[[0,"1/4"],[1,"1/2"],[2,"3/4"],[3,"0/1"]],"laps":3,"bound":5})");
  CHECK(r.equivariant);
  CHECK(r.bijective);
  CHECK(psi_laps(r, period_four_example()) == 3);
  try {
    build_conjugacy(primitive_two_cycle());
    FAIL("expected NotTriodTwist");
  } catch (const TriodError& e) {
    CHECK(e.code() == ErrorCode::NotTriodTwist);
  }
}

TEST_CASE("Sharkovsky ordering") {
  using std::strong_ordering;
  CHECK(sharkovsky_compare(3, 5) == strong_ordering::greater);
  CHECK(sharkovsky_compare(5, 6) == strong_ordering::greater);
  CHECK(sharkovsky_compare(6, 10) == strong_ordering::greater);
  CHECK(sharkovsky_compare(12, 8) == strong_ordering::greater);
  CHECK(sharkovsky_compare(8, 4) == strong_ordering::greater);
  CHECK(sharkovsky_compare(1, 2) == strong_ordering::less);
  CHECK(sharkovsky_compare(7, 7) == strong_ordering::equal);
  auto inf = SharkovskyKey::two_infinity();
  CHECK(sharkovsky_compare(SharkovskyKey(24), inf) == strong_ordering::greater);
  CHECK(sharkovsky_compare(inf, SharkovskyKey(1024)) == strong_ordering::greater);
  CHECK(sh_set(4, 10) == std::set<long>{1, 2, 4});
  CHECK(sh_set(inf, 10) == std::set<long>{1, 2, 4, 8});
  CHECK(sh_set(3, 10).size() == 10);
  CHECK(in_sh(SharkovskyKey(0), SharkovskyKey(1)));
  CHECK(to_string(inf) == "2^inf");
}

TEST_CASE("mrp hull membership") {
  MrpHull hull{{make_rational(1, 4), SharkovskyKey(2)}, {make_rational(1, 3), SharkovskyKey(1)}};
  CHECK(mrp_hull_contains(hull, {make_rational(2, 7), SharkovskyKey(3)}));
  CHECK(mrp_hull_contains(hull, {make_rational(1, 4), SharkovskyKey(1)}));
  CHECK_FALSE(mrp_hull_contains(hull, {make_rational(1, 4), SharkovskyKey(4)}));
  CHECK(mrp_hull_contains(hull, {make_rational(1, 3), SharkovskyKey(0)}));
  CHECK_FALSE(mrp_hull_contains(hull, {make_rational(1, 3), SharkovskyKey(2)}));
  CHECK_FALSE(mrp_hull_contains(hull, {make_rational(1, 2), SharkovskyKey(1)}));
}
