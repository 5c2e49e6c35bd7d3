#include <doctest.h>

#include "legmosaic/bounds.hpp"

using namespace legmosaic;

TEST_CASE("integer square roots") {
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(1) == 1);
  CHECK(isqrt_floor(121) == 11);
  CHECK(isqrt_floor(120) == 10);
  CHECK(isqrt_ceil(121) == 11);
  CHECK(isqrt_ceil(122) == 12);
  for (long long x = 0; x <= 5000; ++x) {
    long long f = isqrt_floor(x);
    CHECK(f * f <= x);
    CHECK((f + 1) * (f + 1) > x);
  }
}

TEST_CASE("lower bound anchors") {
  BoundReport a = lower_bounds({-5, 4});
  REQUIRE(a.lower_combinatorial.has_value());
  CHECK(*a.lower_combinatorial == 4);  // ceil(sqrt(11))
  CHECK(*a.lower_cone_rot == 4);

  BoundReport b = lower_bounds({-12, 1});
  REQUIRE(b.lower_board.has_value());
  CHECK(*b.lower_board == 5);

  BoundReport c = lower_bounds({-1, 0});
  REQUIRE(c.lower_cone_tb.has_value());
  CHECK(*c.lower_cone_tb == 1);
  REQUIRE(c.lower_board.has_value());
  CHECK(*c.lower_board == 2);
  CHECK(c.best_lower == 2);

  // Hypotheses gate each bound.
  BoundReport d = lower_bounds({-100, 2});
  CHECK_FALSE(d.lower_combinatorial.has_value());
  CHECK(d.lower_board.has_value());
  BoundReport e = lower_bounds({3, 1});
  CHECK(e.lower_combinatorial.has_value());
  CHECK_FALSE(e.lower_board.has_value());
  CHECK_FALSE(e.lower_cone_tb.has_value());
}

TEST_CASE("cone bound relations") {
  // The board bound exceeds the tb cone bound by exactly 1 or 2 whenever
  // both apply.
  for (long long tb = -10000; tb <= -1; ++tb) {
    BoundReport r = lower_bounds({tb, 0});
    REQUIRE(r.lower_board.has_value());
    REQUIRE(r.lower_cone_tb.has_value());
    long long diff = *r.lower_board - *r.lower_cone_tb;
    CHECK(diff >= 1);
    CHECK(diff <= 2);
  }
  // The rot cone bound always equals the combinatorial bound.
  for (long long tb = -50; tb <= 20; ++tb)
    for (long long rot = -6; rot <= 6; ++rot) {
      BoundReport r = lower_bounds({tb, rot});
      CHECK(r.lower_combinatorial == r.lower_cone_rot);
    }
}

TEST_CASE("unknot pair predicate") {
  CHECK(is_unknot_pair({-1, 0}));
  CHECK(is_unknot_pair({-2, 1}));
  CHECK(is_unknot_pair({-2, -1}));
  CHECK(is_unknot_pair({-19, 4}));
  CHECK(is_unknot_pair({-29, 0}));
  CHECK_FALSE(is_unknot_pair({0, 1}));    // tb too high
  CHECK_FALSE(is_unknot_pair({-1, 2}));   // outside the cone
  CHECK_FALSE(is_unknot_pair({-2, 0}));   // even parity
  CHECK_FALSE(is_unknot_pair({-3, 3}));   // tb + |rot| = 0 > -1
}

TEST_CASE("unknot upper bound anchors") {
  CHECK(unknot_upper_bound({-29, 0}) == 7);
  CHECK(unknot_upper_bound({-19, 4}) == 7);
  CHECK(unknot_upper_bound({-1, 0}) == 3);
  CHECK_THROWS_AS(unknot_upper_bound({-2, 0}), Error);

  // Outer boundary: both formulas agree there.
  CHECK(unknot_upper_bound_extremal({-5, 4}) == unknot_upper_bound({-5, 4}));
  CHECK(unknot_upper_bound_extremal({-5, -4}) == unknot_upper_bound({-5, 4}));
  CHECK_THROWS_AS(unknot_upper_bound_extremal({-7, 4}), Error);
  CHECK_THROWS_AS(unknot_upper_bound_extremal({-29, 0}), Error);
}

TEST_CASE("crab bucket tb formula") {
  CHECK(crab_tb(5) == -12);
  CHECK(crab_tb(7) == -30);
  CHECK(crab_tb(8) == -39);
  CHECK(crab_tb(6) == -17);
  CHECK_THROWS_AS(crab_tb(4), Error);

  // Sharpness of the board bound along the family.
  for (int n = 5; n <= 64; ++n) {
    BoundReport r = lower_bounds({crab_tb(n), 1});
    REQUIRE(r.lower_board.has_value());
    CHECK(*r.lower_board == n);
  }
}
