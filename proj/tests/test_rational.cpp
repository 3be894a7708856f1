#include "urdd/rational.hpp"

#include <doctest.h>

using urdd::RationalAngle;

TEST_CASE("RationalAngle normalizes into [0, 2) turns of pi") {
  CHECK(RationalAngle::of(9, 2) == RationalAngle::of(1, 2));
  CHECK(RationalAngle::of(-1, 2) == RationalAngle::of(3, 2));
  CHECK(RationalAngle::of(6, 3) == RationalAngle::of(0, 1));
  CHECK(RationalAngle::of(4, -2) == RationalAngle::of(0, 1));
  CHECK(RationalAngle::of(10, 4).str() == "1/2");
}

TEST_CASE("RationalAngle arithmetic stays exact") {
  const RationalAngle a = RationalAngle::of(1, 3);
  const RationalAngle b = RationalAngle::of(1, 2);
  CHECK((a + b) == RationalAngle::of(5, 6));
  CHECK((a - b) == RationalAngle::of(11, 6));
  CHECK(a.scaled(7) == RationalAngle::of(1, 3));
  CHECK(a.scaled(4) == RationalAngle::of(4, 3));
}

TEST_CASE("RationalAngle radians") {
  CHECK(RationalAngle::of(1, 2).radians() == doctest::Approx(1.5707963267948966));
  CHECK(RationalAngle::of(0, 1).radians() == 0.0);
}

TEST_CASE("RationalAngle parsing") {
  CHECK(RationalAngle::parse("3/2") == RationalAngle::of(3, 2));
  CHECK(RationalAngle::parse("-1/2") == RationalAngle::of(3, 2));
  CHECK(RationalAngle::parse("2") == RationalAngle::of(2, 1));
  CHECK(!RationalAngle::parse("1/0"));
  CHECK(!RationalAngle::parse("a/b"));
  CHECK(!RationalAngle::parse("1/2/3"));
  CHECK(!RationalAngle::parse(""));
}
