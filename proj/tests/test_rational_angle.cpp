#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quasigeo/angle.hpp"
#include "quasigeo/rational.hpp"

using namespace qg;

TEST_CASE("rational parse and format round trip") {
    CHECK(to_string(*parse_rational("5/4")) == "5/4");
    CHECK(to_string(*parse_rational("13")) == "13");
    CHECK(to_string(*parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(*parse_rational("0")) == "0");
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("").has_value());
    CHECK(!parse_rational("a/b").has_value());
    CHECK(!parse_rational("1/").has_value());
}

TEST_CASE("decimal formatting is exact long division") {
    CHECK(to_decimal(Rational(1) / 3, 6) == "0.333333");
    CHECK(to_decimal(Rational(2) / 3, 6) == "0.666667");
    CHECK(to_decimal(Rational(5) / 4, 6) == "1.250000");
    CHECK(to_decimal(Rational(-1) / 8, 3) == "-0.125");
    CHECK(to_decimal(Rational(7), 0) == "7");
}

TEST_CASE("angle of axis vectors") {
    CHECK(ExactAngle::of_vector(1, 0).quarters == 0);
    CHECK(ExactAngle::of_vector(0, 1).quarters == 1);
    CHECK(ExactAngle::of_vector(-1, 0).quarters == 2);
    CHECK(ExactAngle::of_vector(0, -1).quarters == 3);
    CHECK(ExactAngle::of_vector(0, 1).is_multiple_of_quarter());
    CHECK(ExactAngle::of_vector(3, 1).quarters == 0);
    CHECK(ExactAngle::of_vector(-3, 1).quarters == 1);
}

TEST_CASE("angle arithmetic agrees with vector rotation") {
    // atan(1/3) + atan(1/2) = atan(1), verified via complex products:
    // (3+i)(2+i) = 5+5i.
    ExactAngle a = ExactAngle::of_vector(3, 1);
    ExactAngle b = ExactAngle::of_vector(2, 1);
    ExactAngle c = a + b;
    CHECK(c == ExactAngle::of_vector(1, 1));
    CHECK((c - b) == a);
    CHECK((c - a) == b);
}

TEST_CASE("addition carries across the quadrant") {
    ExactAngle a = ExactAngle::of_vector(1, 2);
    ExactAngle b = ExactAngle::of_vector(1, 3);
    ExactAngle s = a + b;  // (1+2i)(1+3i) = -5+5i, angle 3pi/4
    CHECK(s.quarters == 1);
    CHECK(s == ExactAngle::of_vector(-1, 1));
}

TEST_CASE("subtraction borrows across the quadrant") {
    ExactAngle a = ExactAngle::of_vector(1, 1);
    ExactAngle b = ExactAngle::of_vector(1, 2);
    ExactAngle d = a - b;  // negative fractional part
    CHECK(d + b == a);
    CHECK(d.quarters == -1);
}

TEST_CASE("leq_pi boundary cases") {
    CHECK(ExactAngle::right_angles(2).leq_pi());       // exactly pi
    CHECK(!ExactAngle{2, 5, 1}.leq_pi());              // just past pi
    CHECK(ExactAngle{1, 5, 1}.leq_pi());
    CHECK(!ExactAngle::right_angles(3).leq_pi());
    CHECK(ExactAngle::zero().leq_pi());
}

TEST_CASE("ordering is exact") {
    ExactAngle a = ExactAngle::of_vector(100000, 1);
    ExactAngle b = ExactAngle::of_vector(100001, 1);
    CHECK(b < a);
    CHECK(a == ExactAngle::of_vector(200000, 2));
    CHECK(ExactAngle::of_vector(1, 1) < ExactAngle::of_vector(1, 2));
}

TEST_CASE("mod_quarters wraps into range") {
    ExactAngle neg{-1, 2, 1};
    ExactAngle wrapped = neg.mod_quarters(3);
    CHECK(wrapped.quarters == 2);
    CHECK(ExactAngle{4, 1, 0}.mod_quarters(3).quarters == 1);
}
