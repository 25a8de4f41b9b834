#include "doctest.h"
#include "helpers.hpp"
#include "latconv/ext_real.hpp"

using namespace latconv;
using th::q;
using th::v;

TEST_CASE("primitive vectors") {
  CHECK(primitive(th::vq({q(1, 2), q(-3, 4)})) == v({2, -3}));
  CHECK(primitive(v({0, 0})) == v({0, 0}));
  CHECK(primitive(v({-4, 6})) == v({-2, 3}));
  CHECK(primitive_line(v({-4, 6})) == v({2, -3}));
}

TEST_CASE("positive multiples") {
  Rational t;
  CHECK(positive_multiple(v({2, 4}), v({1, 2}), t));
  CHECK(t == 2);
  CHECK_FALSE(positive_multiple(v({-2, -4}), v({1, 2}), t));
  CHECK_FALSE(positive_multiple(v({2, 3}), v({1, 2}), t));
  CHECK(same_direction(v({3, 0}), v({1, 0})));
  CHECK_FALSE(same_direction(v({0, 0}), v({1, 0})));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == q(3, 4));
  CHECK(parse_rational("-7") == q(-7));
  CHECK(parse_rational("6/8") == q(3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(dot(v({1}), v({1, 2})), DimensionError);
  CHECK_THROWS_AS(require_dim(v({1}), 2, "x"), DimensionError);
}

TEST_CASE("extended reals") {
  ExtReal pinf = ExtReal::pos_inf(), ninf = ExtReal::neg_inf();
  CHECK(ninf < ExtReal(q(-1000)));
  CHECK(ExtReal(q(1000)) < pinf);
  CHECK(-pinf == ninf);
  CHECK(pinf + ExtReal(3) == pinf);
  CHECK(ExtReal(q(1, 2)) + ExtReal(q(1, 3)) == ExtReal(q(5, 6)));
  CHECK_THROWS_AS(pinf + ninf, std::logic_error);
  CHECK_THROWS_AS(pinf.value(), std::logic_error);
  CHECK(ExtReal::parse("-inf") == ninf);
  CHECK(ExtReal::parse("+inf") == pinf);
  CHECK(ExtReal::parse("-2/4").str() == "-1/2");
  CHECK(pinf.str() == "+inf");
  CHECK(ext_max(ninf, ExtReal(1)) == ExtReal(1));
  CHECK(ExtReal(2).scaled(q(3, 2)) == ExtReal(3));
}
