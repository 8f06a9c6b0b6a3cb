#include <catch2/catch_amalgamated.hpp>

#include "ohmgraph/rational.hpp"

using namespace ohmgraph;

TEST_CASE("parse_rational handles fractions, integers, decimals") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-3/4") == rat(-3, 4));
    CHECK(parse_rational("12") == rat(12));
    CHECK(parse_rational("-12") == rat(-12));
    CHECK(parse_rational("0.25") == rat(1, 4));
    CHECK(parse_rational("-1.5") == rat(-3, 2));
    CHECK(parse_rational(" 2/6 ") == rat(1, 3));
    CHECK(parse_rational(".5") == rat(1, 2));
    CHECK(parse_rational("3.") == rat(3));
    CHECK(parse_rational("0.1") == rat(1, 10));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_rational("-"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
}

TEST_CASE("to_string is canonical") {
    CHECK(to_string(rat(4, 8)) == "1/2");
    CHECK(to_string(rat(-4, 8)) == "-1/2");
    CHECK(to_string(rat(8, 4)) == "2");
    CHECK(to_string(parse_rational("0.500")) == "1/2");
    CHECK(to_string(rat(0)) == "0");
}

TEST_CASE("arithmetic stays exact at scale") {
    Rational x = rat(1, 3);
    for (int i = 0; i < 100; ++i) x = x * rat(7, 5) + rat(1, 9);
    Rational y = x;
    for (int i = 0; i < 100; ++i) y = (y - rat(1, 9)) / rat(7, 5);
    CHECK(y == rat(1, 3));
}
