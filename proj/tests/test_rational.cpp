// Parsing, printing and canonical form of exact rationals. Everything else
// in the library leans on GMP comparisons, which assume canonical values,
// so these tests pin the normalization behavior hard.

#include "doctest.h"
#include "slackfc/errors.hpp"
#include "slackfc/rational.hpp"

using namespace sfc;

TEST_SUITE("rational") {

TEST_CASE("integers print without a denominator") {
    CHECK(rat_str(Rat(0)) == "0");
    CHECK(rat_str(Rat(7)) == "7");
    CHECK(rat_str(Rat(-3)) == "-3");
    CHECK(rat_str(rat(6, 3)) == "2");
}

TEST_CASE("fractions print reduced") {
    CHECK(rat_str(rat(1, 2)) == "1/2");
    CHECK(rat_str(rat(-6, 8)) == "-3/4");
    CHECK(rat_str(rat(10, 4)) == "5/2");
}

TEST_CASE("parse round trips") {
    for (const char* text : {"0", "1", "-1", "3/4", "-5/7", "123456789/2", "22/7"}) {
        const Rat v = rat_parse(text);
        CHECK(rat_str(v) == text);
        CHECK(rat_parse(rat_str(v)) == v);
    }
}

TEST_CASE("parse canonicalizes") {
    CHECK(rat_parse("2/4") == rat(1, 2));
    CHECK(rat_parse("2/4") == rat_parse("1/2"));
    CHECK(rat_str(rat_parse("-4/6")) == "-2/3");
    CHECK(rat_parse("0/5") == 0);
}

TEST_CASE("parse rejects malformed input") {
    for (const char* text : {"", "/", "1/", "/2", "1/0", "0/0", "-7/0", "a",
                             "1.5", "1 / 2", "2/4/8", "--3", "1e3"}) {
        CHECK_THROWS_AS(rat_parse(text), Error);
    }
}

TEST_CASE("constructor helper canonicalizes") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, 4) == rat(-1, 2));
    CHECK(rat(9, 3) == Rat(3));
    CHECK(rat(5) == Rat(5));
}

TEST_CASE("absolute value") {
    CHECK(rat_abs(rat(-3, 7)) == rat(3, 7));
    CHECK(rat_abs(rat(3, 7)) == rat(3, 7));
    CHECK(rat_abs(Rat(0)) == 0);
}

TEST_CASE("arithmetic stays exact") {
    const Rat third = rat(1, 3);
    CHECK(third + third + third == 1);
    CHECK(rat(1, 10) + rat(2, 10) == rat(3, 10));
    CHECK(rat(1, 2) * rat(2, 3) == rat(1, 3));
    CHECK(rat(7, 2) - rat(7, 2) == 0);
}

} // TEST_SUITE
