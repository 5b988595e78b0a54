#include <doctest.h>

#include <random>

#include "qv/rational.hpp"

using namespace qv;

TEST_CASE("canonical form") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat(3, -6).get_den() == 2);  // sign lives in the numerator
    CHECK(rat_str(rat(-10, 4)) == "-5/2");
    CHECK(rat_str(rat(7)) == "7");
}

TEST_CASE("parsing") {
    CHECK(rat_parse("5/6") == rat(5, 6));
    CHECK(rat_parse("-3") == rat(-3));
    CHECK_THROWS(rat_parse("x"));
}

TEST_CASE("floor and ceil") {
    CHECK(rat_floor(rat(7, 2)) == 3);
    CHECK(rat_ceil(rat(7, 2)) == 4);
    CHECK(rat_floor(rat(-7, 2)) == -4);
    CHECK(rat_ceil(rat(-7, 2)) == -3);
    CHECK(rat_ceil(rat(6)) == 6);
}

TEST_CASE("nth_root_if_exact examples") {
    CHECK(*nth_root_if_exact(rat(27), 3) == rat(3));
    CHECK(*nth_root_if_exact(rat(16), 2) == rat(4));
    CHECK(!nth_root_if_exact(rat(2), 2));
    CHECK(*nth_root_if_exact(rat(-27, 8), 3) == rat(-3, 2));
    CHECK(!nth_root_if_exact(rat(-4), 2));
    CHECK(*nth_root_if_exact(rat(0), 5) == rat(0));
    CHECK(!nth_root_if_exact(rat(27, 4), 3));
}

TEST_CASE("nth_root recovers exact powers") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 20), deg(1, 5);
    for (int i = 0; i < 500; ++i) {
        Rational x = rat(num(rng), den(rng));
        unsigned n = static_cast<unsigned>(deg(rng));
        Rational p(1);
        for (unsigned k = 0; k < n; ++k) p *= x;
        auto r = nth_root_if_exact(p, n);
        REQUIRE(r.has_value());
        if (n % 2 == 0)
            CHECK(*r == Rational(abs(x)));
        else
            CHECK(*r == x);
    }
}
