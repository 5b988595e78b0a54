#include <doctest.h>

#include "qv/errors.hpp"
#include "qv/hypergeom.hpp"

using namespace qv;

TEST_CASE("coefficient examples") {
    auto c = f21_coeffs({rat(1, 2), rat(1, 2), rat(1)}, 3);
    CHECK(c[0] == rat(1));
    CHECK(c[1] == rat(1, 4));
    CHECK(c[2] == rat(9, 64));

    auto d = f21_coeffs({rat(1, 3), rat(2, 3), rat(1)}, 2);
    CHECK(d[0] == rat(1));
    CHECK(d[1] == rat(2, 9));

    CHECK(f21_coeffs({rat(-7, 2), rat(5), rat(3, 4)}, 1)[0] == rat(1));
}

TEST_CASE("contiguous coefficient ratio") {
    HypergeomParams p{rat(1, 12), rat(5, 12), rat(1)};
    auto c = f21_coeffs(p, 40);
    for (size_t n = 0; n + 1 < c.size(); ++n) {
        Rational nn(static_cast<long>(n));
        CHECK(c[n + 1] * ((p.c + nn) * (nn + 1)) == c[n] * ((p.a + nn) * (p.b + nn)));
    }
}

TEST_CASE("compose with the identity reproduces the coefficients") {
    HypergeomParams p{rat(1, 2), rat(1, 2), rat(1)};
    PuiseuxSeries t = PuiseuxSeries::monomial(FieldValue(1), rat(1), rat(12));
    PuiseuxSeries f = f21_compose(p, t);
    auto c = f21_coeffs(p, 12);
    for (long n = 0; n < 12; ++n) CHECK(f.coeff_at(rat(n)).rational() == c[static_cast<size_t>(n)]);
}

TEST_CASE("empty inner series gives the constant term") {
    PuiseuxSeries zero_inner = PuiseuxSeries::zero(rat(6));
    PuiseuxSeries f = f21_compose({rat(1, 2), rat(1, 2), rat(1)}, zero_inner);
    CHECK(f.coeff_at(rat(0)) == FieldValue(1));
    CHECK(f.coeff_at(rat(3)) == FieldValue(0));
}

TEST_CASE("bad parameters are rejected") {
    CHECK_THROWS_AS(f21_coeffs({rat(1, 2), rat(1, 2), rat(0)}, 3), BadParams);
    CHECK_THROWS_AS(f21_coeffs({rat(1, 2), rat(1, 2), rat(-2)}, 3), BadParams);
}
