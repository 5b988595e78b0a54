#include <doctest.h>

#include "oracles.hpp"
#include "qv/arith.hpp"
#include "qv/errors.hpp"
#include "qv/forms.hpp"

using namespace qv;

TEST_CASE("eta expansion matches the Euler-product oracle") {
    auto o = oracle::euler_product_pow(30, 1);  // prod (1-q^n)
    CHECK(o[0] == 1);
    CHECK(o[1] == -1);
    CHECK(o[2] == -1);
    CHECK(o[3] == 0);
    CHECK(o[5] == 1);  // pentagonal pattern
    PuiseuxSeries e = eta(rat(1), rat(30));
    for (long k = 0; k < 29; ++k)
        CHECK(e.coeff_at(rat(1, 24) + rat(k)).rational() == o[static_cast<size_t>(k)]);
    CHECK(eta(rat(2), rat(4)).valuation() == rat(1, 12));
}

TEST_CASE("eta quotient valuations match the exponent sums") {
    for (const auto& info : form_catalog()) {
        auto spec = eta_spec_for(info.id);
        if (!spec) continue;
        const Rational expected = eta_quotient_valuation(*spec);
        PuiseuxSeries s = build_form(info.id, expected + 3);
        CHECK(s.valuation() == expected);
    }
}

TEST_CASE("Eisenstein spot values") {
    CHECK(build_form(FormId::E6, rat(3)).coeff_at(rat(1)) == FieldValue(-504));
    CHECK(build_form(FormId::E4, rat(3)).coeff_at(rat(2)) ==
          FieldValue(Rational(240) * oracle::divisor_power_sum(2, 3)));
    CHECK(build_form(FormId::E2, rat(3)).coeff_at(rat(2)) ==
          FieldValue(Rational(-24) * oracle::divisor_power_sum(2, 1)));
}

TEST_CASE("b(q) from the eta quotient") {
    PuiseuxSeries b = build_form(FormId::BorweinB, rat(6));
    CHECK(b.coeff_at(rat(0)) == FieldValue(1));
    CHECK(b.coeff_at(rat(1)) == FieldValue(-3));
}

TEST_CASE("InvJ against an independent division oracle") {
    const size_t n = 10;
    auto e4 = oracle::eisenstein(240, 3, n);
    auto e6 = oracle::eisenstein(-504, 5, n);
    auto e4cube = oracle::mul(oracle::mul(e4, e4, n), e4, n);
    auto e6sq = oracle::mul(e6, e6, n);
    oracle::Block delta1728(n, 0);
    for (size_t k = 0; k < n; ++k) delta1728[k] = e4cube[k] - e6sq[k];
    // 1/J = (E4^3 - E6^2)/E4^3; the numerator starts at q^1
    auto quot = oracle::divide(delta1728, e4cube, n);
    CHECK(quot[0] == 0);
    CHECK(quot[1] == 1728);
    PuiseuxSeries invj = build_form(FormId::InvJ, rat(8));
    CHECK(invj.valuation() == rat(1));
    CHECK(invj.coeff_at(rat(1)) == FieldValue(1728));
    for (long k = 1; k < 8; ++k)
        CHECK(invj.coeff_at(rat(k)).rational() == quot[static_cast<size_t>(k)]);
}

TEST_CASE("j has the classical integer expansion") {
    PuiseuxSeries j = build_form(FormId::LittleJ, rat(3));
    CHECK(j.valuation() == rat(-1));
    CHECK(j.coeff_at(rat(-1)) == FieldValue(1));
    CHECK(j.coeff_at(rat(0)) == FieldValue(744));
    CHECK(j.coeff_at(rat(1)) == FieldValue(196884));
    CHECK(j.coeff_at(rat(2)) == FieldValue(21493760));
}

TEST_CASE("theta squares against the convolution oracle") {
    const size_t units = 64;  // 1/8 lattice
    for (int kind : {0, 1, 2}) {
        auto sum = oracle::theta_sum_eighths(kind, units);
        auto sq = oracle::mul(sum, sum, units);
        PuiseuxSeries t = theta_sq(kind, rat(8));
        for (size_t u = 0; u < units; ++u)
            CHECK(t.coeff_at(rat(static_cast<long>(u), 8)).rational() == sq[u]);
    }
    CHECK(theta_sq(1, rat(4)).valuation() == rat(1, 4));
    // sum-of-two-squares counts
    PuiseuxSeries t00 = theta_sq(0, rat(4));
    CHECK(t00.coeff_at(rat(0)) == FieldValue(1));
    CHECK(t00.coeff_at(rat(1, 2)) == FieldValue(4));
    CHECK(t00.coeff_at(rat(1)) == FieldValue(4));
    CHECK(t00.coeff_at(rat(3, 2)) == FieldValue(0));
    CHECK(t00.coeff_at(rat(5, 2)) == FieldValue(8));
}

TEST_CASE("lambda expansion (derived from the theta oracle)") {
    // oracle route: theta10^4 / theta00^4 by brute-force convolution + division
    const size_t units = 40;  // 1/8 lattice
    auto t00 = oracle::theta_sum_eighths(0, units);
    auto t10 = oracle::theta_sum_eighths(1, units);
    auto sq = [&](const oracle::Block& b) { return oracle::mul(b, b, units); };
    auto num = sq(sq(t10)), den = sq(sq(t00));
    // num starts at q^(4/8); shift down before dividing
    oracle::Block shifted(num.begin() + 4, num.end());
    auto lam_shifted = oracle::divide(shifted, den, units - 4);
    CHECK(lam_shifted[0] == 16);   // q^(1/2)
    CHECK(lam_shifted[4] == -128); // q^1
    CHECK(lam_shifted[8] == 704);  // q^(3/2)
    PuiseuxSeries lam = build_form(FormId::Lambda, rat(4));
    CHECK(lam.coeff_at(rat(1, 2)) == FieldValue(16));
    CHECK(lam.coeff_at(rat(1)) == FieldValue(-128));
    CHECK(lam.coeff_at(rat(3, 2)) == FieldValue(704));
    CHECK(lam.coeff_at(rat(2)) == FieldValue(-3072));
    for (size_t u = 0; u + 4 < units && u < 24; ++u)
        CHECK(lam.coeff_at(rat(static_cast<long>(u + 4), 8)).rational() == lam_shifted[u]);
}

TEST_CASE("phi and Berndt x") {
    PuiseuxSeries phi = build_form(FormId::Phi, rat(5));
    CHECK(phi.coeff_at(rat(0)) == FieldValue(1));
    CHECK(phi.coeff_at(rat(1)) == FieldValue(2));
    CHECK(phi.coeff_at(rat(2)) == FieldValue(0));
    CHECK(phi.coeff_at(rat(4)) == FieldValue(2));
    PuiseuxSeries x = build_form(FormId::BerndtX, rat(4));
    CHECK(x.valuation() == rat(1));
    CHECK(x.coeff_at(rat(1)) == FieldValue(16));
    CHECK(x.coeff_at(rat(2)) == FieldValue(-128));  // 16*(-8): odd-part denominator
}

TEST_CASE("level-5 forms") {
    PuiseuxSeries v = build_form(FormId::V5, rat(4));
    CHECK(v.coeff_at(rat(0)) == FieldValue(1));
    CHECK(v.coeff_at(rat(1)) == FieldValue(rat(-5, 2), rat(-5, 2)));
    PuiseuxSeries w = build_form(FormId::W5, rat(4));
    CHECK(w.coeff_at(rat(1)) == v.coeff_at(rat(1)).conj());

    PuiseuxSeries vs = build_form(FormId::VSubst, rat(4));
    CHECK(vs.valuation() == rat(1));
    CHECK(vs.coeff_at(rat(1)) == FieldValue(1));  // (W-V) q-coeff 5 sqrt5 over 5 sqrt5

    PuiseuxSeries f = build_form(FormId::FLevel5, rat(3));
    CHECK(f.coeff_at(rat(0)) == FieldValue(rat(11, 2), rat(5, 2)));

    PuiseuxSeries g = build_form(FormId::GLevel5, rat(4));
    CHECK(g.valuation() == rat(1));
    CHECK(g.coeff_at(rat(1)) == FieldValue(1));
    CHECK(g.coeff_at(rat(2)) == FieldValue(-5));
}

TEST_CASE("dual routes agree at build level") {
    for (FormId id : {FormId::BorweinA, FormId::BorweinB, FormId::BorweinC, FormId::Delta,
                      FormId::V5, FormId::W5, FormId::GLevel5, FormId::S5b, FormId::T5b,
                      FormId::P5b, FormId::Q5b, FormId::P6a, FormId::Q6a, FormId::P6b,
                      FormId::Q6b, FormId::Q6c, FormId::T6c, FormId::R6d, FormId::U6d,
                      FormId::X6e}) {
        auto [a, b] = build_dual_route(id, rat(10));
        PuiseuxSeries diff = a - b;
        CHECK(!diff.first_nonzero().has_value());
    }
    CHECK_THROWS_AS(build_dual_route(FormId::E4, rat(6)), SingleRouteOnly);
}

TEST_CASE("lattice route values") {
    auto a = oracle::lattice_a(8);
    CHECK(a[0] == 1);
    CHECK(a[1] == 6);
    CHECK(a[2] == 0);  // m^2+mn+n^2 = 2 has no solutions
    PuiseuxSeries built = build_form(FormId::BorweinA, rat(8));
    for (long k = 0; k < 8; ++k)
        CHECK(built.coeff_at(rat(k)).rational() == a[static_cast<size_t>(k)]);
}

TEST_CASE("catalog lookups") {
    CHECK(form_by_name("E4").has_value());
    CHECK(form_by_name("Lambda").has_value());
    CHECK(!form_by_name("nope").has_value());
    CHECK(form_info(FormId::V5).field == FieldTag::Sqrt5);
    CHECK(form_info(FormId::Psi).has_dual_route == false);
    // aliases share the constructor
    auto p6e = build_form(FormId::P6e, rat(6));
    auto a6 = build_form(FormId::BorweinA, rat(6));
    CHECK(!(p6e - a6).first_nonzero().has_value());
    CHECK_THROWS_AS(build_form(FormId::E4, rat(0)), InsufficientOrder);
}

TEST_CASE("half-integral starred series") {
    PuiseuxSeries q6c = build_form(FormId::Q6c, rat(3));
    CHECK(q6c.valuation() == rat(1, 2));
    CHECK(q6c.coeff_at(rat(1, 2)) == FieldValue(1));
    CHECK(q6c.coeff_at(rat(1)) ==
          FieldValue(Rational(static_cast<long>(d_star_jk(1, 3, 2)) -
                              static_cast<long>(d_star_jk(2, 3, 2)))));
    PuiseuxSeries x6e = build_form(FormId::X6e, rat(3));
    CHECK(x6e.valuation() == rat(0));
    CHECK(x6e.coeff_at(rat(0)) == FieldValue(1));
}
