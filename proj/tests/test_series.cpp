#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qv/errors.hpp"
#include "qv/forms.hpp"
#include "qv/series.hpp"

using namespace qv;

namespace {

PuiseuxSeries q_monomial(long e_num, long e_den, const Rational& trunc) {
    return PuiseuxSeries::monomial(FieldValue(1), rat(e_num, e_den), trunc);
}

PuiseuxSeries random_series(std::mt19937& rng, bool sqrt5, bool laurent) {
    std::uniform_int_distribution<long> coef(-9, 9), den(1, 6);
    std::uniform_int_distribution<int64_t> dd(1, 3), len(3, 8), lead(laurent ? -4 : 0, 3);
    const int64_t d = dd(rng);
    const int64_t lo = lead(rng);
    const int64_t n = len(rng);
    std::vector<FieldValue> c;
    for (int64_t k = 0; k < n; ++k) {
        Rational a = rat(coef(rng), den(rng));
        if (sqrt5 && rng() % 3 == 0)
            c.emplace_back(a, rat(coef(rng), den(rng)));
        else
            c.emplace_back(a);
    }
    return PuiseuxSeries::from_block(sqrt5 ? FieldTag::Sqrt5 : FieldTag::Rational, d, lo,
                                     std::move(c), lo + n);
}

bool identically_zero(const PuiseuxSeries& s) { return !s.first_nonzero().has_value(); }

}  // namespace

TEST_CASE("monomial examples") {
    PuiseuxSeries one = PuiseuxSeries::monomial(FieldValue(1), rat(0), rat(10));
    CHECK(one.coeff_at(rat(0)) == FieldValue(1));
    CHECK(one.trunc() == rat(10));

    PuiseuxSeries c_lead = PuiseuxSeries::monomial(FieldValue(3), rat(1, 3), rat(5));
    CHECK(c_lead.valuation() == rat(1, 3));
    CHECK(c_lead.coeff_at(rat(1, 3)) == FieldValue(3));
    CHECK(c_lead.coeff_at(rat(2, 3)) == FieldValue(0));

    PuiseuxSeries lam_lead = PuiseuxSeries::monomial(FieldValue(16), rat(1, 2), rat(4));
    CHECK(lam_lead.valuation() == rat(1, 2));
    CHECK_THROWS_AS(PuiseuxSeries::monomial(FieldValue(1), rat(5), rat(5)), BadParams);
}

TEST_CASE("product of binomials") {
    Rational T(8);
    PuiseuxSeries p = (PuiseuxSeries::constant(FieldValue(1), T) + q_monomial(1, 1, T)) *
                      (PuiseuxSeries::constant(FieldValue(1), T) - q_monomial(1, 1, T));
    CHECK(p.coeff_at(rat(0)) == FieldValue(1));
    CHECK(p.coeff_at(rat(1)) == FieldValue(0));
    CHECK(p.coeff_at(rat(2)) == FieldValue(-1));
}

TEST_CASE("E4 squared against the convolution oracle") {
    auto e4o = oracle::eisenstein(240, 3, 8);
    auto sq = oracle::mul(e4o, e4o, 8);
    CHECK(sq[1] == 480);  // 2*240
    PuiseuxSeries e4 = build_form(FormId::E4, rat(8));
    PuiseuxSeries e4sq = e4 * e4;
    for (size_t k = 0; k < 8; ++k)
        CHECK(e4sq.coeff_at(rat(static_cast<long>(k))).rational() == sq[k]);
}

TEST_CASE("eta-style product against the expansion oracle") {
    // prod_{n<=7} (1-q^n)^3 to order 8
    auto o = oracle::euler_product_pow(8, 3);
    Rational T(8);
    PuiseuxSeries p = PuiseuxSeries::constant(FieldValue(1), T);
    for (long n = 1; n < 8; ++n)
        p = p * (PuiseuxSeries::constant(FieldValue(1), T) - q_monomial(n, 1, T)).pow_int(3);
    for (size_t k = 0; k < 8; ++k)
        CHECK(p.coeff_at(rat(static_cast<long>(k))).rational() == o[k]);
}

TEST_CASE("inverse: geometric series") {
    Rational T(10);
    PuiseuxSeries x = PuiseuxSeries::constant(FieldValue(1), T) - q_monomial(1, 1, T);
    PuiseuxSeries inv = x.inverse();
    for (long k = 0; k < 10; ++k) CHECK(inv.coeff_at(rat(k)) == FieldValue(1));
}

TEST_CASE("inverse: Laurent valuation") {
    Rational T(4);
    PuiseuxSeries x = PuiseuxSeries::monomial(FieldValue(16), rat(1, 2), T) +
                      q_monomial(3, 2, T);
    CHECK(x.inverse().valuation() == rat(-1, 2));
    CHECK(x.inverse().coeff_at(rat(-1, 2)) == FieldValue(rat(1, 16)));
    CHECK_THROWS_AS(PuiseuxSeries::zero(rat(5)).inverse(), ZeroSeries);
}

TEST_CASE("1/E4 against the long-division oracle") {
    auto inv = oracle::divide({1}, oracle::eisenstein(240, 3, 8), 8);
    CHECK(inv[1] == -240);
    PuiseuxSeries e4inv = build_form(FormId::E4, rat(8)).inverse();
    for (size_t k = 0; k < 8; ++k)
        CHECK(e4inv.coeff_at(rat(static_cast<long>(k))).rational() == inv[k]);
}

TEST_CASE("inverse is two-sided to truncation") {
    std::mt19937 rng(23);
    for (int i = 0; i < 300; ++i) {
        PuiseuxSeries x = random_series(rng, true, true);
        if (x.is_zero()) continue;
        PuiseuxSeries prod = x * x.inverse();
        PuiseuxSeries res = prod - PuiseuxSeries::constant(FieldValue(1), prod.trunc());
        CHECK(identically_zero(res));
    }
}

TEST_CASE("compose: geometric stream") {
    auto ones = [](size_t) { return FieldValue(1); };
    PuiseuxSeries inner = q_monomial(1, 1, rat(9));
    PuiseuxSeries g = compose(ones, inner);
    for (long k = 0; k < 9; ++k) CHECK(g.coeff_at(rat(k)) == FieldValue(1));

    PuiseuxSeries zero_inner = PuiseuxSeries::zero(rat(6));
    CHECK(compose(ones, zero_inner).coeff_at(rat(0)) == FieldValue(1));

    CHECK_THROWS_AS(compose(ones, PuiseuxSeries::constant(FieldValue(2), rat(6))),
                    NonPositiveValuation);
}

TEST_CASE("pow_rational examples") {
    Rational T(6);
    // (27q(1+q))^(1/3) = 3 q^(1/3) (1+q)^(1/3)
    PuiseuxSeries x =
        FieldValue(27) * (q_monomial(1, 1, T) + q_monomial(2, 1, T));
    PuiseuxSeries r = x.pow_rational(rat(1, 3));
    CHECK(r.valuation() == rat(1, 3));
    CHECK(r.coeff_at(rat(1, 3)) == FieldValue(3));
    CHECK(r.coeff_at(rat(4, 3)) == FieldValue(1));  // 3 * (1/3)

    PuiseuxSeries q2 = q_monomial(2, 1, rat(7));
    PuiseuxSeries invroot = q2.pow_rational(rat(-1, 2));
    CHECK(invroot.valuation() == rat(-1));
    CHECK(invroot.coeff_at(rat(-1)) == FieldValue(1));

    CHECK_THROWS_AS((FieldValue(2) * q_monomial(0, 1, rat(4))).pow_rational(rat(1, 2)),
                    RootNotInField);
}

TEST_CASE("pow_rational additivity") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> pick(-3, 3), den(1, 3);
    for (int i = 0; i < 300; ++i) {
        PuiseuxSeries base = random_series(rng, false, false);
        if (base.is_zero()) continue;
        // 6th power: leading coefficient has exact roots for denominators 1..3
        PuiseuxSeries x = base.pow_int(6);
        if (x.is_zero()) continue;
        Rational a = rat(pick(rng), den(rng)), b = rat(pick(rng), den(rng));
        PuiseuxSeries lhs = x.pow_rational(a) * x.pow_rational(b);
        PuiseuxSeries rhs = x.pow_rational(a + b);
        CHECK(identically_zero((lhs - rhs).truncated(std::min(lhs.trunc(), rhs.trunc()))));
    }
}

TEST_CASE("rescale examples") {
    PuiseuxSeries e2_lead =
        PuiseuxSeries::constant(FieldValue(1), rat(2)) - FieldValue(24) * q_monomial(1, 1, rat(2));
    PuiseuxSeries scaled = e2_lead.rescale(rat(5));
    CHECK(scaled.coeff_at(rat(5)) == FieldValue(-24));
    CHECK(scaled.coeff_at(rat(3)) == FieldValue(0));
    CHECK(scaled.trunc() == rat(10));

    CHECK(q_monomial(1, 1, rat(3)).rescale(rat(1, 2)).valuation() == rat(1, 2));
    CHECK(eta(rat(2), rat(4)).valuation() == rat(1, 12));
}

TEST_CASE("rescale round trip") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> num(1, 4), den(1, 4);
    for (int i = 0; i < 300; ++i) {
        PuiseuxSeries x = random_series(rng, true, true);
        Rational r = rat(num(rng), den(rng));
        PuiseuxSeries back = x.rescale(r).rescale(1 / r);
        CHECK(identically_zero(x.truncated(back.trunc()) - back));
    }
}

TEST_CASE("coeff_at edges") {
    PuiseuxSeries e4 = build_form(FormId::E4, rat(5));
    CHECK(e4.coeff_at(rat(1)) == FieldValue(240));
    CHECK(e4.coeff_at(rat(2)) == FieldValue(2160));  // 240*sigma3(2), oracle-checked below
    CHECK(oracle::divisor_power_sum(2, 3) == 9);
    CHECK(e4.coeff_at(rat(1, 2)) == FieldValue(0));  // off-lattice below truncation
    CHECK_THROWS_AS(e4.coeff_at(rat(5)), BeyondTruncation);
    PuiseuxSeries c = build_form(FormId::BorweinC, rat(4));
    CHECK(c.coeff_at(rat(0)) == FieldValue(0));  // below the valuation
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(37);
    for (int i = 0; i < 500; ++i) {
        PuiseuxSeries x = random_series(rng, true, true);
        PuiseuxSeries y = random_series(rng, true, true);
        PuiseuxSeries z = random_series(rng, true, false);
        CHECK(identically_zero((x * y) * z - x * (y * z)));
        CHECK(identically_zero(x * (y + z) - (x * y + x * z)));
        CHECK(identically_zero((x + y) - (y + x)));
    }
}

TEST_CASE("claimed truncations never depend on unknown tails") {
    // If an operation's result claims order T, the coefficients below T must
    // not change when an operand's unknown tail (at or beyond its own
    // truncation) changes.  Extend a series with garbage at its truncation
    // and compare each operation's output below the weaker claim.
    std::mt19937 rng(53);
    auto with_tail = [](const PuiseuxSeries& x, const FieldValue& g) {
        std::vector<FieldValue> c(x.coeffs());
        c.push_back(g);
        return PuiseuxSeries::from_block(x.field(), x.denom(), x.min_exp_units(),
                                         std::move(c), x.trunc_units() + 1);
    };
    auto agree_below_claims = [](const PuiseuxSeries& a, const PuiseuxSeries& b) {
        PuiseuxSeries diff = (a - b).truncated(std::min(a.trunc(), b.trunc()));
        return !diff.first_nonzero().has_value();
    };
    for (int i = 0; i < 200; ++i) {
        PuiseuxSeries x = random_series(rng, true, true);
        PuiseuxSeries y = random_series(rng, true, true);
        if (x.is_zero() || y.is_zero()) continue;
        PuiseuxSeries xg = with_tail(x, FieldValue(rat(1000 + i)));
        CHECK(agree_below_claims(x * y, xg * y));
        CHECK(agree_below_claims(x + y, xg + y));
        CHECK(agree_below_claims(x.inverse(), xg.inverse()));
        CHECK(agree_below_claims(x.pow_int(3), xg.pow_int(3)));
        if (x.valuation() > 0) {
            auto ones = [](size_t) { return FieldValue(1); };
            CHECK(agree_below_claims(compose(ones, x), compose(ones, xg)));
        }
    }
}

TEST_CASE("compose with a monomial inner series rescales the stream") {
    auto stream = [](size_t n) { return FieldValue(rat(static_cast<long>(n + 1), 3)); };
    for (long k : {1L, 2L, 3L}) {
        PuiseuxSeries inner = q_monomial(k, 1, rat(12));
        PuiseuxSeries f = compose(stream, inner);
        for (long e = 0; e < 12; ++e) {
            FieldValue expected = (e % k == 0) ? stream(static_cast<size_t>(e / k))
                                               : FieldValue(0);
            CHECK(f.coeff_at(rat(e)) == expected);
        }
    }
}

TEST_CASE("string rendering") {
    PuiseuxSeries lam_start =
        PuiseuxSeries::monomial(FieldValue(16), rat(1, 2), rat(3, 2));
    CHECK(lam_start.str() == "(16)*q^(1/2) + O(q^(3/2))");
}
