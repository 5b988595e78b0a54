#include "qv/forms.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "qv/arith.hpp"
#include "qv/errors.hpp"

namespace qv {

namespace {

const FieldValue kSqrt5 = FieldValue::sqrt5();

FieldValue half(long a, long b) {  // (a + b sqrt5)/2
    return FieldValue(rat(a, 2), rat(b, 2));
}

// c0 + sum_{n>=1} coef(n) q^(n/step_den), n/step_den < order
PuiseuxSeries divisor_series(const FieldValue& c0, const std::function<FieldValue(long)>& coef,
                             long step_den, const Rational& order) {
    const int64_t d = step_den;
    const int64_t tu = rat_ceil(order * Rational(static_cast<long>(d)));
    std::vector<FieldValue> block(static_cast<size_t>(std::max<int64_t>(tu, 0)), FieldValue());
    if (block.empty()) throw InsufficientOrder();
    block[0] = c0;
    FieldTag tag = c0.tag();
    for (int64_t n = 1; n < tu; ++n) {
        block[static_cast<size_t>(n)] = coef(static_cast<long>(n));
        tag = promote(tag, block[static_cast<size_t>(n)].tag());
    }
    return PuiseuxSeries::from_block(tag, d, 0, std::move(block), tu);
}

PuiseuxSeries eisenstein(long scale, unsigned k, const Rational& order) {
    return divisor_series(FieldValue(1),
                          [scale, k](long n) {
                              return FieldValue(Rational(scale) *
                                                Rational(sigma_k(static_cast<uint64_t>(n), k)));
                          },
                          1, order);
}

// sum c q^e over integer exponents, as a D=1 series truncated at `order`
PuiseuxSeries qpoly(const std::vector<std::pair<long, FieldValue>>& terms,
                    const Rational& order) {
    const int64_t tu = rat_ceil(order);
    std::vector<FieldValue> block(static_cast<size_t>(tu), FieldValue());
    FieldTag tag = FieldTag::Rational;
    for (const auto& [e, c] : terms) {
        if (e < tu) {
            block[static_cast<size_t>(e)] += c;
            tag = promote(tag, c.tag());
        }
    }
    return PuiseuxSeries::from_block(tag, 1, 0, std::move(block), tu);
}

PuiseuxSeries one(const Rational& order) {
    return PuiseuxSeries::constant(FieldValue(1), order);
}

}  // namespace

PuiseuxSeries eta(const Rational& r, const Rational& order) {
    if (r <= 0) throw BadParams("eta rescale must be positive");
    if (order <= r / 24) throw InsufficientOrder();
    // pentagonal series: q^(r/24) sum_k (-1)^k q^(r k(3k-1)/2)
    const int64_t rn = r.get_num().get_si();
    const int64_t rd = r.get_den().get_si();
    const int64_t d = 24 * rd;
    const int64_t tu = rat_ceil(order * Rational(static_cast<long>(d)));
    const int64_t base = rn;  // r/24 in units of 1/(24 rd)
    std::vector<FieldValue> block(static_cast<size_t>(tu - base), FieldValue());
    auto add_term = [&](long k) -> bool {
        const int64_t g = static_cast<int64_t>(k) * (3 * static_cast<int64_t>(k) - 1) / 2;
        const int64_t e = base + 24 * rn * g;  // r/24 + r g in units of 1/d
        if (e >= tu) return false;
        block[static_cast<size_t>(e - base)] += FieldValue((k % 2 == 0) ? 1 : -1);
        return true;
    };
    add_term(0);
    for (long k = 1;; ++k) {
        bool any = add_term(k);
        any = add_term(-k) || any;
        if (!any) break;
    }
    return PuiseuxSeries::from_block(FieldTag::Rational, d, base, std::move(block), tu);
}

Rational eta_quotient_valuation(const std::vector<EtaFactor>& spec) {
    Rational v(0);
    for (const auto& f : spec) v += Rational(f.e) * f.r / 24;
    return v;
}

PuiseuxSeries eta_quotient(const std::vector<EtaFactor>& spec, const Rational& order) {
    Rational den_val(0);
    for (const auto& f : spec)
        if (f.e < 0) den_val += Rational(-f.e) * f.r / 24;
    const Rational build_order = order + 2 * den_val + 1;
    PuiseuxSeries num = one(build_order), den = one(build_order);
    for (const auto& f : spec) {
        PuiseuxSeries factor = eta(f.r, build_order).pow_int(std::abs(f.e));
        if (f.e > 0)
            num = num * factor;
        else if (f.e < 0)
            den = den * factor;
    }
    return num * den.inverse();
}

PuiseuxSeries theta_sq(int which, const Rational& order) {
    const int64_t d = (which == 1) ? 8 : 2;
    const int64_t tu = rat_ceil(order * Rational(static_cast<long>(d)));
    std::vector<FieldValue> block(static_cast<size_t>(std::max<int64_t>(tu, 0)), FieldValue());
    if (block.empty()) throw InsufficientOrder();
    if (which == 0 || which == 2) {
        // sum (-1)^(n, for 01) q^(n^2/2): units n^2 over D=2
        block[0] = FieldValue(1);
        for (long n = 1;; ++n) {
            int64_t e = static_cast<int64_t>(n) * n;
            if (e >= tu) break;
            long sign = (which == 2 && n % 2 != 0) ? -2 : 2;
            block[static_cast<size_t>(e)] = FieldValue(sign);
        }
    } else {
        // sum q^((2n+1)^2/8): units (2n+1)^2 over D=8, each hit twice
        for (long n = 0;; ++n) {
            int64_t e = static_cast<int64_t>(2 * n + 1) * (2 * n + 1);
            if (e >= tu) break;
            block[static_cast<size_t>(e)] = FieldValue(2);
        }
    }
    PuiseuxSeries sum =
        PuiseuxSeries::from_block(FieldTag::Rational, d, 0, std::move(block), tu);
    return sum * sum;
}

namespace {

// ---- level 1/2 builders -------------------------------------------------

PuiseuxSeries build_delta_eisenstein(const Rational& order) {
    PuiseuxSeries e4 = eisenstein(240, 3, order);
    PuiseuxSeries e6 = eisenstein(-504, 5, order);
    return FieldValue(rat(1, 1728)) * (e4.pow_int(3) - e6.pow_int(2));
}

PuiseuxSeries build_little_j(const Rational& order) {
    const Rational t = order + 2;
    PuiseuxSeries e4 = eisenstein(240, 3, t);
    return e4.pow_int(3) * build_delta_eisenstein(t).inverse();
}

PuiseuxSeries build_invj(const Rational& order) {
    PuiseuxSeries e4 = eisenstein(240, 3, order);
    PuiseuxSeries e6 = eisenstein(-504, 5, order);
    PuiseuxSeries e4cube = e4.pow_int(3);
    return (e4cube - e6.pow_int(2)) * e4cube.inverse();
}

PuiseuxSeries build_phi(const Rational& order) {
    const int64_t tu = rat_ceil(order);
    std::vector<FieldValue> block(static_cast<size_t>(tu), FieldValue());
    block[0] = FieldValue(1);
    for (long n = 1; static_cast<int64_t>(n) * n < tu; ++n)
        block[static_cast<size_t>(n) * static_cast<size_t>(n)] = FieldValue(2);
    return PuiseuxSeries::from_block(FieldTag::Rational, 1, 0, std::move(block), tu);
}

PuiseuxSeries build_psi(const Rational& order) {
    const int64_t tu = rat_ceil(order);
    std::vector<FieldValue> block(static_cast<size_t>(tu), FieldValue());
    for (long n = 0;; ++n) {
        int64_t e = static_cast<int64_t>(n) * (n + 1) / 2;
        if (e >= tu) break;
        block[static_cast<size_t>(e)] = FieldValue(1);
    }
    return PuiseuxSeries::from_block(FieldTag::Rational, 1, 0, std::move(block), tu);
}

PuiseuxSeries build_berndt_x(const Rational& order) {
    const Rational t = order;  // all factors have valuation 0
    const long N = static_cast<long>(rat_ceil(t));
    PuiseuxSeries num = one(t), den = one(t);
    for (long n = 1; 2 * n - 1 < N; ++n) {
        if (2 * n < N)
            num = num * qpoly({{0, FieldValue(1)}, {2 * n, FieldValue(1)}}, t).pow_int(8);
        den = den * qpoly({{0, FieldValue(1)}, {2 * n - 1, FieldValue(1)}}, t).pow_int(8);
    }
    return PuiseuxSeries::monomial(FieldValue(16), 1, t + 1) * num * den.inverse();
}

// ---- level 3 builders ---------------------------------------------------

PuiseuxSeries build_borwein_a(const Rational& order) {
    return divisor_series(FieldValue(1),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long v = static_cast<long>(d_jk(1, 3, nn)) -
                                       static_cast<long>(d_jk(2, 3, nn));
                              return FieldValue(6 * v);
                          },
                          1, order);
}

PuiseuxSeries lattice_a(const Rational& order) {
    const int64_t tu = rat_ceil(order);
    std::vector<FieldValue> block(static_cast<size_t>(tu), FieldValue());
    const long M = static_cast<long>(std::ceil(std::sqrt(2.0 * static_cast<double>(tu)))) + 2;
    for (long m = -M; m <= M; ++m)
        for (long n = -M; n <= M; ++n) {
            int64_t e = static_cast<int64_t>(m) * m + static_cast<int64_t>(m) * n +
                        static_cast<int64_t>(n) * n;
            if (e < tu) block[static_cast<size_t>(e)] += FieldValue(1);
        }
    return PuiseuxSeries::from_block(FieldTag::Rational, 1, 0, std::move(block), tu);
}

PuiseuxSeries lattice_b(const Rational& order) {
    // omega^(n-m) pairs collapse to 1 when 3 | (n-m) and -1/2 otherwise
    const int64_t tu = rat_ceil(order);
    std::vector<FieldValue> block(static_cast<size_t>(tu), FieldValue());
    const long M = static_cast<long>(std::ceil(std::sqrt(2.0 * static_cast<double>(tu)))) + 2;
    const FieldValue minus_half(rat(-1, 2));
    for (long m = -M; m <= M; ++m)
        for (long n = -M; n <= M; ++n) {
            int64_t e = static_cast<int64_t>(m) * m + static_cast<int64_t>(m) * n +
                        static_cast<int64_t>(n) * n;
            if (e >= tu) continue;
            block[static_cast<size_t>(e)] +=
                ((n - m) % 3 == 0) ? FieldValue(1) : minus_half;
        }
    return PuiseuxSeries::from_block(FieldTag::Rational, 1, 0, std::move(block), tu);
}

PuiseuxSeries lattice_c(const Rational& order) {
    // exponents (n+1/3)^2+(n+1/3)(m+1/3)+(m+1/3)^2 = m^2+mn+n^2+m+n+1/3
    const int64_t tu3 = rat_ceil(order * 3);
    std::vector<FieldValue> block(static_cast<size_t>(std::max<int64_t>(tu3 - 1, 0)),
                                  FieldValue());
    if (block.empty()) throw InsufficientOrder();
    const long M = static_cast<long>(std::ceil(std::sqrt(2.0 * static_cast<double>(tu3)))) + 3;
    for (long m = -M; m <= M; ++m)
        for (long n = -M; n <= M; ++n) {
            int64_t e3 = 3 * (static_cast<int64_t>(m) * m + static_cast<int64_t>(m) * n +
                              static_cast<int64_t>(n) * n + m + n) +
                         1;  // units of 1/3
            if (e3 >= 1 && e3 < tu3) block[static_cast<size_t>(e3 - 1)] += FieldValue(1);
        }
    return PuiseuxSeries::from_block(FieldTag::Rational, 3, 1, std::move(block), tu3);
}

PuiseuxSeries build_xlevel3(const Rational& order) {
    const Rational t = order + 2;
    PuiseuxSeries a = build_form(FormId::BorweinA, t);
    PuiseuxSeries c = build_form(FormId::BorweinC, t);
    return c.pow_int(3) * a.pow_int(3).inverse();
}

// ---- level 5 builders ---------------------------------------------------

// prod (1-q^n)^5 / (1-q^(5n))^3 * (1 + alpha q^n + q^(2n))^5
PuiseuxSeries level5_vw_product(const FieldValue& alpha, const Rational& order) {
    const long N = static_cast<long>(rat_ceil(order));
    PuiseuxSeries num = one(order), den = one(order);
    for (long n = 1; n < N; ++n) {
        num = num * qpoly({{0, FieldValue(1)}, {n, FieldValue(-1)}}, order).pow_int(5);
        num = num *
              qpoly({{0, FieldValue(1)}, {n, alpha}, {2 * n, FieldValue(1)}}, order).pow_int(5);
        if (5 * n < N)
            den = den * qpoly({{0, FieldValue(1)}, {5 * n, FieldValue(-1)}}, order).pow_int(3);
    }
    return num * den.inverse();
}

PuiseuxSeries divisor_v5(const Rational& order) {
    const FieldValue c1 = FieldValue(rat(-5, 2)) * (FieldValue(1) + kSqrt5);
    const FieldValue c2 = FieldValue(rat(5, 2)) * (FieldValue(7) + FieldValue(3) * kSqrt5);
    return divisor_series(FieldValue(1),
                          [c1, c2](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long u = static_cast<long>(d_jk(1, 5, nn)) -
                                       static_cast<long>(d_jk(4, 5, nn));
                              long v = static_cast<long>(d_jk(2, 5, nn)) -
                                       static_cast<long>(d_jk(3, 5, nn));
                              return FieldValue(u) * c1 + FieldValue(v) * c2;
                          },
                          1, order);
}

PuiseuxSeries divisor_w5(const Rational& order) {
    const FieldValue c1 = FieldValue(rat(5, 2)) * (FieldValue(-1) + kSqrt5);
    const FieldValue c2 = FieldValue(rat(5, 2)) * (FieldValue(7) - FieldValue(3) * kSqrt5);
    return divisor_series(FieldValue(1),
                          [c1, c2](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long u = static_cast<long>(d_jk(1, 5, nn)) -
                                       static_cast<long>(d_jk(4, 5, nn));
                              long v = static_cast<long>(d_jk(2, 5, nn)) -
                                       static_cast<long>(d_jk(3, 5, nn));
                              return FieldValue(u) * c1 + FieldValue(v) * c2;
                          },
                          1, order);
}

PuiseuxSeries build_flevel5(const Rational& order) {
    const long N = static_cast<long>(rat_ceil(order));
    PuiseuxSeries num = one(order), den = one(order);
    const FieldValue ap = half(1, 1), am = half(1, -1);
    for (long n = 1; n < N; ++n) {
        num = num *
              qpoly({{0, FieldValue(1)}, {n, ap}, {2 * n, FieldValue(1)}}, order).pow_int(5);
        den = den *
              qpoly({{0, FieldValue(1)}, {n, am}, {2 * n, FieldValue(1)}}, order).pow_int(5);
    }
    return half(11, 5) * (num * den.inverse());
}

PuiseuxSeries build_glevel5(const Rational& order) {
    const long N = static_cast<long>(rat_ceil(order));
    PuiseuxSeries num = one(order), den = one(order);
    auto factor = [&](long e) {
        return qpoly({{0, FieldValue(1)}, {e, FieldValue(-1)}}, order).pow_int(5);
    };
    for (long n = 1; 5 * n - 4 < N; ++n) {
        if (5 * n - 1 < N) num = num * factor(5 * n - 1);
        num = num * factor(5 * n - 4);
        if (5 * n - 2 < N) den = den * factor(5 * n - 2);
        if (5 * n - 3 < N) den = den * factor(5 * n - 3);
    }
    return PuiseuxSeries::monomial(FieldValue(1), 1, order + 1) * num * den.inverse();
}

PuiseuxSeries glevel5_from_f(const Rational& order) {
    // Farkas-Kra fractional-linear change g = (mu f - 1)/(f + mu), mu = (-11+5sqrt5)/2
    const FieldValue mu = half(-11, 5);
    PuiseuxSeries f = build_form(FormId::FLevel5, order);
    PuiseuxSeries num = mu * f - one(order);
    PuiseuxSeries den = f + PuiseuxSeries::constant(mu, order);
    return num * den.inverse();
}

PuiseuxSeries build_s5b(const Rational& order) {
    const long N = static_cast<long>(rat_ceil(order));
    PuiseuxSeries num = one(order), den = one(order);
    for (long n = 1; n < N; ++n) {
        num = num * qpoly({{0, FieldValue(1)}, {n, FieldValue(-1)}}, order).pow_int(2);
        if (5 * n - 2 < N)
            den = den *
                  qpoly({{0, FieldValue(1)}, {5 * n - 2, FieldValue(-1)}}, order).pow_int(5);
        if (5 * n - 3 < N)
            den = den *
                  qpoly({{0, FieldValue(1)}, {5 * n - 3, FieldValue(-1)}}, order).pow_int(5);
    }
    return PuiseuxSeries::monomial(FieldValue(1), 1, order + 1) * num * den.inverse();
}

PuiseuxSeries build_t5b(const Rational& order) {
    const long N = static_cast<long>(rat_ceil(order));
    PuiseuxSeries num = one(order), den = one(order);
    for (long n = 1; n < N; ++n) {
        num = num * qpoly({{0, FieldValue(1)}, {n, FieldValue(-1)}}, order).pow_int(2);
        if (5 * n - 1 < N)
            den = den *
                  qpoly({{0, FieldValue(1)}, {5 * n - 1, FieldValue(-1)}}, order).pow_int(5);
        if (5 * n - 4 < N)
            den = den *
                  qpoly({{0, FieldValue(1)}, {5 * n - 4, FieldValue(-1)}}, order).pow_int(5);
    }
    return num * den.inverse();
}

PuiseuxSeries divisor_s5b(const Rational& order) {
    PuiseuxSeries s = divisor_series(FieldValue(0),
                                     [](long n) {
                                         auto nn = static_cast<uint64_t>(n);
                                         long u = static_cast<long>(d_jk(1, 5, nn)) -
                                                  static_cast<long>(d_jk(4, 5, nn));
                                         long v = static_cast<long>(d_jk(2, 5, nn)) -
                                                  static_cast<long>(d_jk(3, 5, nn));
                                         return FieldValue(u - 3 * v);
                                     },
                                     1, order);
    return s;
}

PuiseuxSeries divisor_t5b(const Rational& order) {
    return divisor_series(FieldValue(1),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long u = static_cast<long>(d_jk(1, 5, nn)) -
                                       static_cast<long>(d_jk(4, 5, nn));
                              long v = static_cast<long>(d_jk(2, 5, nn)) -
                                       static_cast<long>(d_jk(3, 5, nn));
                              return FieldValue(3 * u + v);
                          },
                          1, order);
}

PuiseuxSeries divisor_p5b(const Rational& order) {
    return divisor_series(FieldValue(1),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long v = static_cast<long>(d_jk(2, 5, nn)) -
                                       static_cast<long>(d_jk(3, 5, nn));
                              return FieldValue(10 * v);
                          },
                          1, order);
}

PuiseuxSeries divisor_q5b(const Rational& order) {
    return divisor_series(FieldValue(3),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long u = static_cast<long>(d_jk(1, 5, nn)) -
                                       static_cast<long>(d_jk(4, 5, nn));
                              return FieldValue(10 * u);
                          },
                          1, order);
}

// ---- level 6 divisor routes ----------------------------------------------

PuiseuxSeries divisor_p6a(const Rational& order) {
    return divisor_series(FieldValue(1),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long v = static_cast<long>(d_jk(1, 6, nn)) +
                                       static_cast<long>(d_jk(2, 6, nn)) -
                                       static_cast<long>(d_jk(4, 6, nn)) -
                                       static_cast<long>(d_jk(5, 6, nn));
                              return FieldValue(2 * v);
                          },
                          1, order);
}

PuiseuxSeries divisor_q6a(const Rational& order) {
    return divisor_series(FieldValue(1),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long u = static_cast<long>(d_jk(1, 6, nn)) -
                                       static_cast<long>(d_jk(5, 6, nn));
                              long v = static_cast<long>(d_jk(2, 6, nn)) -
                                       static_cast<long>(d_jk(4, 6, nn));
                              return FieldValue(-6 * u + 18 * v);
                          },
                          1, order);
}

PuiseuxSeries divisor_p6b(const Rational& order) {
    return divisor_series(FieldValue(1),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long u = static_cast<long>(d_jk(1, 6, nn)) -
                                       static_cast<long>(d_jk(5, 6, nn));
                              return FieldValue(3 * u);
                          },
                          1, order);
}

PuiseuxSeries divisor_q6b(const Rational& order) {
    return divisor_series(FieldValue(0),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long c = static_cast<long>(d_jk(1, 6, nn)) -
                                       static_cast<long>(d_jk(5, 6, nn));
                              if (n % 2 == 0) {
                                  auto h = static_cast<uint64_t>(n / 2);
                                  c -= 2 * (static_cast<long>(d_jk(1, 3, h)) -
                                            static_cast<long>(d_jk(2, 3, h)));
                              }
                              return FieldValue(c);
                          },
                          1, order);
}

PuiseuxSeries divisor_q6c(const Rational& order) {
    return divisor_series(FieldValue(0),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long v = static_cast<long>(d_star_jk(1, 3, nn)) -
                                       static_cast<long>(d_star_jk(2, 3, nn));
                              return FieldValue(v);
                          },
                          2, order);
}

PuiseuxSeries divisor_t6c(const Rational& order) {
    return divisor_series(FieldValue(1),
                          [](long n) {
                              auto nn = static_cast<uint64_t>(n);
                              long c = 3 * (static_cast<long>(d_star_jk(1, 3, nn)) -
                                            static_cast<long>(d_star_jk(2, 3, nn)));
                              if (n % 2 == 0) {
                                  auto h = static_cast<uint64_t>(n / 2);
                                  c += 6 * (static_cast<long>(d_jk(1, 3, h)) -
                                            static_cast<long>(d_jk(2, 3, h)));
                              }
                              return FieldValue(c);
                          },
                          2, order);
}

long dstar_1245_6(uint64_t n) {
    return static_cast<long>(d_star_jk(1, 6, n)) + static_cast<long>(d_star_jk(2, 6, n)) -
           static_cast<long>(d_star_jk(4, 6, n)) - static_cast<long>(d_star_jk(5, 6, n));
}

PuiseuxSeries divisor_r6d(const Rational& order) {
    return divisor_series(
        FieldValue(0),
        [](long n) { return FieldValue(dstar_1245_6(static_cast<uint64_t>(n))); }, 2, order);
}

PuiseuxSeries divisor_u6d(const Rational& order) {
    return divisor_series(FieldValue(1),
                          [](long n) {
                              long c = -3 * dstar_1245_6(static_cast<uint64_t>(n));
                              if (n % 2 == 0) {
                                  auto h = static_cast<uint64_t>(n / 2);
                                  c += 6 * (static_cast<long>(d_jk(1, 3, h)) -
                                            static_cast<long>(d_jk(2, 3, h)));
                              }
                              return FieldValue(c);
                          },
                          2, order);
}

// ---- eta-quotient table ---------------------------------------------------

const std::map<FormId, std::vector<EtaFactor>>& eta_specs() {
    static const std::map<FormId, std::vector<EtaFactor>> table = {
        {FormId::Delta, {{rat(1), 24}}},
        {FormId::BorweinB, {{rat(1), 3}, {rat(3), -1}}},
        {FormId::BorweinC, {{rat(3), 3}, {rat(1), -1}}},
        {FormId::P6a, {{rat(2), 1}, {rat(3), 6}, {rat(1), -2}, {rat(6), -3}}},
        {FormId::Q6a, {{rat(1), 6}, {rat(6), 1}, {rat(2), -3}, {rat(3), -2}}},
        {FormId::F6a, {{rat(2), 4}, {rat(3), 8}, {rat(1), -8}, {rat(6), -4}}},
        {FormId::F6aTilde, {{rat(1), 8}, {rat(6), 4}, {rat(2), -4}, {rat(3), -8}}},
        {FormId::P6b, {{rat(2), 6}, {rat(3), 1}, {rat(1), -3}, {rat(6), -2}}},
        {FormId::Q6b, {{rat(1), 1}, {rat(6), 6}, {rat(2), -2}, {rat(3), -3}}},
        {FormId::G6b, {{rat(1), 4}, {rat(6), 8}, {rat(2), -8}, {rat(3), -4}}},
        {FormId::Q6c, {{rat(1, 2), 1}, {rat(3), 6}, {rat(1), -2}, {rat(3, 2), -3}}},
        {FormId::T6c, {{rat(1), 6}, {rat(3, 2), 1}, {rat(1, 2), -3}, {rat(3), -2}}},
        {FormId::T6cHaupt, {{rat(1, 2), 4}, {rat(3), 8}, {rat(1), -8}, {rat(3, 2), -4}}},
        {FormId::R6d,
         {{rat(1), 1}, {rat(3, 2), 3}, {rat(6), 3}, {rat(1, 2), -1}, {rat(2), -1}, {rat(3), -3}}},
        {FormId::U6d,
         {{rat(1, 2), 3}, {rat(2), 3}, {rat(3), 1}, {rat(1), -3}, {rat(3, 2), -1}, {rat(6), -1}}},
        {FormId::U6dHaupt,
         {{rat(1), 4}, {rat(3, 2), 4}, {rat(6), 4}, {rat(1, 2), -4}, {rat(2), -4}, {rat(3), -4}}},
        {FormId::X6e,
         {{rat(1), 3}, {rat(3, 2), 6}, {rat(6), 3}, {rat(1, 2), -2}, {rat(2), -1}, {rat(3), -9}}},
    };
    return table;
}

// ---- catalog -------------------------------------------------------------

const FieldTag kQ = FieldTag::Rational;
const FieldTag kQ5 = FieldTag::Sqrt5;

const std::vector<FormInfo>& catalog_table() {
    static const std::vector<FormInfo> table = {
        {FormId::E2, "E2", kQ, false, "Eisenstein series of weight 2"},
        {FormId::E4, "E4", kQ, false, "Eisenstein series of weight 4"},
        {FormId::E6, "E6", kQ, false, "Eisenstein series of weight 6"},
        {FormId::Delta, "Delta", kQ, true, "(E4^3 - E6^2)/1728; also eta(tau)^24"},
        {FormId::LittleJ, "j", kQ, false, "Klein j-invariant, 1728 E4^3/(E4^3-E6^2)"},
        {FormId::J, "J", kQ, false, "j/1728"},
        {FormId::InvJ, "InvJ", kQ, false, "1/J"},
        {FormId::OneOver1MinusJ, "OneOver1MinusJ", kQ, false, "1/(1-J)"},
        {FormId::Theta00Sq, "Theta00Sq", kQ, false, "theta^2[0;0](0,tau)"},
        {FormId::Theta10Sq, "Theta10Sq", kQ, false, "theta^2[1;0](0,tau)"},
        {FormId::Theta01Sq, "Theta01Sq", kQ, false, "theta^2[0;1](0,tau)"},
        {FormId::Theta00Fourth, "Theta00Fourth", kQ, false, "theta^4[0;0](0,tau)"},
        {FormId::Theta10Fourth, "Theta10Fourth", kQ, false, "theta^4[1;0](0,tau)"},
        {FormId::Theta01Fourth, "Theta01Fourth", kQ, false, "theta^4[0;1](0,tau)"},
        {FormId::Lambda, "Lambda", kQ, false, "theta^4[1;0]/theta^4[0;0]"},
        {FormId::Phi, "Phi", kQ, false, "phi(q) = sum q^(n^2)"},
        {FormId::Psi, "Psi", kQ, false, "psi(q) = sum q^(n(n+1)/2) (cataloged, unused)"},
        {FormId::BerndtX, "BerndtX", kQ, false,
         "x = 16 q prod (1+q^(2n))^8/(1+q^(2n-1))^8"},
        {FormId::BorweinA, "BorweinA", kQ, true, "a(q): lattice sum / divisor series"},
        {FormId::BorweinB, "BorweinB", kQ, true, "b(q): eta quotient / weighted lattice sum"},
        {FormId::BorweinC, "BorweinC", kQ, true, "c(q): eta quotient / shifted lattice sum"},
        {FormId::XLevel3, "XLevel3", kQ, false, "x = c^3/a^3"},
        {FormId::V5, "V5", kQ5, true, "level-5 V: product / divisor series"},
        {FormId::W5, "W5", kQ5, true, "level-5 W: product / divisor series"},
        {FormId::FLevel5, "FLevel5", kQ5, false,
         "f = (11+5 sqrt5)/2 prod ((1+(1+sqrt5)/2 q^n+q^2n)/(1+(1-sqrt5)/2 q^n+q^2n))^5"},
        {FormId::VSubst, "VSubst", kQ5, false, "v = (W-V)/(5 sqrt5 V)"},
        {FormId::WSubst, "WSubst", kQ5, false, "w = (V-W)/(-5 sqrt5 W)"},
        {FormId::GLevel5, "GLevel5", kQ, true,
         "g = q prod ((1-q^(5n-1))(1-q^(5n-4)))^5/((1-q^(5n-2))(1-q^(5n-3)))^5"},
        {FormId::BigG5, "BigG5", kQ5, false, "G = 2g/(-11+5 sqrt5)"},
        {FormId::S5b, "S5b", kQ, true, "level-5 S: product / divisor series"},
        {FormId::T5b, "T5b", kQ, true, "level-5 T: product / divisor series"},
        {FormId::P5b, "P5b", kQ, true, "level-5 P: divisor series / T-3S"},
        {FormId::Q5b, "Q5b", kQ, true, "level-5 Q: divisor series / S+3T"},
        {FormId::P6a, "P6a", kQ, true, "eta(2)eta(3)^6/(eta(1)^2 eta(6)^3)"},
        {FormId::Q6a, "Q6a", kQ, true, "eta(1)^6 eta(6)/(eta(2)^3 eta(3)^2)"},
        {FormId::F6a, "F6a", kQ, true, "f = P6a/Q6a as eta quotient"},
        {FormId::F6aTilde, "F6aTilde", kQ, false, "1/f as eta quotient"},
        {FormId::USubst6a, "USubst6a", kQ, false, "u = (ftilde-1)/(-8)"},
        {FormId::VSubst6a, "VSubst6a", kQ, false, "v = (f-1)/8"},
        {FormId::P6b, "P6b", kQ, true, "eta(2)^6 eta(3)/(eta(1)^3 eta(6)^2)"},
        {FormId::Q6b, "Q6b", kQ, true, "eta(1)eta(6)^6/(eta(2)^2 eta(3)^3)"},
        {FormId::G6b, "G6b", kQ, true, "g = Q6b/P6b as eta quotient"},
        {FormId::Q6c, "Q6c", kQ, true, "eta(1/2)eta(3)^6/(eta(1)^2 eta(3/2)^3)"},
        {FormId::T6c, "T6c", kQ, true, "eta(1)^6 eta(3/2)/(eta(1/2)^3 eta(3)^2)"},
        {FormId::T6cHaupt, "T6cHaupt", kQ, true, "t = Q6c/T6c as eta quotient"},
        {FormId::R6d, "R6d", kQ, true,
         "eta(1)eta(3/2)^3 eta(6)^3/(eta(1/2)eta(2)eta(3)^3)"},
        {FormId::U6d, "U6d", kQ, true,
         "eta(1/2)^3 eta(2)^3 eta(3)/(eta(1)^3 eta(3/2)eta(6))"},
        {FormId::U6dHaupt, "U6dHaupt", kQ, true, "u = R6d/U6d as eta quotient"},
        {FormId::P6e, "P6e", kQ, true, "alias of BorweinA"},
        {FormId::Q6e, "Q6e", kQ, true, "alias of Q6c"},
        {FormId::R6e, "R6e", kQ, true, "alias of R6d"},
        {FormId::X6e, "X6e", kQ, true, "x = R6d/Q6c as eta quotient"},
    };
    return table;
}

std::mutex cache_mutex;
std::map<std::pair<FormId, Rational>, PuiseuxSeries>& cache() {
    static std::map<std::pair<FormId, Rational>, PuiseuxSeries> c;
    return c;
}

PuiseuxSeries build_uncached(FormId id, const Rational& order) {
    switch (id) {
        case FormId::E2: return eisenstein(-24, 1, order);
        case FormId::E4: return eisenstein(240, 3, order);
        case FormId::E6: return eisenstein(-504, 5, order);
        case FormId::Delta: return build_delta_eisenstein(order);
        case FormId::LittleJ: return build_little_j(order);
        case FormId::J: return FieldValue(rat(1, 1728)) * build_little_j(order);
        case FormId::InvJ: return build_invj(order);
        case FormId::OneOver1MinusJ: {
            PuiseuxSeries x = build_invj(order);
            return (-x) * (one(order) - x).inverse();
        }
        case FormId::Theta00Sq: return theta_sq(0, order);
        case FormId::Theta10Sq: return theta_sq(1, order);
        case FormId::Theta01Sq: return theta_sq(2, order);
        case FormId::Theta00Fourth: {
            PuiseuxSeries s = theta_sq(0, order);
            return s * s;
        }
        case FormId::Theta10Fourth: {
            PuiseuxSeries s = theta_sq(1, order);
            return s * s;
        }
        case FormId::Theta01Fourth: {
            PuiseuxSeries s = theta_sq(2, order);
            return s * s;
        }
        case FormId::Lambda: {
            PuiseuxSeries n = build_form(FormId::Theta10Fourth, order);
            PuiseuxSeries d = build_form(FormId::Theta00Fourth, order);
            return n * d.inverse();
        }
        case FormId::Phi: return build_phi(order);
        case FormId::Psi: return build_psi(order);
        case FormId::BerndtX: return build_berndt_x(order);
        case FormId::BorweinA: return build_borwein_a(order);
        case FormId::BorweinB: return eta_quotient(eta_specs().at(FormId::BorweinB), order);
        case FormId::BorweinC:
            return FieldValue(3) * eta_quotient(eta_specs().at(FormId::BorweinC), order);
        case FormId::XLevel3: return build_xlevel3(order);
        case FormId::V5: return level5_vw_product(half(1, -1), order);
        case FormId::W5: return level5_vw_product(half(1, 1), order);
        case FormId::FLevel5: return build_flevel5(order);
        case FormId::VSubst: {
            PuiseuxSeries v = build_form(FormId::V5, order);
            PuiseuxSeries w = build_form(FormId::W5, order);
            return FieldValue(Rational(0), rat(1, 25)) * (w - v) * v.inverse();
        }
        case FormId::WSubst: {
            PuiseuxSeries v = build_form(FormId::V5, order);
            PuiseuxSeries w = build_form(FormId::W5, order);
            return FieldValue(Rational(0), rat(1, 25)) * (w - v) * w.inverse();
        }
        case FormId::GLevel5: return build_glevel5(order);
        case FormId::BigG5: return half(11, 5) * build_glevel5(order);
        case FormId::S5b: return build_s5b(order);
        case FormId::T5b: return build_t5b(order);
        case FormId::P5b: return divisor_p5b(order);
        case FormId::Q5b: return divisor_q5b(order);
        case FormId::P6a:
        case FormId::Q6a:
        case FormId::F6a:
        case FormId::F6aTilde:
        case FormId::P6b:
        case FormId::Q6b:
        case FormId::G6b:
        case FormId::Q6c:
        case FormId::T6c:
        case FormId::T6cHaupt:
        case FormId::R6d:
        case FormId::U6d:
        case FormId::U6dHaupt:
        case FormId::X6e: return eta_quotient(eta_specs().at(id), order);
        case FormId::USubst6a: {
            PuiseuxSeries ft = build_form(FormId::F6aTilde, order);
            return FieldValue(rat(-1, 8)) * (ft - one(order));
        }
        case FormId::VSubst6a: {
            PuiseuxSeries f = build_form(FormId::F6a, order);
            return FieldValue(rat(1, 8)) * (f - one(order));
        }
        case FormId::P6e: return build_form(FormId::BorweinA, order);
        case FormId::Q6e: return build_form(FormId::Q6c, order);
        case FormId::R6e: return build_form(FormId::R6d, order);
    }
    throw UnknownForm("unmapped form id");
}

}  // namespace

const std::vector<FormInfo>& form_catalog() { return catalog_table(); }

const FormInfo& form_info(FormId id) {
    for (const auto& info : catalog_table())
        if (info.id == id) return info;
    throw UnknownForm("unregistered form id");
}

std::optional<FormId> form_by_name(const std::string& name) {
    for (const auto& info : catalog_table())
        if (name == info.name) return info.id;
    return std::nullopt;
}

PuiseuxSeries build_form(FormId id, const Rational& order) {
    if (order <= 0) throw InsufficientOrder();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find({id, order});
        if (it != cache().end()) return it->second;
    }
    PuiseuxSeries s = build_uncached(id, order);
    if (s.is_zero()) throw InsufficientOrder();
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache().emplace(std::make_pair(id, order), s);
    return s;
}

std::pair<PuiseuxSeries, PuiseuxSeries> build_dual_route(FormId id, const Rational& order) {
    PuiseuxSeries primary = build_form(id, order);
    switch (id) {
        case FormId::Delta: return {primary, eta_quotient(eta_specs().at(FormId::Delta), order)};
        case FormId::BorweinA: return {primary, lattice_a(order)};
        case FormId::BorweinB: return {primary, lattice_b(order)};
        case FormId::BorweinC: return {primary, lattice_c(order)};
        case FormId::V5: return {primary, divisor_v5(order)};
        case FormId::W5: return {primary, divisor_w5(order)};
        case FormId::GLevel5: return {primary, glevel5_from_f(order)};
        case FormId::S5b: return {primary, divisor_s5b(order)};
        case FormId::T5b: return {primary, divisor_t5b(order)};
        case FormId::P5b:
            return {primary, build_form(FormId::T5b, order) -
                                 FieldValue(3) * build_form(FormId::S5b, order)};
        case FormId::Q5b:
            return {primary, build_form(FormId::S5b, order) +
                                 FieldValue(3) * build_form(FormId::T5b, order)};
        case FormId::P6a: return {primary, divisor_p6a(order)};
        case FormId::Q6a: return {primary, divisor_q6a(order)};
        case FormId::F6a:
            return {primary, build_form(FormId::P6a, order) *
                                 build_form(FormId::Q6a, order).inverse()};
        case FormId::P6b: return {primary, divisor_p6b(order)};
        case FormId::Q6b: return {primary, divisor_q6b(order)};
        case FormId::G6b:
            return {primary, build_form(FormId::Q6b, order) *
                                 build_form(FormId::P6b, order).inverse()};
        case FormId::Q6c: return {primary, divisor_q6c(order)};
        case FormId::T6c: return {primary, divisor_t6c(order)};
        case FormId::T6cHaupt:
            return {primary, build_form(FormId::Q6c, order) *
                                 build_form(FormId::T6c, order).inverse()};
        case FormId::R6d: return {primary, divisor_r6d(order)};
        case FormId::U6d: return {primary, divisor_u6d(order)};
        case FormId::U6dHaupt:
            return {primary, build_form(FormId::R6d, order) *
                                 build_form(FormId::U6d, order).inverse()};
        case FormId::P6e: return build_dual_route(FormId::BorweinA, order);
        case FormId::Q6e: return build_dual_route(FormId::Q6c, order);
        case FormId::R6e: return build_dual_route(FormId::R6d, order);
        case FormId::X6e:
            return {primary, build_form(FormId::R6d, order) *
                                 build_form(FormId::Q6c, order).inverse()};
        default: throw SingleRouteOnly(form_info(id).name);
    }
}

std::optional<std::vector<EtaFactor>> eta_spec_for(FormId id) {
    auto it = eta_specs().find(id);
    if (it == eta_specs().end()) return std::nullopt;
    return it->second;
}

void clear_form_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache().clear();
}

}  // namespace qv
