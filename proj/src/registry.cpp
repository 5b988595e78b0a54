#include <utility>

#include "qv/arith.hpp"
#include "qv/calculus.hpp"
#include "qv/errors.hpp"
#include "qv/forms.hpp"
#include "qv/hypergeom.hpp"
#include "qv/sequences.hpp"
#include "qv/verifier.hpp"

// The embedded check registry.  Every entry certifies one displayed identity:
// a nonlinear differential system, a Schwarzian ODE for a hauptmodul, a
// pole-cleared linear ODE in a hauptmodul, a hypergeometric inversion
// formula, a j-invariant formula, a recurrence expansion, an algebraic
// identity between forms, or a dual-route construction of one form.

namespace qv {

namespace {

using Residuals = std::vector<PuiseuxSeries>;
using Builder = std::function<Residuals(const Rational&)>;

FieldValue h(long a, long b) { return FieldValue(rat(a, 2), rat(b, 2)); }  // (a+b*sqrt5)/2
FieldValue fv(long num, long den = 1) { return FieldValue(rat(num, den)); }
FieldValue sq5(long num, long den = 1) { return FieldValue(Rational(0), rat(num, den)); }

PuiseuxSeries F(FormId id, const Rational& order) { return build_form(id, order); }

// form evaluated at r*tau, truncated at `order`
PuiseuxSeries FR(FormId id, const Rational& r, const Rational& order) {
    return build_form(id, order / r).rescale(r);
}

PuiseuxSeries one(const Rational& order) {
    return PuiseuxSeries::constant(FieldValue(1), order);
}

// ---- linear-ODE clearing helpers ------------------------------------------

struct AFactor {
    FieldValue root;
    int mult;
};
struct BTerm {
    FieldValue coef;
    FieldValue root;  // must be one of the A-factor roots
};

Polynomial cleared_A(const std::vector<AFactor>& factors) {
    Polynomial a = Polynomial::constant(fv(1));
    for (const auto& f : factors)
        for (int k = 0; k < f.mult; ++k) a = a * Polynomial({-f.root, fv(1)});
    return a;
}

// A * sum c_i/(x - r_i), each addend a polynomial since r_i divides A
Polynomial cleared_B(const std::vector<AFactor>& factors, const std::vector<BTerm>& terms) {
    Polynomial b;
    for (const auto& t : terms) {
        Polynomial part = Polynomial::constant(t.coef);
        bool dropped = false;
        for (const auto& f : factors) {
            int mult = f.mult;
            if (!dropped && f.root == t.root) {
                --mult;
                dropped = true;
            }
            for (int k = 0; k < mult; ++k) part = part * Polynomial({-f.root, fv(1)});
        }
        if (!dropped) throw BadParams("B-term root missing from A factors");
        b = b + part;
    }
    return b;
}

Residuals linear_ode(const PuiseuxSeries& y, const PuiseuxSeries& s, const Polynomial& A,
                     const Polynomial& B, const Polynomial& C) {
    PuiseuxSeries y1 = chain_d(y, s);
    PuiseuxSeries y2 = chain_d(y1, s);
    return {A.eval_series(s) * y2 + B.eval_series(s) * y1 + C.eval_series(s) * y};
}

Residuals schwarzian_res(const PuiseuxSeries& x, const RationalFunction& R) {
    PuiseuxSeries dx = Dq(x);
    return {schwarzian_q(x) + eval_ratfun(R, x) * (dx * dx)};
}

Residuals j_res(const PuiseuxSeries& jform, const RationalFunction& R,
                const PuiseuxSeries& haupt) {
    return {jform - eval_ratfun(R, haupt)};
}

Residuals inversion_res(const PuiseuxSeries& target, const HypergeomParams& p,
                        const PuiseuxSeries& inner,
                        const std::optional<PuiseuxSeries>& prefactor = std::nullopt) {
    return {target - f21_compose(p, inner, prefactor)};
}

Residuals dual_res(FormId id, const Rational& order) {
    auto [a, b] = build_dual_route(id, order);
    return {a - b};
}

Residuals expansion_res(const PuiseuxSeries& target, const RecurrenceSpec& spec,
                        const PuiseuxSeries& inner) {
    const Rational v = inner.valuation();
    const size_t count = static_cast<size_t>(rat_ceil(inner.trunc() / v)) + 1;
    return {target - expand_sequence_series(run_recurrence(spec, count), inner)};
}

Polynomial pl(std::initializer_list<FieldValue> ascending) { return Polynomial(ascending); }

Polynomial pow(Polynomial p, int e) {
    Polynomial acc = Polynomial::constant(fv(1));
    for (int k = 0; k < e; ++k) acc = acc * p;
    return acc;
}

// ---- registry assembly -----------------------------------------------------

void add(std::vector<CheckSpec>& reg, std::string id, std::string group, CheckKind kind,
         std::string statement, std::string note, Builder builder) {
    reg.push_back(CheckSpec{std::move(id), std::move(group), kind, std::move(statement),
                            std::move(note), std::move(builder)});
}

void add_g0(std::vector<CheckSpec>& reg) {
    add(reg, "g00-berndt-level2-inversion", "G0", CheckKind::InversionFormula,
        "phi(q)^2 = 2F1(1/2,1/2;1; 16 q prod (1+q^2n)^8/(1+q^(2n-1))^8)  [Berndt]", "",
        [](const Rational& N) {
            PuiseuxSeries phi = F(FormId::Phi, N);
            return inversion_res(phi * phi, {rat(1, 2), rat(1, 2), rat(1)},
                                 F(FormId::BerndtX, N));
        });
    add(reg, "g00-zagier-recurrence-engine", "G0", CheckKind::RecurrenceExpansion,
        "(n+1)^2 t(n+1) = (alpha n^2+alpha n+beta) t(n) + gamma n^2 t(n-1), t(0)=1: "
        "re-substitution residuals vanish; (0,0,0) gives 1,0,0,...",
        "engine consistency demo on (alpha,beta,gamma)=(11,3,1) and (0,0,0)",
        [](const Rational& N) {
            const size_t count = static_cast<size_t>(rat_ceil(N)) + 2;
            auto sporadic = zagier_recurrence(rat(11), rat(3), rat(1));
            auto res = resubstitution_residuals(sporadic, run_recurrence(sporadic, count));
            std::vector<FieldValue> blk(res.begin(), res.end());
            PuiseuxSeries r1 = PuiseuxSeries::from_block(
                FieldTag::Rational, 1, 0, std::move(blk), static_cast<int64_t>(res.size()));
            auto trivial = run_recurrence(zagier_recurrence(rat(0), rat(0), rat(0)), count);
            std::vector<FieldValue> tail(trivial.begin() + 1, trivial.end());
            PuiseuxSeries r2 = PuiseuxSeries::from_block(
                FieldTag::Rational, 1, 0, std::move(tail), static_cast<int64_t>(count - 1));
            return Residuals{r1, r2};
        });
}

void add_g1(std::vector<CheckSpec>& reg) {
    add(reg, "g01-ramanujan-system", "G1", CheckKind::NonlinearSystem,
        "D E2 = (E2^2-E4)/12; D E4 = (E2 E4-E6)/3; D E6 = (E2 E6-E4^2)/2  [Ramanujan]", "",
        [](const Rational& N) {
            PuiseuxSeries e2 = F(FormId::E2, N), e4 = F(FormId::E4, N), e6 = F(FormId::E6, N);
            return Residuals{
                Dq(e2) - fv(1, 12) * (e2 * e2 - e4),
                Dq(e4) - fv(1, 3) * (e2 * e4 - e6),
                Dq(e6) - fv(1, 2) * (e2 * e6 - e4 * e4),
            };
        });
    add(reg, "g01-schwarzian-J", "G1", CheckKind::SchwarzianODE,
        "{J,tau} + (36J^2-41J+32)/(72 J^2 (J-1)^2) (J')^2 = 0  [Dedekind]",
        "Laurent case: J has a simple pole at q=0", [](const Rational& N) {
            RationalFunction R{pl({fv(32), fv(-41), fv(36)}),
                               fv(72) * Polynomial::from_roots({fv(0), fv(0), fv(1), fv(1)})};
            return schwarzian_res(F(FormId::J, N), R);
        });
    add(reg, "g01-schwarzian-j", "G1", CheckKind::SchwarzianODE,
        "{j,tau} + (j^2-1968j+2654208)/(2 j^2 (j-1728)^2) (j')^2 = 0",
        "Laurent case: j has a simple pole at q=0", [](const Rational& N) {
            RationalFunction R{
                pl({fv(2654208), fv(-1968), fv(1)}),
                fv(2) * Polynomial::from_roots({fv(0), fv(0), fv(1728), fv(1728)})};
            return schwarzian_res(F(FormId::LittleJ, N), R);
        });
}

void add_g2(std::vector<CheckSpec>& reg) {
    add(reg, "g02-ode-e4-in-J", "G2", CheckKind::LinearODE,
        "Q''(J) + ((1/2)/J + (1/2)/(J-1)) Q' - 5/(144 J^2 (J-1)) Q = 0, Q = E4^(1/4)",
        "cleared by J^2(J-1)", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 2}, {fv(1), 1}};
            return linear_ode(F(FormId::E4, N).pow_rational(rat(1, 4)), F(FormId::J, N),
                              cleared_A(af),
                              cleared_B(af, {{fv(1, 2), fv(0)}, {fv(1, 2), fv(1)}}),
                              pl({fv(-5, 144)}));
        });
    add(reg, "g02-ode-e4-invj", "G2", CheckKind::LinearODE,
        "x(1-x) Q'' + (1-(3/2)x) Q' - (5/144) Q = 0, x = 1/J, Q = E4^(1/4)", "",
        [](const Rational& N) {
            return linear_ode(F(FormId::E4, N).pow_rational(rat(1, 4)), F(FormId::InvJ, N),
                              pl({fv(0), fv(1), fv(-1)}), pl({fv(1), fv(-3, 2)}),
                              pl({fv(-5, 144)}));
        });
    add(reg, "g02-ode-e6-in-J", "G2", CheckKind::LinearODE,
        "R''(J) + ((2/3)/J + (1/3)/(J-1)) R' + 7/(144 J (J-1)^2) R = 0, R = E6^(1/6)",
        "cleared by J(J-1)^2", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(1), 2}};
            return linear_ode(F(FormId::E6, N).pow_rational(rat(1, 6)), F(FormId::J, N),
                              cleared_A(af),
                              cleared_B(af, {{fv(2, 3), fv(0)}, {fv(1, 3), fv(1)}}),
                              pl({fv(7, 144)}));
        });
    add(reg, "g02-ode-e6-inv1mj", "G2", CheckKind::LinearODE,
        "y(1-y) R'' + (1-(5/3)y) R' - (7/144) R = 0, y = 1/(1-J), R = E6^(1/6)", "",
        [](const Rational& N) {
            return linear_ode(F(FormId::E6, N).pow_rational(rat(1, 6)),
                              F(FormId::OneOver1MinusJ, N), pl({fv(0), fv(1), fv(-1)}),
                              pl({fv(1), fv(-5, 3)}), pl({fv(-7, 144)}));
        });
    add(reg, "g02-inversion-e4", "G2", CheckKind::InversionFormula,
        "E4^(1/4) = 2F1(1/12,5/12;1;1/J)", "", [](const Rational& N) {
            return inversion_res(F(FormId::E4, N).pow_rational(rat(1, 4)),
                                 {rat(1, 12), rat(5, 12), rat(1)}, F(FormId::InvJ, N));
        });
    add(reg, "g02-inversion-e6", "G2", CheckKind::InversionFormula,
        "E6^(1/6) = 2F1(1/12,7/12;1;1/(1-J))", "", [](const Rational& N) {
            return inversion_res(F(FormId::E6, N).pow_rational(rat(1, 6)),
                                 {rat(1, 12), rat(7, 12), rat(1)},
                                 F(FormId::OneOver1MinusJ, N));
        });
}

Residuals halphen_residual(const PuiseuxSeries& p, const PuiseuxSeries& q,
                           const PuiseuxSeries& r) {
    return Residuals{
        Dq(p) - fv(1, 6) * (-(p * p) + fv(2) * (p * q) + p * r),
        Dq(q) - fv(1, 6) * (-(q * q) + fv(2) * (p * q) + q * r),
        Dq(r) - fv(1, 12) * (-(p * p) + p * q - q * q + r * r),
    };
}

void add_g3(std::vector<CheckSpec>& reg) {
    add(reg, "g03-halphen-triple-1", "G3", CheckKind::NonlinearSystem,
        "DP=(-P^2+2PQ+PR)/6, DQ=(-Q^2+2PQ+QR)/6, DR=(-P^2+PQ-Q^2+R^2)/12 at "
        "(P,Q,R)=(theta4[0;0], theta4[1;0], E2)  [Halphen]",
        "pins the theta-characteristic convention", [](const Rational& N) {
            return halphen_residual(F(FormId::Theta00Fourth, N), F(FormId::Theta10Fourth, N),
                                    F(FormId::E2, N));
        });
    add(reg, "g03-halphen-triple-2", "G3", CheckKind::NonlinearSystem,
        "same system at (P,Q,R)=(-theta4[1;0], theta4[0;1], E2)", "", [](const Rational& N) {
            return halphen_residual(-F(FormId::Theta10Fourth, N), F(FormId::Theta01Fourth, N),
                                    F(FormId::E2, N));
        });
    add(reg, "g03-halphen-triple-3", "G3", CheckKind::NonlinearSystem,
        "same system at (P,Q,R)=(-theta4[0;1], -theta4[0;0], E2)", "", [](const Rational& N) {
            return halphen_residual(-F(FormId::Theta01Fourth, N), -F(FormId::Theta00Fourth, N),
                                    F(FormId::E2, N));
        });
}

void add_g4(std::vector<CheckSpec>& reg) {
    add(reg, "g04-schwarzian-lambda", "G4", CheckKind::SchwarzianODE,
        "{lambda,tau} + (lambda^2-lambda+1)/(2 lambda^2 (lambda-1)^2) (lambda')^2 = 0", "",
        [](const Rational& N) {
            RationalFunction R{pl({fv(1), fv(-1), fv(1)}),
                               fv(2) * Polynomial::from_roots({fv(0), fv(0), fv(1), fv(1)})};
            return schwarzian_res(F(FormId::Lambda, N), R);
        });
    add(reg, "g04-ode-theta00", "G4", CheckKind::LinearODE,
        "lambda(1-lambda) P'' + (1-2 lambda) P' - (1/4) P = 0, P = theta^2[0;0]", "",
        [](const Rational& N) {
            return linear_ode(F(FormId::Theta00Sq, N), F(FormId::Lambda, N),
                              pl({fv(0), fv(1), fv(-1)}), pl({fv(1), fv(-2)}),
                              pl({fv(-1, 4)}));
        });
    add(reg, "g04-ode-theta10-prop", "G4", CheckKind::LinearODE,
        "Q'' + (1/(lambda-1)) Q' - 1/(4 lambda^2 (lambda-1)) Q = 0, Q = theta^2[1;0]",
        "cleared by lambda^2(lambda-1)", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 2}, {fv(1), 1}};
            return linear_ode(F(FormId::Theta10Sq, N), F(FormId::Lambda, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(1)}}), pl({fv(-1, 4)}));
        });
    add(reg, "g04-ode-theta10-x", "G4", CheckKind::LinearODE,
        "x(1-x) Q'' + (1-2x) Q' - (1/4) Q = 0, x = 1/lambda, Q = theta^2[1;0]", "",
        [](const Rational& N) {
            return linear_ode(F(FormId::Theta10Sq, N), F(FormId::Lambda, N).inverse(),
                              pl({fv(0), fv(1), fv(-1)}), pl({fv(1), fv(-2)}),
                              pl({fv(-1, 4)}));
        });
    add(reg, "g04-ode-theta01", "G4", CheckKind::LinearODE,
        "y(1-y) Q'' + (1-2y) Q' - (1/4) Q = 0, y = 1/(1-lambda), Q = theta^2[0;1]", "",
        [](const Rational& N) {
            PuiseuxSeries lam = F(FormId::Lambda, N);
            return linear_ode(F(FormId::Theta01Sq, N), (one(N) - lam).inverse(),
                              pl({fv(0), fv(1), fv(-1)}), pl({fv(1), fv(-2)}),
                              pl({fv(-1, 4)}));
        });
    add(reg, "g04-inversion-theta00", "G4", CheckKind::InversionFormula,
        "theta^2[0;0] = 2F1(1/2,1/2;1;lambda)", "", [](const Rational& N) {
            return inversion_res(F(FormId::Theta00Sq, N), {rat(1, 2), rat(1, 2), rat(1)},
                                 F(FormId::Lambda, N));
        });
    add(reg, "g04-inversion-theta10", "G4", CheckKind::InversionFormula,
        "theta^2[1;0] = lambda^(1/2) 2F1(1/2,1/2;1;lambda)",
        "simplified from the printed (1/lambda)^(-1/2) 2F1(...;1/(1/lambda)) phrasing",
        [](const Rational& N) {
            PuiseuxSeries lam = F(FormId::Lambda, N);
            return inversion_res(F(FormId::Theta10Sq, N), {rat(1, 2), rat(1, 2), rat(1)}, lam,
                                 lam.pow_rational(rat(1, 2)));
        });
    add(reg, "g04-inversion-theta01", "G4", CheckKind::InversionFormula,
        "theta^2[0;1] = 2F1(1/2,1/2;1;lambda/(lambda-1))", "", [](const Rational& N) {
            PuiseuxSeries lam = F(FormId::Lambda, N);
            return inversion_res(F(FormId::Theta01Sq, N), {rat(1, 2), rat(1, 2), rat(1)},
                                 lam * (lam - one(N)).inverse());
        });
    add(reg, "g04-j-from-lambda", "G4", CheckKind::JIdentity,
        "j = 2^8 (lambda^2-lambda+1)^3/(lambda^2 (lambda-1)^2)", "", [](const Rational& N) {
            RationalFunction R{fv(256) * pow(pl({fv(1), fv(-1), fv(1)}), 3),
                               Polynomial::from_roots({fv(0), fv(0), fv(1), fv(1)})};
            return j_res(F(FormId::LittleJ, N), R, F(FormId::Lambda, N));
        });
    add(reg, "g04-j-half-from-lambda", "G4", CheckKind::JIdentity,
        "j(tau/2) = 2^4 (lambda^2+14 lambda+1)^3/(lambda (lambda-1)^4)",
        "level-4 remark; LHS built by rescale", [](const Rational& N) {
            RationalFunction R{
                fv(16) * pow(pl({fv(1), fv(14), fv(1)}), 3),
                Polynomial::from_roots({fv(0), fv(1), fv(1), fv(1), fv(1)})};
            return j_res(FR(FormId::LittleJ, rat(1, 2), N), R, F(FormId::Lambda, N));
        });
    add(reg, "g04-j-twice-from-lambda", "G4", CheckKind::JIdentity,
        "j(2 tau) = 2^16 (1-lambda+lambda^2/16)^3/(lambda^4 (1-lambda))",
        "level-4 remark; LHS built by rescale", [](const Rational& N) {
            RationalFunction R{fv(65536) * pow(pl({fv(1), fv(-1), fv(1, 16)}), 3),
                               pl({fv(0), fv(0), fv(0), fv(0), fv(1), fv(-1)})};
            return j_res(FR(FormId::LittleJ, rat(2), N), R, F(FormId::Lambda, N));
        });
}

void add_g5(std::vector<CheckSpec>& reg) {
    add(reg, "g05-system-a-b3", "G5", CheckKind::NonlinearSystem,
        "Da=(3a^3+a E2-4b^3)/12; D E2=(-9a^4+8a b^3+E2^2)/12; D(b^3)=(-a^2 b^3+E2 b^3)/4",
        "", [](const Rational& N) {
            PuiseuxSeries a = F(FormId::BorweinA, N), e2 = F(FormId::E2, N);
            PuiseuxSeries b3 = F(FormId::BorweinB, N).pow_int(3);
            PuiseuxSeries a2 = a * a;
            return Residuals{
                Dq(a) - fv(1, 12) * (fv(3) * (a2 * a) + a * e2 - fv(4) * b3),
                Dq(e2) - fv(1, 12) * (fv(-9) * (a2 * a2) + fv(8) * (a * b3) + e2 * e2),
                Dq(b3) - fv(1, 4) * (-(a2 * b3) + e2 * b3),
            };
        });
    add(reg, "g05-system-a-c3", "G5", CheckKind::NonlinearSystem,
        "Da=(-3a^3+3a E2(3tau)+4c^3)/12; D E2(3tau)=(-9a^4+8a c^3+9E2(3tau)^2)/36; "
        "D(c^3)=(a^2 c^3+3E2(3tau) c^3)/4",
        "", [](const Rational& N) {
            PuiseuxSeries a = F(FormId::BorweinA, N), e23 = FR(FormId::E2, rat(3), N);
            PuiseuxSeries c3 = F(FormId::BorweinC, N).pow_int(3);
            PuiseuxSeries a2 = a * a;
            return Residuals{
                Dq(a) - fv(1, 12) * (fv(-3) * (a2 * a) + fv(3) * (a * e23) + fv(4) * c3),
                Dq(e23) - fv(1, 36) * (fv(-9) * (a2 * a2) + fv(8) * (a * c3) +
                                       fv(9) * (e23 * e23)),
                Dq(c3) - fv(1, 4) * (a2 * c3 + fv(3) * (e23 * c3)),
            };
        });
    add(reg, "g05-schwarzian-x", "G5", CheckKind::SchwarzianODE,
        "{x,tau} + (8x^2-8x+9)/(18 x^2 (x-1)^2) (x')^2 = 0, x = c^3/a^3", "",
        [](const Rational& N) {
            RationalFunction R{pl({fv(9), fv(-8), fv(8)}),
                               fv(18) * Polynomial::from_roots({fv(0), fv(0), fv(1), fv(1)})};
            return schwarzian_res(F(FormId::XLevel3, N), R);
        });
    add(reg, "g05-ode-a-x", "G5", CheckKind::LinearODE,
        "x(1-x) a'' + (1-2x) a' - (2/9) a = 0, x = c^3/a^3", "", [](const Rational& N) {
            return linear_ode(F(FormId::BorweinA, N), F(FormId::XLevel3, N),
                              pl({fv(0), fv(1), fv(-1)}), pl({fv(1), fv(-2)}),
                              pl({fv(-2, 9)}));
        });
    add(reg, "g05-ode-b-x", "G5", CheckKind::LinearODE,
        "b'' + (1/x + 1/(3(x-1))) b' + 1/(9x(x-1)^2) b = 0, x = c^3/a^3",
        "cleared by x(x-1)^2", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(1), 2}};
            return linear_ode(F(FormId::BorweinB, N), F(FormId::XLevel3, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)}, {fv(1, 3), fv(1)}}),
                              pl({fv(1, 9)}));
        });
    add(reg, "g05-ode-b-y", "G5", CheckKind::LinearODE,
        "y(1-y) b'' + (2/3-(5/3)y) b' - (1/9) b = 0, y = a^3/b^3", "", [](const Rational& N) {
            PuiseuxSeries y = F(FormId::BorweinA, N).pow_int(3) *
                              F(FormId::BorweinB, N).pow_int(3).inverse();
            return linear_ode(F(FormId::BorweinB, N), y, pl({fv(0), fv(1), fv(-1)}),
                              pl({fv(2, 3), fv(-5, 3)}), pl({fv(-1, 9)}));
        });
    add(reg, "g05-ode-c-x", "G5", CheckKind::LinearODE,
        "c'' + (1/(3x) + 1/(x-1)) c' - 1/(9x^2(x-1)) c = 0, x = c^3/a^3",
        "cleared by x^2(x-1)", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 2}, {fv(1), 1}};
            return linear_ode(F(FormId::BorweinC, N), F(FormId::XLevel3, N), cleared_A(af),
                              cleared_B(af, {{fv(1, 3), fv(0)}, {fv(1), fv(1)}}),
                              pl({fv(-1, 9)}));
        });
    add(reg, "g05-ode-c-z", "G5", CheckKind::LinearODE,
        "z(1-z) c'' + (2/3-(5/3)z) c' - (1/9) c = 0, z = a^3/c^3",
        "Laurent case: z has a simple pole at q=0", [](const Rational& N) {
            return linear_ode(F(FormId::BorweinC, N), F(FormId::XLevel3, N).inverse(),
                              pl({fv(0), fv(1), fv(-1)}), pl({fv(2, 3), fv(-5, 3)}),
                              pl({fv(-1, 9)}));
        });
    add(reg, "g05-inversion-a", "G5", CheckKind::InversionFormula,
        "a(q) = 2F1(1/3,2/3;1;c^3/a^3)", "", [](const Rational& N) {
            return inversion_res(F(FormId::BorweinA, N), {rat(1, 3), rat(2, 3), rat(1)},
                                 F(FormId::XLevel3, N));
        });
    add(reg, "g05-inversion-b", "G5", CheckKind::InversionFormula,
        "b(q) = 2F1(1/3,1/3;1;1-a^3/b^3)", "", [](const Rational& N) {
            PuiseuxSeries y = F(FormId::BorweinA, N).pow_int(3) *
                              F(FormId::BorweinB, N).pow_int(3).inverse();
            return inversion_res(F(FormId::BorweinB, N), {rat(1, 3), rat(1, 3), rat(1)},
                                 one(N) - y);
        });
    add(reg, "g05-inversion-c", "G5", CheckKind::InversionFormula,
        "c(q) = (c^3/a^3)^(1/3) 2F1(1/3,2/3;1;c^3/a^3)",
        "z-form restated with z = a^3/c^3 inverted", [](const Rational& N) {
            PuiseuxSeries x = F(FormId::XLevel3, N);
            return inversion_res(F(FormId::BorweinC, N), {rat(1, 3), rat(2, 3), rat(1)}, x,
                                 x.pow_rational(rat(1, 3)));
        });
    add(reg, "g05-j-from-x", "G5", CheckKind::JIdentity,
        "j = 27(1+8x)^3/(x(1-x)^3), x = c^3/a^3", "", [](const Rational& N) {
            RationalFunction R{fv(27) * pow(pl({fv(1), fv(8)}), 3),
                               fv(-1) * Polynomial::from_roots({fv(0), fv(1), fv(1), fv(1)})};
            return j_res(F(FormId::LittleJ, N), R, F(FormId::XLevel3, N));
        });
    for (auto [id, form] : {std::pair{"g05-dual-borwein-a", FormId::BorweinA},
                            std::pair{"g05-dual-borwein-b", FormId::BorweinB},
                            std::pair{"g05-dual-borwein-c", FormId::BorweinC}}) {
        add(reg, id, "G5", CheckKind::DualRoute,
            std::string("both printed routes of ") + form_info(form).name + " agree",
            form == FormId::BorweinA
                ? "divisor series vs lattice sum over m^2+mn+n^2"
                : (form == FormId::BorweinB ? "eta quotient vs omega-weighted lattice sum"
                                            : "eta quotient vs shifted lattice sum"),
            [form](const Rational& N) { return dual_res(form, N); });
    }
}

void add_g6(std::vector<CheckSpec>& reg) {
    const char* vw_note = "S,T carry constants outside Q(sqrt5); checks run on the "
                          "proportional Q(sqrt5) representatives V,W (homogeneous-linear "
                          "statements are scale invariant)";
    add(reg, "g06-system-vwu", "G6", CheckKind::NonlinearSystem,
        "DV=(5(25-11s)V^3+132sV^2W-7(25+11s)VW^2+50VU)/600, s=sqrt5; DW, DU analogous; "
        "U=E2",
        vw_note, [](const Rational& N) {
            PuiseuxSeries V = F(FormId::V5, N), W = F(FormId::W5, N), U = F(FormId::E2, N);
            PuiseuxSeries V2 = V * V, W2 = W * W;
            FieldValue c600 = fv(1, 600), c120 = fv(1, 120);
            PuiseuxSeries rv = Dq(V) - c600 * ((fv(125) - sq5(55)) * (V2 * V) +
                                               sq5(132) * (V2 * W) -
                                               (fv(175) + sq5(77)) * (V * W2) +
                                               fv(50) * (V * U));
            PuiseuxSeries rw = Dq(W) - c600 * ((fv(-175) + sq5(77)) * (V2 * W) -
                                               sq5(132) * (V * W2) +
                                               (fv(125) + sq5(55)) * (W2 * W) +
                                               fv(50) * (U * W));
            PuiseuxSeries ru =
                Dq(U) - c120 * ((fv(-123) + sq5(55)) * (V2 * V2) +
                                (fv(132) - sq5(60)) * (V2 * (V * W)) - fv(28) * (V2 * W2) +
                                (fv(132) + sq5(60)) * (V * (W2 * W)) -
                                (fv(123) + sq5(55)) * (W2 * W2) + fv(10) * (U * U));
            return Residuals{rv, rw, ru};
        });
    add(reg, "g06-schwarzian-f", "G6", CheckKind::SchwarzianODE,
        "{f,tau} + (f^4-12f^3+134f^2+12f+1)/(2 f^2 (f^2-11f-1)^2) (f')^2 = 0", "",
        [](const Rational& N) {
            RationalFunction R{pl({fv(1), fv(12), fv(134), fv(-12), fv(1)}),
                               fv(2) * (pow(pl({fv(0), fv(1)}), 2) *
                                        pow(pl({fv(-1), fv(-11), fv(1)}), 2))};
            return schwarzian_res(F(FormId::FLevel5, N), R);
        });
    add(reg, "g06-heun-S-on-V", "G6", CheckKind::LinearODE,
        "f(f^2-11f-1) S'' + (3f^2-22f-1) S' + (f-3) S = 0, poles f = (11+-5 sqrt5)/2",
        vw_note, [](const Rational& N) {
            return linear_ode(F(FormId::V5, N), F(FormId::FLevel5, N),
                              pl({fv(0), fv(-1), fv(-11), fv(1)}),
                              pl({fv(-1), fv(-22), fv(3)}), pl({fv(-3), fv(1)}));
        });
    add(reg, "g06-heun-T-prop-on-W", "G6", CheckKind::LinearODE,
        "f^2(f^2-11f-1) T'' + (f^3+f) T' - (3f+1) T = 0", vw_note, [](const Rational& N) {
            return linear_ode(F(FormId::W5, N), F(FormId::FLevel5, N),
                              pl({fv(0), fv(0), fv(-1), fv(-11), fv(1)}),
                              pl({fv(0), fv(1), fv(0), fv(1)}), pl({fv(-1), fv(-3)}));
        });
    add(reg, "g06-heun-T-on-W-ftilde", "G6", CheckKind::LinearODE,
        "ft(ft^2+11ft-1) T'' + (3ft^2+22ft-1) T' + (ft+3) T = 0, ft = 1/f", vw_note,
        [](const Rational& N) {
            return linear_ode(F(FormId::W5, N), F(FormId::FLevel5, N).inverse(),
                              pl({fv(0), fv(-1), fv(11), fv(1)}),
                              pl({fv(-1), fv(22), fv(3)}), pl({fv(3), fv(1)}));
        });
    add(reg, "g06-heun-V-in-v", "G6", CheckKind::LinearODE,
        "Heun for V in v = (W-V)/(5 sqrt5 V): poles 0, -sqrt5/25, (11-5 sqrt5)/2; "
        "C = v-(15-7 sqrt5)/10",
        vw_note, [](const Rational& N) {
            std::vector<AFactor> af{
                {fv(0), 1}, {sq5(-1, 25), 1}, {h(11, -5), 1}};
            return linear_ode(F(FormId::V5, N), F(FormId::VSubst, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)},
                                             {fv(1), sq5(-1, 25)},
                                             {fv(1), h(11, -5)}}),
                              pl({FieldValue(rat(-3, 2), rat(7, 10)), fv(1)}));
        });
    add(reg, "g06-heun-V-in-g", "G6", CheckKind::LinearODE,
        "Heun for V in g: poles 0, -(11+5s)/2, -(11-5s)/2 (double); "
        "C = -(5(1-s)/2)(g-2+s), s=sqrt5",
        vw_note, [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {h(-11, -5), 1}, {h(-11, 5), 2}};
            return linear_ode(
                F(FormId::V5, N), F(FormId::GLevel5, N), cleared_A(af),
                cleared_B(af, {{fv(1), fv(0)}, {fv(1), h(-11, -5)}, {fv(-1), h(-11, 5)}}),
                h(-5, 5) * pl({FieldValue(rat(-2), rat(1)), fv(1)}));
        });
    add(reg, "g06-heun-W-in-w", "G6", CheckKind::LinearODE,
        "Heun for W in w = (V-W)/(-5 sqrt5 W): poles 0, sqrt5/25, (11+5 sqrt5)/2; "
        "C = w-(15+7 sqrt5)/10",
        vw_note, [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {sq5(1, 25), 1}, {h(11, 5), 1}};
            return linear_ode(F(FormId::W5, N), F(FormId::WSubst, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)},
                                             {fv(1), sq5(1, 25)},
                                             {fv(1), h(11, 5)}}),
                              pl({FieldValue(rat(-3, 2), rat(-7, 10)), fv(1)}));
        });
    add(reg, "g06-heun-W-in-g", "G6", CheckKind::LinearODE,
        "Heun for W in g: poles 0, -(11-5s)/2, -(11+5s)/2 (double); "
        "C = -(5(1+s)/2)(g-2-s), s=sqrt5",
        vw_note, [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {h(-11, 5), 1}, {h(-11, -5), 2}};
            return linear_ode(
                F(FormId::W5, N), F(FormId::GLevel5, N), cleared_A(af),
                cleared_B(af, {{fv(1), fv(0)}, {fv(1), h(-11, 5)}, {fv(-1), h(-11, -5)}}),
                h(-5, -5) * pl({FieldValue(rat(-2), rat(-1)), fv(1)}));
        });
    add(reg, "g06-recurrence-a5-in-v", "G6", CheckKind::RecurrenceExpansion,
        "V = sum a5(n) v^n with (n+1)^2 a5(n+1) + ((11+15s)/2 n(n+1)+5(1+s)/2) a5(n) + "
        "(5(25+11s)/2) n^2 a5(n-1) = 0",
        vw_note, [](const Rational& N) {
            return expansion_res(F(FormId::V5, N), seq_a5(), F(FormId::VSubst, N));
        });
    add(reg, "g06-recurrence-s5-in-g", "G6", CheckKind::RecurrenceExpansion,
        "V = sum s5(n) g^n (4-term recurrence with trailing (11+5s)/2 (n-2)^2 s5(n-2))",
        vw_note, [](const Rational& N) {
            return expansion_res(F(FormId::V5, N), seq_s5(), F(FormId::GLevel5, N));
        });
    add(reg, "g06-recurrence-b5-in-w", "G6", CheckKind::RecurrenceExpansion,
        "W = sum b5(n) w^n (conjugate recurrence of a5)", vw_note, [](const Rational& N) {
            return expansion_res(F(FormId::W5, N), seq_b5(), F(FormId::WSubst, N));
        });
    add(reg, "g06-recurrence-t5-in-g", "G6", CheckKind::RecurrenceExpansion,
        "W = sum t5(n) g^n (conjugate recurrence of s5; initial value read as t5(0)=1)",
        vw_note, [](const Rational& N) {
            return expansion_res(F(FormId::W5, N), seq_t5(), F(FormId::GLevel5, N));
        });
    add(reg, "g06-f-from-vw", "G6", CheckKind::SeriesIdentity,
        "f = ((11+5 sqrt5)/2) W/V", "product route vs V,W quotient", [](const Rational& N) {
            PuiseuxSeries rhs =
                h(11, 5) * (F(FormId::W5, N) * F(FormId::V5, N).inverse());
            return Residuals{F(FormId::FLevel5, N) - rhs};
        });
    add(reg, "g06-j-from-f", "G6", CheckKind::JIdentity,
        "j = (f^4-12f^3+14f^2+12f+1)^3/(f^5 (f^2-11f-1))", "", [](const Rational& N) {
            RationalFunction R{pow(pl({fv(1), fv(12), fv(14), fv(-12), fv(1)}), 3),
                               pow(pl({fv(0), fv(1)}), 5) * pl({fv(-1), fv(-11), fv(1)})};
            return j_res(F(FormId::LittleJ, N), R, F(FormId::FLevel5, N));
        });
    add(reg, "g06-dual-v5", "G6", CheckKind::DualRoute,
        "V: product route vs divisor-series route", "", [](const Rational& N) {
            return dual_res(FormId::V5, N);
        });
    add(reg, "g06-dual-w5", "G6", CheckKind::DualRoute,
        "W: product route vs divisor-series route", "", [](const Rational& N) {
            return dual_res(FormId::W5, N);
        });
    add(reg, "g06-dual-g", "G6", CheckKind::DualRoute,
        "g: product route vs Farkas-Kra fractional-linear image of f", "",
        [](const Rational& N) { return dual_res(FormId::GLevel5, N); });
}

void add_g7(std::vector<CheckSpec>& reg) {
    add(reg, "g07-system-stu", "G7", CheckKind::NonlinearSystem,
        "DS=(-5S^3-66S^2T+7ST^2+5SU)/12; DT=(7S^2T+66ST^2-5T^3+5TU)/12; "
        "DU=(-5S^4-60S^3T-70S^2T^2+60ST^3-5T^4+5U^2)/12; U=E2(5tau)",
        "", [](const Rational& N) {
            PuiseuxSeries S = F(FormId::S5b, N), T = F(FormId::T5b, N);
            PuiseuxSeries U = FR(FormId::E2, rat(5), N);
            PuiseuxSeries S2 = S * S, T2 = T * T;
            return Residuals{
                Dq(S) - fv(1, 12) * (fv(-5) * (S2 * S) - fv(66) * (S2 * T) +
                                     fv(7) * (S * T2) + fv(5) * (S * U)),
                Dq(T) - fv(1, 12) * (fv(7) * (S2 * T) + fv(66) * (S * T2) -
                                     fv(5) * (T2 * T) + fv(5) * (T * U)),
                Dq(U) - fv(1, 12) * (fv(-5) * (S2 * S2) - fv(60) * (S2 * (S * T)) -
                                     fv(70) * (S2 * T2) + fv(60) * (S * (T2 * T)) -
                                     fv(5) * (T2 * T2) + fv(5) * (U * U)),
            };
        });
    add(reg, "g07-system-pqr", "G7", CheckKind::NonlinearSystem,
        "DP=(13P^3+39P^2Q-47PQ^2+9Q^3+50PR)/120; DQ=(-9P^3-47P^2Q-39PQ^2+13Q^3+50QR)/120; "
        "DR=(P^4-3P^3Q-31P^2Q^2+3PQ^3+Q^4+125R^2)/300; R=E2(5tau)",
        "", [](const Rational& N) {
            PuiseuxSeries P = F(FormId::P5b, N), Q = F(FormId::Q5b, N);
            PuiseuxSeries R = FR(FormId::E2, rat(5), N);
            PuiseuxSeries P2 = P * P, Q2 = Q * Q;
            return Residuals{
                Dq(P) - fv(1, 120) * (fv(13) * (P2 * P) + fv(39) * (P2 * Q) -
                                      fv(47) * (P * Q2) + fv(9) * (Q2 * Q) +
                                      fv(50) * (P * R)),
                Dq(Q) - fv(1, 120) * (fv(-9) * (P2 * P) - fv(47) * (P2 * Q) -
                                      fv(39) * (P * Q2) + fv(13) * (Q2 * Q) +
                                      fv(50) * (Q * R)),
                Dq(R) - fv(1, 300) * (P2 * P2 - fv(3) * (P2 * (P * Q)) -
                                      fv(31) * (P2 * Q2) + fv(3) * (P * (Q2 * Q)) +
                                      Q2 * Q2 + fv(125) * (R * R)),
            };
        });
    add(reg, "g07-schwarzian-g", "G7", CheckKind::SchwarzianODE,
        "{g,tau} + (g^4+12g^3+134g^2-12g+1)/(2 g^2 (g^2+11g-1)^2) (g')^2 = 0", "",
        [](const Rational& N) {
            RationalFunction R{pl({fv(1), fv(-12), fv(134), fv(12), fv(1)}),
                               fv(2) * (pow(pl({fv(0), fv(1)}), 2) *
                                        pow(pl({fv(-1), fv(11), fv(1)}), 2))};
            return schwarzian_res(F(FormId::GLevel5, N), R);
        });
    add(reg, "g07-heun-T-in-g", "G7", CheckKind::LinearODE,
        "g(g^2+11g-1) T'' + (3g^2+22g-1) T' + (g+3) T = 0  [Beukers]", "",
        [](const Rational& N) {
            return linear_ode(F(FormId::T5b, N), F(FormId::GLevel5, N),
                              pl({fv(0), fv(-1), fv(11), fv(1)}),
                              pl({fv(-1), fv(22), fv(3)}), pl({fv(3), fv(1)}));
        });
    add(reg, "g07-heun-T-in-G", "G7", CheckKind::LinearODE,
        "Heun for T in G = 2g/(-11+5 sqrt5): poles 0, 1, (-123-55 sqrt5)/2; "
        "C = G + 3(11+5 sqrt5)/2",
        "", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(1), 1}, {h(-123, -55), 1}};
            return linear_ode(F(FormId::T5b, N), F(FormId::BigG5, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)},
                                             {fv(1), fv(1)},
                                             {fv(1), h(-123, -55)}}),
                              pl({h(33, 15), fv(1)}));
        });
    add(reg, "g07-j-from-g", "G7", CheckKind::JIdentity,
        "j = (g^4-228g^3+494g^2+228g+1)^3/(g(-g^2-11g+1)^5)", "", [](const Rational& N) {
            RationalFunction R{pow(pl({fv(1), fv(228), fv(494), fv(-228), fv(1)}), 3),
                               pl({fv(0), fv(1)}) * pow(pl({fv(1), fv(-11), fv(-1)}), 5)};
            return j_res(F(FormId::LittleJ, N), R, F(FormId::GLevel5, N));
        });
    add(reg, "g07-dual-s", "G7", CheckKind::DualRoute,
        "S: product route vs divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::S5b, N); });
    add(reg, "g07-dual-t", "G7", CheckKind::DualRoute,
        "T: product route vs divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::T5b, N); });
    add(reg, "g07-dual-p", "G7", CheckKind::DualRoute,
        "P: divisor-series route vs T-3S", "",
        [](const Rational& N) { return dual_res(FormId::P5b, N); });
    add(reg, "g07-dual-q", "G7", CheckKind::DualRoute,
        "Q: divisor-series route vs S+3T", "",
        [](const Rational& N) { return dual_res(FormId::Q5b, N); });
}

// shared shapes for the level-6 a/b/c composition ODEs (sympy-verified
// against the hypergeometric pullbacks; x0 marks the double pole)
struct AbcOde {
    const char* suffix;
    FormId yform;
    Rational yrescale;
    std::vector<AFactor> af;
    std::vector<BTerm> bt;
    Polynomial C;
    const char* statement;
};

void add_abc(std::vector<CheckSpec>& reg, const std::string& group_lower,
             const std::string& group, FormId haupt, const std::vector<AbcOde>& odes,
             const char* note = "") {
    for (const auto& o : odes) {
        add(reg, group_lower + "-ode-" + o.suffix, group, CheckKind::LinearODE, o.statement,
            note, [o, haupt](const Rational& N) {
                PuiseuxSeries y = o.yrescale == 1 ? F(o.yform, N) : FR(o.yform, o.yrescale, N);
                return linear_ode(y, F(haupt, N), cleared_A(o.af), cleared_B(o.af, o.bt),
                                  o.C);
            });
    }
}

void add_g8(std::vector<CheckSpec>& reg) {
    add(reg, "g08-system", "G8", CheckKind::NonlinearSystem,
        "DP=(27P^3-36P^2Q+5PQ^2+4PR)/48; DQ=(-27P^2Q+24PQ^2-Q^3+4QR)/48; "
        "DR=(-729P^4+972P^3Q-270P^2Q^2+12PQ^3-Q^4+16R^2)/192; R=E2",
        "", [](const Rational& N) {
            PuiseuxSeries P = F(FormId::P6a, N), Q = F(FormId::Q6a, N), R = F(FormId::E2, N);
            PuiseuxSeries P2 = P * P, Q2 = Q * Q;
            return Residuals{
                Dq(P) - fv(1, 48) * (fv(27) * (P2 * P) - fv(36) * (P2 * Q) +
                                     fv(5) * (P * Q2) + fv(4) * (P * R)),
                Dq(Q) - fv(1, 48) * (fv(-27) * (P2 * Q) + fv(24) * (P * Q2) -
                                     Q2 * Q + fv(4) * (Q * R)),
                Dq(R) - fv(1, 192) * (fv(-729) * (P2 * P2) + fv(972) * (P2 * (P * Q)) -
                                      fv(270) * (P2 * Q2) + fv(12) * (P * (Q2 * Q)) -
                                      Q2 * Q2 + fv(16) * (R * R)),
            };
        });
    add(reg, "g08-schwarzian-f", "G8", CheckKind::SchwarzianODE,
        "{f,tau} + (81f^4-108f^3+102f^2-12f+1)/(2 (1-9f)^2 (f-1)^2 f^2) (f')^2 = 0", "",
        [](const Rational& N) {
            RationalFunction R{pl({fv(1), fv(-12), fv(102), fv(-108), fv(81)}),
                               fv(2) * (pow(pl({fv(-1), fv(9)}), 2) *
                                        pow(pl({fv(-1), fv(1)}), 2) *
                                        pow(pl({fv(0), fv(1)}), 2))};
            return schwarzian_res(F(FormId::F6a, N), R);
        });
    add(reg, "g08-heun-p-prop", "G8", CheckKind::LinearODE,
        "P'' + (-1/f+1/(f-1)+1/(f-1/9)) P' - (f-1/3)/(3f^2(f-1)(f-1/9)) P = 0",
        "cleared by f^2(f-1)(f-1/9)", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 2}, {fv(1), 1}, {fv(1, 9), 1}};
            return linear_ode(
                F(FormId::P6a, N), F(FormId::F6a, N), cleared_A(af),
                cleared_B(af, {{fv(-1), fv(0)}, {fv(1), fv(1)}, {fv(1), fv(1, 9)}}),
                pl({fv(1, 9), fv(-1, 3)}));
        });
    add(reg, "g08-heun-p-ftilde", "G8", CheckKind::LinearODE,
        "ft(ft-1)(ft-9) P'' + ((ft-1)(ft-9)+ft(ft-9)+ft(ft-1)) P' + (ft-3) P = 0, ft=1/f  "
        "[Cooper]",
        "", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(1), 1}, {fv(9), 1}};
            return linear_ode(F(FormId::P6a, N), F(FormId::F6aTilde, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(1), fv(9)}}),
                              pl({fv(-3), fv(1)}));
        });
    add(reg, "g08-heun-p-in-u", "G8", CheckKind::LinearODE,
        "Heun for P in u=(ft-1)/(-8): poles 0,-1,1/8; C = u+1/4", "", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(-1), 1}, {fv(1, 8), 1}};
            return linear_ode(F(FormId::P6a, N), F(FormId::USubst6a, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)},
                                             {fv(1), fv(-1)},
                                             {fv(1), fv(1, 8)}}),
                              pl({fv(1, 4), fv(1)}));
        });
    add(reg, "g08-heun-q", "G8", CheckKind::LinearODE,
        "f(f-1)(f-1/9) Q'' + (...) Q' + (f-1/3) Q = 0  [Cooper]", "", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 1}};
            return linear_ode(
                F(FormId::Q6a, N), F(FormId::F6a, N), cleared_A(af),
                cleared_B(af, {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(1), fv(1, 9)}}),
                pl({fv(-1, 3), fv(1)}));
        });
    add(reg, "g08-heun-q-in-v", "G8", CheckKind::LinearODE,
        "Heun for Q in v=(f-1)/8: poles 0,-1/8,-1/9; C = v+1/12", "", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(-1, 8), 1}, {fv(-1, 9), 1}};
            return linear_ode(F(FormId::Q6a, N), F(FormId::VSubst6a, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)},
                                             {fv(1), fv(-1, 8)},
                                             {fv(1), fv(-1, 9)}}),
                              pl({fv(1, 12), fv(1)}));
        });
    add_abc(reg, "g08", "G8", FormId::F6a,
            {
                {"a-q", FormId::BorweinA, rat(1),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 3), 2}, {fv(1, 9), 1}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-2), fv(1, 3)}, {fv(1), fv(1, 9)}},
                 fv(-8, 27) * pl({fv(0), fv(1)}),
                 "a(tau) in f: x = 27f^2(f-1)/(3f-1)^3 composed into the level-3 a-ODE"},
                {"a-q2", FormId::BorweinA, rat(2),
                 {{fv(0), 1}, {fv(1), 1}, {fv(-1, 3), 2}, {fv(1, 9), 1}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-2), fv(-1, 3)}, {fv(1), fv(1, 9)}},
                 fv(-2, 3) * (pl({fv(-1), fv(1)}) * pl({fv(-1, 9), fv(1)})),
                 "a(2tau) in f: x = 27f(f-1)^2/(3f+1)^3"},
                {"b-q", FormId::BorweinB, rat(1),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 2}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(1, 3), fv(1, 9)}},
                 fv(4, 9) * (pl({fv(0), fv(1)}) * pl({fv(-1, 3), fv(1)})),
                 "b(tau) in f: y = (3f-1)^3/(9f-1)"},
                {"b-q2", FormId::BorweinB, rat(2),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 2}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-1, 3), fv(1, 9)}},
                 fv(1, 9) * (pl({fv(-1), fv(1)}) * pl({fv(1, 3), fv(1)})),
                 "b(2tau) in f: y = (3f+1)^3/(1-9f)^2 (first-order term corrected to "
                 "-(1/3)/(f-1/9))"},
                {"c-q", FormId::BorweinC, rat(1),
                 {{fv(0), 2}, {fv(1), 2}, {fv(1, 9), 1}},
                 {{fv(-1, 3), fv(0)}, {fv(1, 3), fv(1)}, {fv(1), fv(1, 9)}},
                 fv(4, 27) * pl({fv(-1, 3), fv(1)}),
                 "c(tau) in f: z = (3f-1)^3/(27f^2(f-1))"},
                {"c-q2", FormId::BorweinC, rat(2),
                 {{fv(0), 2}, {fv(1), 2}, {fv(1, 9), 1}},
                 {{fv(1, 3), fv(0)}, {fv(-1, 3), fv(1)}, {fv(1), fv(1, 9)}},
                 fv(1, 3) * (pl({fv(1, 3), fv(1)}) * pl({fv(-1, 9), fv(1)})),
                 "c(2tau) in f: z = (3f+1)^3/(27f(f-1)^2)"},
            });
    // the six printed P,Q combinations behind the substitutions
    struct Identity {
        const char* id;
        const char* st;
        Builder fn;
    };
    std::vector<Identity> ids{
        {"g08-identity-a-q", "a(tau) = (3/2)P - (1/2)Q",
         [](const Rational& N) {
             return Residuals{F(FormId::BorweinA, N) -
                              (fv(3, 2) * F(FormId::P6a, N) - fv(1, 2) * F(FormId::Q6a, N))};
         }},
        {"g08-identity-c3-q", "c^3(tau) = (27/8)(P^3 - P^2 Q)",
         [](const Rational& N) {
             PuiseuxSeries P = F(FormId::P6a, N), Q = F(FormId::Q6a, N);
             return Residuals{F(FormId::BorweinC, N).pow_int(3) -
                              fv(27, 8) * (P * P * (P - Q))};
         }},
        {"g08-identity-a-q2", "a(2tau) = (3/4)P + (1/4)Q",
         [](const Rational& N) {
             return Residuals{FR(FormId::BorweinA, rat(2), N) -
                              (fv(3, 4) * F(FormId::P6a, N) + fv(1, 4) * F(FormId::Q6a, N))};
         }},
        {"g08-identity-c3-q2", "c^3(2tau) = (27/64)(P^3 - 2P^2 Q + P Q^2)",
         [](const Rational& N) {
             PuiseuxSeries P = F(FormId::P6a, N), Q = F(FormId::Q6a, N);
             return Residuals{FR(FormId::BorweinC, rat(2), N).pow_int(3) -
                              fv(27, 64) * (P * (P - Q) * (P - Q))};
         }},
        {"g08-identity-b3-q", "b^3(tau) = (1/8)(9P Q^2 - Q^3)",
         [](const Rational& N) {
             PuiseuxSeries P = F(FormId::P6a, N), Q = F(FormId::Q6a, N);
             return Residuals{F(FormId::BorweinB, N).pow_int(3) -
                              fv(1, 8) * (Q * Q * (fv(9) * P - Q))};
         }},
        {"g08-identity-b3-q2", "b^3(2tau) = (1/64)(81P^2 Q - 18P Q^2 + Q^3)",
         [](const Rational& N) {
             PuiseuxSeries P = F(FormId::P6a, N), Q = F(FormId::Q6a, N);
             return Residuals{FR(FormId::BorweinB, rat(2), N).pow_int(3) -
                              fv(1, 64) * (Q * (fv(9) * P - Q) * (fv(9) * P - Q))};
         }},
    };
    for (auto& i : ids)
        add(reg, i.id, "G8", CheckKind::SeriesIdentity, i.st, "", std::move(i.fn));
    add(reg, "g08-j-from-f", "G8", CheckKind::JIdentity,
        "j = (3f-1)^3(243f^3-243f^2+9f-1)^3/(f^2(f-1)(9f-1)^3)", "", [](const Rational& N) {
            RationalFunction R{
                pow(pl({fv(-1), fv(3)}), 3) * pow(pl({fv(-1), fv(9), fv(-243), fv(243)}), 3),
                pow(pl({fv(0), fv(1)}), 2) * pl({fv(-1), fv(1)}) *
                    pow(pl({fv(-1), fv(9)}), 3)};
            return j_res(F(FormId::LittleJ, N), R, F(FormId::F6a, N));
        });
    add(reg, "g08-dual-p", "G8", CheckKind::DualRoute,
        "P: eta quotient vs divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::P6a, N); });
    add(reg, "g08-dual-q", "G8", CheckKind::DualRoute,
        "Q: eta quotient vs divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::Q6a, N); });
}

void add_g9(std::vector<CheckSpec>& reg) {
    add(reg, "g09-system", "G9", CheckKind::NonlinearSystem,
        "DP=(-P^3+12P^2Q-15PQ^2+PR)/2; DQ=(P^2Q-8PQ^2+3Q^3+QR)/2; "
        "DR=(-P^4+12P^3Q-30P^2Q^2+12PQ^3-9Q^4+R^2)/2; R=E2(6tau)",
        "", [](const Rational& N) {
            PuiseuxSeries P = F(FormId::P6b, N), Q = F(FormId::Q6b, N);
            PuiseuxSeries R = FR(FormId::E2, rat(6), N);
            PuiseuxSeries P2 = P * P, Q2 = Q * Q;
            return Residuals{
                Dq(P) - fv(1, 2) * (-(P2 * P) + fv(12) * (P2 * Q) - fv(15) * (P * Q2) +
                                    P * R),
                Dq(Q) - fv(1, 2) * (P2 * Q - fv(8) * (P * Q2) + fv(3) * (Q2 * Q) + Q * R),
                Dq(R) - fv(1, 2) * (-(P2 * P2) + fv(12) * (P2 * (P * Q)) -
                                    fv(30) * (P2 * Q2) + fv(12) * (P * (Q2 * Q)) -
                                    fv(9) * (Q2 * Q2) + R * R),
            };
        });
    add(reg, "g09-schwarzian-g", "G9", CheckKind::SchwarzianODE,
        "{g,tau} + (81g^4-108g^3+102g^2-12g+1)/(2 (9g-1)^2 (g-1)^2 g^2) (g')^2 = 0", "",
        [](const Rational& N) {
            RationalFunction R{pl({fv(1), fv(-12), fv(102), fv(-108), fv(81)}),
                               fv(2) * (pow(pl({fv(-1), fv(9)}), 2) *
                                        pow(pl({fv(-1), fv(1)}), 2) *
                                        pow(pl({fv(0), fv(1)}), 2))};
            return schwarzian_res(F(FormId::G6b, N), R);
        });
    add(reg, "g09-heun-p", "G9", CheckKind::LinearODE,
        "g(g-1)(g-1/9) P'' + (...) P' + (g-1/3) P = 0  [Cooper]", "", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 1}};
            return linear_ode(
                F(FormId::P6b, N), F(FormId::G6b, N), cleared_A(af),
                cleared_B(af, {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(1), fv(1, 9)}}),
                pl({fv(-1, 3), fv(1)}));
        });
    add_abc(reg, "g09", "G9", FormId::G6b,
            {
                {"a-q", FormId::BorweinA, rat(1),
                 {{fv(0), 1}, {fv(1), 1}, {fv(-1, 3), 2}, {fv(1, 9), 1}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-2), fv(-1, 3)}, {fv(1), fv(1, 9)}},
                 fv(-2, 3) * (pl({fv(-1), fv(1)}) * pl({fv(-1, 9), fv(1)})),
                 "a(tau) in g: x = 27(1-g)^2 g/(3g+1)^3"},
                {"a-q2", FormId::BorweinA, rat(2),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 3), 2}, {fv(1, 9), 1}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-2), fv(1, 3)}, {fv(1), fv(1, 9)}},
                 fv(-8, 27) * pl({fv(0), fv(1)}),
                 "a(2tau) in g: x = 27(1-g)g^2/(1-3g)^3"},
                {"b-q", FormId::BorweinB, rat(1),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 2}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-1, 3), fv(1, 9)}},
                 fv(1, 9) * (pl({fv(-1), fv(1)}) * pl({fv(1, 3), fv(1)})),
                 "b(tau) in g: y = (3g+1)^3/(1-9g)^2"},
                {"b-q2", FormId::BorweinB, rat(2),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 2}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(1, 3), fv(1, 9)}},
                 fv(4, 9) * (pl({fv(0), fv(1)}) * pl({fv(-1, 3), fv(1)})),
                 "b(2tau) in g: y = (1-3g)^3/(1-9g)"},
                {"c-q", FormId::BorweinC, rat(1),
                 {{fv(0), 2}, {fv(1), 2}, {fv(1, 9), 1}},
                 {{fv(1, 3), fv(0)}, {fv(-1, 3), fv(1)}, {fv(1), fv(1, 9)}},
                 fv(1, 3) * (pl({fv(1, 3), fv(1)}) * pl({fv(-1, 9), fv(1)})),
                 "c(tau) in g: z = (3g+1)^3/(27(1-g)^2 g)"},
                {"c-q2", FormId::BorweinC, rat(2),
                 {{fv(0), 2}, {fv(1), 2}, {fv(1, 9), 1}},
                 {{fv(-1, 3), fv(0)}, {fv(1, 3), fv(1)}, {fv(1), fv(1, 9)}},
                 fv(4, 27) * pl({fv(-1, 3), fv(1)}),
                 "c(2tau) in g: z = (1-3g)^3/(27(1-g)g^2)"},
            });
    struct Identity {
        const char* id;
        const char* st;
        Builder fn;
    };
    std::vector<Identity> ids{
        {"g09-identity-a-q", "a(tau) = P + 3Q",
         [](const Rational& N) {
             return Residuals{F(FormId::BorweinA, N) -
                              (F(FormId::P6b, N) + fv(3) * F(FormId::Q6b, N))};
         }},
        {"g09-identity-c3-q", "c^3(tau) = 27P^2Q - 54PQ^2 + 27Q^3",
         [](const Rational& N) {
             PuiseuxSeries P = F(FormId::P6b, N), Q = F(FormId::Q6b, N);
             return Residuals{F(FormId::BorweinC, N).pow_int(3) -
                              fv(27) * (Q * (P - Q) * (P - Q))};
         }},
        {"g09-identity-a-q2", "a(2tau) = P - 3Q",
         [](const Rational& N) {
             return Residuals{FR(FormId::BorweinA, rat(2), N) -
                              (F(FormId::P6b, N) - fv(3) * F(FormId::Q6b, N))};
         }},
        {"g09-identity-c3-q2", "c^3(2tau) = 27PQ^2 - 27Q^3",
         [](const Rational& N) {
             PuiseuxSeries P = F(FormId::P6b, N), Q = F(FormId::Q6b, N);
             return Residuals{FR(FormId::BorweinC, rat(2), N).pow_int(3) -
                              fv(27) * (Q * Q * (P - Q))};
         }},
        {"g09-identity-b3-q", "b^3(tau) = P^3 - 18P^2Q + 81PQ^2",
         [](const Rational& N) {
             PuiseuxSeries P = F(FormId::P6b, N), Q = F(FormId::Q6b, N);
             return Residuals{F(FormId::BorweinB, N).pow_int(3) -
                              (P * (P - fv(9) * Q) * (P - fv(9) * Q))};
         }},
        {"g09-identity-b3-q2", "b^3(2tau) = P^3 - 9P^2Q",
         [](const Rational& N) {
             PuiseuxSeries P = F(FormId::P6b, N), Q = F(FormId::Q6b, N);
             return Residuals{FR(FormId::BorweinB, rat(2), N).pow_int(3) -
                              (P * P * (P - fv(9) * Q))};
         }},
    };
    for (auto& i : ids)
        add(reg, i.id, "G9", CheckKind::SeriesIdentity, i.st, "", std::move(i.fn));
    add(reg, "g09-j-from-g", "G9", CheckKind::JIdentity,
        "j = (3g+1)^3(243g^3-405g^2+225g+1)^3/(g(g-1)^2(9g-1)^6)", "",
        [](const Rational& N) {
            RationalFunction R{
                pow(pl({fv(1), fv(3)}), 3) * pow(pl({fv(1), fv(225), fv(-405), fv(243)}), 3),
                pl({fv(0), fv(1)}) * pow(pl({fv(-1), fv(1)}), 2) *
                    pow(pl({fv(-1), fv(9)}), 6)};
            return j_res(F(FormId::LittleJ, N), R, F(FormId::G6b, N));
        });
    add(reg, "g09-dual-p", "G9", CheckKind::DualRoute,
        "P: eta quotient vs divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::P6b, N); });
    add(reg, "g09-dual-q", "G9", CheckKind::DualRoute,
        "Q: eta quotient vs divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::Q6b, N); });
}

void add_g10(std::vector<CheckSpec>& reg) {
    add(reg, "g10-system", "G10", CheckKind::NonlinearSystem,
        "DQ=(27Q^3-36Q^2T+5QT^2+QS)/12; DT=(-27Q^2T+24QT^2-T^3+ST)/12; "
        "DS=(-729Q^4+972Q^3T-270Q^2T^2+12QT^3-T^4+S^2)/12; S=E2",
        "half-integral exponents throughout", [](const Rational& N) {
            PuiseuxSeries Q = F(FormId::Q6c, N), T = F(FormId::T6c, N), S = F(FormId::E2, N);
            PuiseuxSeries Q2 = Q * Q, T2 = T * T;
            return Residuals{
                Dq(Q) - fv(1, 12) * (fv(27) * (Q2 * Q) - fv(36) * (Q2 * T) +
                                     fv(5) * (Q * T2) + Q * S),
                Dq(T) - fv(1, 12) * (fv(-27) * (Q2 * T) + fv(24) * (Q * T2) - T2 * T +
                                     S * T),
                Dq(S) - fv(1, 12) * (fv(-729) * (Q2 * Q2) + fv(972) * (Q2 * (Q * T)) -
                                     fv(270) * (Q2 * T2) + fv(12) * (Q * (T2 * T)) -
                                     T2 * T2 + S * S),
            };
        });
    add(reg, "g10-schwarzian-t", "G10", CheckKind::SchwarzianODE,
        "{t,tau} + (81t^4-108t^3+102t^2-12t+1)/(2 t^2 (9t-1)^2 (t-1)^2) (t')^2 = 0", "",
        [](const Rational& N) {
            RationalFunction R{pl({fv(1), fv(-12), fv(102), fv(-108), fv(81)}),
                               fv(2) * (pow(pl({fv(0), fv(1)}), 2) *
                                        pow(pl({fv(-1), fv(9)}), 2) *
                                        pow(pl({fv(-1), fv(1)}), 2))};
            return schwarzian_res(F(FormId::T6cHaupt, N), R);
        });
    add(reg, "g10-heun-T", "G10", CheckKind::LinearODE,
        "t(t-1)(t-1/9) T'' + (...) T' + (t-1/3) T = 0", "", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 1}};
            return linear_ode(
                F(FormId::T6c, N), F(FormId::T6cHaupt, N), cleared_A(af),
                cleared_B(af, {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(1), fv(1, 9)}}),
                pl({fv(-1, 3), fv(1)}));
        });
    add_abc(reg, "g10", "G10", FormId::T6cHaupt,
            {
                {"a-qhalf", FormId::BorweinA, rat(1, 2),
                 {{fv(0), 1}, {fv(1), 1}, {fv(-1, 3), 2}, {fv(1, 9), 1}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-2), fv(-1, 3)}, {fv(1), fv(1, 9)}},
                 fv(-2, 3) * (pl({fv(-1), fv(1)}) * pl({fv(-1, 9), fv(1)})),
                 "a(tau/2) in t: x = 27(t-1)^2 t/(3t+1)^3"},
                {"a-q", FormId::BorweinA, rat(1),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 3), 2}, {fv(1, 9), 1}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-2), fv(1, 3)}, {fv(1), fv(1, 9)}},
                 fv(-8, 27) * pl({fv(0), fv(1)}),
                 "a(tau) in t: x = 27(t-1)t^2/(3t-1)^3"},
                {"b-qhalf", FormId::BorweinB, rat(1, 2),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 2}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(-1, 3), fv(1, 9)}},
                 fv(1, 9) * (pl({fv(-1), fv(1)}) * pl({fv(1, 3), fv(1)})),
                 "b(tau/2) in t: y = (3t+1)^3/(9t-1)^2"},
                {"b-q", FormId::BorweinB, rat(1),
                 {{fv(0), 1}, {fv(1), 1}, {fv(1, 9), 2}},
                 {{fv(1), fv(0)}, {fv(1), fv(1)}, {fv(1, 3), fv(1, 9)}},
                 fv(4, 9) * (pl({fv(0), fv(1)}) * pl({fv(-1, 3), fv(1)})),
                 "b(tau) in t: y = (3t-1)^3/(9t-1)"},
                {"c-qhalf", FormId::BorweinC, rat(1, 2),
                 {{fv(0), 2}, {fv(1), 2}, {fv(1, 9), 1}},
                 {{fv(1, 3), fv(0)}, {fv(-1, 3), fv(1)}, {fv(1), fv(1, 9)}},
                 fv(1, 3) * (pl({fv(1, 3), fv(1)}) * pl({fv(-1, 9), fv(1)})),
                 "c(tau/2) in t: z = (3t+1)^3/(27(1-t)^2 t)"},
                {"c-q", FormId::BorweinC, rat(1),
                 {{fv(0), 2}, {fv(1), 2}, {fv(1, 9), 1}},
                 {{fv(-1, 3), fv(0)}, {fv(1, 3), fv(1)}, {fv(1), fv(1, 9)}},
                 fv(4, 27) * pl({fv(-1, 3), fv(1)}),
                 "c(tau) in t: z = (1-3t)^3/(27(1-t)t^2)"},
            });
    struct Identity {
        const char* id;
        const char* st;
        Builder fn;
    };
    std::vector<Identity> ids{
        {"g10-identity-a-qhalf", "a(tau/2) = T + 3Q",
         [](const Rational& N) {
             return Residuals{FR(FormId::BorweinA, rat(1, 2), N) -
                              (F(FormId::T6c, N) + fv(3) * F(FormId::Q6c, N))};
         }},
        {"g10-identity-c3-qhalf", "c^3(tau/2) = 27Q^3 - 54Q^2T + 27QT^2",
         [](const Rational& N) {
             PuiseuxSeries Q = F(FormId::Q6c, N), T = F(FormId::T6c, N);
             return Residuals{FR(FormId::BorweinC, rat(1, 2), N).pow_int(3) -
                              fv(27) * (Q * (Q - T) * (Q - T))};
         }},
        {"g10-identity-a-q", "a(tau) = T - 3Q",
         [](const Rational& N) {
             return Residuals{F(FormId::BorweinA, N) -
                              (F(FormId::T6c, N) - fv(3) * F(FormId::Q6c, N))};
         }},
        {"g10-identity-c3-q", "c^3(tau) = -27Q^3 + 27Q^2T",
         [](const Rational& N) {
             PuiseuxSeries Q = F(FormId::Q6c, N), T = F(FormId::T6c, N);
             return Residuals{F(FormId::BorweinC, N).pow_int(3) -
                              fv(27) * (Q * Q * (T - Q))};
         }},
        {"g10-identity-b3-qhalf", "b^3(tau/2) = 81Q^2T - 18QT^2 + T^3",
         [](const Rational& N) {
             PuiseuxSeries Q = F(FormId::Q6c, N), T = F(FormId::T6c, N);
             return Residuals{FR(FormId::BorweinB, rat(1, 2), N).pow_int(3) -
                              (T * (fv(9) * Q - T) * (fv(9) * Q - T))};
         }},
        {"g10-identity-b3-q", "b^3(tau) = T^3 - 9QT^2",
         [](const Rational& N) {
             PuiseuxSeries Q = F(FormId::Q6c, N), T = F(FormId::T6c, N);
             return Residuals{F(FormId::BorweinB, N).pow_int(3) -
                              (T * T * (T - fv(9) * Q))};
         }},
    };
    for (auto& i : ids)
        add(reg, i.id, "G10", CheckKind::SeriesIdentity, i.st, "", std::move(i.fn));
    add(reg, "g10-j-from-t", "G10", CheckKind::JIdentity,
        "j = (3t-1)^3(243t^3-243t^2+9t-1)^3/(t^2(t-1)(9t-1)^3)", "", [](const Rational& N) {
            RationalFunction R{
                pow(pl({fv(-1), fv(3)}), 3) * pow(pl({fv(-1), fv(9), fv(-243), fv(243)}), 3),
                pow(pl({fv(0), fv(1)}), 2) * pl({fv(-1), fv(1)}) *
                    pow(pl({fv(-1), fv(9)}), 3)};
            return j_res(F(FormId::LittleJ, N), R, F(FormId::T6cHaupt, N));
        });
    add(reg, "g10-dual-q", "G10", CheckKind::DualRoute,
        "Q: eta quotient vs starred divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::Q6c, N); });
    add(reg, "g10-dual-t", "G10", CheckKind::DualRoute,
        "T: eta quotient vs starred divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::T6c, N); });
}

void add_g11(std::vector<CheckSpec>& reg) {
    add(reg, "g11-system", "G11", CheckKind::NonlinearSystem,
        "DR=(27R^3+36R^2U+5RU^2+RS)/12; DU=(-27R^2U-24RU^2-U^3+SU)/12; "
        "DS=(-729R^4-972R^3U-270R^2U^2-12RU^3-U^4+S^2)/12; S=E2",
        "", [](const Rational& N) {
            PuiseuxSeries R = F(FormId::R6d, N), U = F(FormId::U6d, N), S = F(FormId::E2, N);
            PuiseuxSeries R2 = R * R, U2 = U * U;
            return Residuals{
                Dq(R) - fv(1, 12) * (fv(27) * (R2 * R) + fv(36) * (R2 * U) +
                                     fv(5) * (R * U2) + R * S),
                Dq(U) - fv(1, 12) * (fv(-27) * (R2 * U) - fv(24) * (R * U2) - U2 * U +
                                     S * U),
                Dq(S) - fv(1, 12) * (fv(-729) * (R2 * R2) - fv(972) * (R2 * (R * U)) -
                                     fv(270) * (R2 * U2) - fv(12) * (R * (U2 * U)) -
                                     U2 * U2 + S * S),
            };
        });
    add(reg, "g11-schwarzian-u", "G11", CheckKind::SchwarzianODE,
        "{u,tau} + (81u^4+108u^3+102u^2+12u+1)/(2 u^2 (u+1)^2 (9u+1)^2) (u')^2 = 0", "",
        [](const Rational& N) {
            RationalFunction R{pl({fv(1), fv(12), fv(102), fv(108), fv(81)}),
                               fv(2) * (pow(pl({fv(0), fv(1)}), 2) *
                                        pow(pl({fv(1), fv(1)}), 2) *
                                        pow(pl({fv(1), fv(9)}), 2))};
            return schwarzian_res(F(FormId::U6dHaupt, N), R);
        });
    add(reg, "g11-heun-U", "G11", CheckKind::LinearODE,
        "u(u+1)(u+1/9) U'' + (...) U' + (u+1/3) U = 0", "", [](const Rational& N) {
            std::vector<AFactor> af{{fv(0), 1}, {fv(-1), 1}, {fv(-1, 9), 1}};
            return linear_ode(
                F(FormId::U6d, N), F(FormId::U6dHaupt, N), cleared_A(af),
                cleared_B(af, {{fv(1), fv(0)}, {fv(1), fv(-1)}, {fv(1), fv(-1, 9)}}),
                pl({fv(1, 3), fv(1)}));
        });
    add_abc(reg, "g11", "G11", FormId::U6dHaupt,
            {
                {"a-q", FormId::BorweinA, rat(1),
                 {{fv(0), 1}, {fv(-1), 1}, {fv(-1, 3), 2}, {fv(-1, 9), 1}},
                 {{fv(1), fv(0)}, {fv(1), fv(-1)}, {fv(-2), fv(-1, 3)}, {fv(1), fv(-1, 9)}},
                 fv(-8, 27) * pl({fv(0), fv(1)}),
                 "a(tau) in u: x = 27u^2(u+1)/(3u+1)^3"},
                {"b-q", FormId::BorweinB, rat(1),
                 {{fv(0), 1}, {fv(-1), 1}, {fv(-1, 9), 2}},
                 {{fv(1), fv(0)}, {fv(1), fv(-1)}, {fv(1, 3), fv(-1, 9)}},
                 fv(4, 9) * (pl({fv(0), fv(1)}) * pl({fv(1, 3), fv(1)})),
                 "b(tau) in u: y = (3u+1)^3/(9u+1)"},
                {"c-q", FormId::BorweinC, rat(1),
                 {{fv(0), 2}, {fv(-1), 2}, {fv(-1, 9), 1}},
                 {{fv(-1, 3), fv(0)}, {fv(1, 3), fv(-1)}, {fv(1), fv(-1, 9)}},
                 fv(4, 27) * pl({fv(1, 3), fv(1)}),
                 "c(tau) in u: z = (3u+1)^3/(27u^2(u+1))"},
            });
    struct Identity {
        const char* id;
        const char* st;
        Builder fn;
    };
    std::vector<Identity> ids{
        {"g11-identity-a-q", "a(tau) = U + 3R",
         [](const Rational& N) {
             return Residuals{F(FormId::BorweinA, N) -
                              (F(FormId::U6d, N) + fv(3) * F(FormId::R6d, N))};
         }},
        {"g11-identity-c3-q", "c^3(tau) = 27R^3 + 27R^2U",
         [](const Rational& N) {
             PuiseuxSeries R = F(FormId::R6d, N), U = F(FormId::U6d, N);
             return Residuals{F(FormId::BorweinC, N).pow_int(3) -
                              fv(27) * (R * R * (R + U))};
         }},
        {"g11-identity-b3-q", "b^3(tau) = 9RU^2 + U^3",
         [](const Rational& N) {
             PuiseuxSeries R = F(FormId::R6d, N), U = F(FormId::U6d, N);
             return Residuals{F(FormId::BorweinB, N).pow_int(3) -
                              (U * U * (fv(9) * R + U))};
         }},
    };
    for (auto& i : ids)
        add(reg, i.id, "G11", CheckKind::SeriesIdentity, i.st, "", std::move(i.fn));
    add(reg, "g11-j-from-u", "G11", CheckKind::JIdentity,
        "j = (3u+1)^3(243u^3+243u^2+9u+1)^3/(u^2(u+1)(9u+1)^3)", "", [](const Rational& N) {
            RationalFunction R{
                pow(pl({fv(1), fv(3)}), 3) * pow(pl({fv(1), fv(9), fv(243), fv(243)}), 3),
                pow(pl({fv(0), fv(1)}), 2) * pl({fv(1), fv(1)}) * pow(pl({fv(1), fv(9)}), 3)};
            return j_res(F(FormId::LittleJ, N), R, F(FormId::U6dHaupt, N));
        });
    add(reg, "g11-dual-r", "G11", CheckKind::DualRoute,
        "R: eta quotient vs starred divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::R6d, N); });
    add(reg, "g11-dual-u", "G11", CheckKind::DualRoute,
        "U: eta quotient vs starred divisor-series route", "",
        [](const Rational& N) { return dual_res(FormId::U6d, N); });
}

void add_g12(std::vector<CheckSpec>& reg) {
    add(reg, "g12-relation", "G12", CheckKind::SeriesIdentity,
        "P(Q-R) + 2(Q^2-QR+R^2) = 0 with P=a(tau)", "", [](const Rational& N) {
            PuiseuxSeries P = F(FormId::BorweinA, N), Q = F(FormId::Q6c, N),
                          R = F(FormId::R6d, N);
            return Residuals{P * (Q - R) + fv(2) * (Q * Q - Q * R + R * R)};
        });
    add(reg, "g12-system-original", "G12", CheckKind::NonlinearSystem,
        "DP=(-P^3+108PQ^2+216Q^3+PS)/12=(-P^3+108PR^2-216R^3+PS)/12; "
        "DQ=(5P^2Q-6PQ^2-36Q^3+QS)/12; DR=(5P^2R+6PR^2-36R^3+RS)/12; "
        "DS=(-P^4-216P^2Q^2-432PQ^3+S^2)/12=(-P^4-216P^2R^2+432PR^3+S^2)/12",
        "", [](const Rational& N) {
            PuiseuxSeries P = F(FormId::BorweinA, N), Q = F(FormId::Q6c, N),
                          R = F(FormId::R6d, N), S = F(FormId::E2, N);
            PuiseuxSeries P2 = P * P, Q2 = Q * Q, R2 = R * R;
            return Residuals{
                Dq(P) - fv(1, 12) * (-(P2 * P) + fv(108) * (P * Q2) +
                                     fv(216) * (Q2 * Q) + P * S),
                Dq(P) - fv(1, 12) * (-(P2 * P) + fv(108) * (P * R2) -
                                     fv(216) * (R2 * R) + P * S),
                Dq(Q) - fv(1, 12) * (fv(5) * (P2 * Q) - fv(6) * (P * Q2) -
                                     fv(36) * (Q2 * Q) + Q * S),
                Dq(R) - fv(1, 12) * (fv(5) * (P2 * R) + fv(6) * (P * R2) -
                                     fv(36) * (R2 * R) + R * S),
                Dq(S) - fv(1, 12) * (-(P2 * P2) - fv(216) * (P2 * Q2) -
                                     fv(432) * (P * (Q2 * Q)) + S * S),
                Dq(S) - fv(1, 12) * (-(P2 * P2) - fv(216) * (P2 * R2) +
                                     fv(432) * (P * (R2 * R)) + S * S),
            };
        });
    add(reg, "g12-system-rewritten", "G12", CheckKind::NonlinearSystem,
        "12(Q-R)^2 DQ + Q(4Q^4-8Q^3R-48Q^2R^2+52QR^3-20R^4-Q^2S+2QRS-R^2S) = 0; "
        "DR analogous; 12(Q-R)^4 DS + (16Q^8-...+16R^8 - (Q-R)^4 S^2...) = 0",
        "pole-cleared by powers of (Q-R)", [](const Rational& N) {
            PuiseuxSeries Q = F(FormId::Q6c, N), R = F(FormId::R6d, N), S = F(FormId::E2, N);
            PuiseuxSeries D2 = (Q - R) * (Q - R);
            PuiseuxSeries Q2 = Q * Q, R2 = R * R;
            PuiseuxSeries Q3 = Q2 * Q, R3 = R2 * R;
            PuiseuxSeries Q4 = Q2 * Q2, R4 = R2 * R2;
            PuiseuxSeries rq =
                fv(12) * (D2 * Dq(Q)) +
                Q * (fv(4) * Q4 - fv(8) * (Q3 * R) - fv(48) * (Q2 * R2) +
                     fv(52) * (Q * R3) - fv(20) * R4 - Q2 * S + fv(2) * (Q * (R * S)) -
                     R2 * S);
            PuiseuxSeries rr =
                fv(12) * (D2 * Dq(R)) +
                R * (fv(-20) * Q4 + fv(52) * (Q3 * R) - fv(48) * (Q2 * R2) -
                     fv(8) * (Q * R3) + fv(4) * R4 - Q2 * S + fv(2) * (Q * (R * S)) -
                     R2 * S);
            PuiseuxSeries rs =
                fv(12) * ((D2 * D2) * Dq(S)) +
                (fv(16) * (Q4 * Q4) - fv(64) * (Q4 * (Q3 * R)) + fv(1024) * (Q4 * (Q2 * R2)) -
                 fv(2848) * (Q4 * (Q * R3)) + fv(3760) * (Q4 * R4) -
                 fv(2848) * (Q3 * (R4 * R)) + fv(1024) * (Q2 * (R4 * R2)) -
                 fv(64) * (Q * (R4 * R3)) + fv(16) * (R4 * R4) -
                 (D2 * D2) * (S * S));
            return Residuals{rq, rr, rs};
        });
    add(reg, "g12-schwarzian-x", "G12", CheckKind::SchwarzianODE,
        "{x,tau} + 2(x^2-x+1)^4/(x^2(x-1)^2(x+1)^2(x-2)^2(2x-1)^2) (x')^2 = 0, x = R/Q", "",
        [](const Rational& N) {
            RationalFunction R{fv(2) * pow(pl({fv(1), fv(-1), fv(1)}), 4),
                               pow(pl({fv(0), fv(1)}), 2) * pow(pl({fv(-1), fv(1)}), 2) *
                                   pow(pl({fv(1), fv(1)}), 2) * pow(pl({fv(-2), fv(1)}), 2) *
                                   pow(pl({fv(-1), fv(2)}), 2)};
            return schwarzian_res(F(FormId::X6e, N), R);
        });
    add(reg, "g12-ode-Q-in-x", "G12", CheckKind::LinearODE,
        "Q'' + (1/x-1/(x-1)+1/(x+1)+1/(x-2)+1/(x-1/2)) Q' + "
        "2(x^2-x+1)/((x-1)^2(x+1)(2x-1)) Q = 0",
        "five singular points; cleared by x(x-1)^2(x+1)(x-2)(x-1/2)",
        [](const Rational& N) {
            std::vector<AFactor> af{
                {fv(0), 1}, {fv(1), 2}, {fv(-1), 1}, {fv(2), 1}, {fv(1, 2), 1}};
            Polynomial C = pl({fv(0), fv(1)}) * pl({fv(-2), fv(1)}) *
                           pl({fv(1), fv(-1), fv(1)});
            return linear_ode(F(FormId::Q6c, N), F(FormId::X6e, N), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)},
                                             {fv(-1), fv(1)},
                                             {fv(1), fv(-1)},
                                             {fv(1), fv(2)},
                                             {fv(1), fv(1, 2)}}),
                              C);
        });
    add(reg, "g12-ode-R-in-y", "G12", CheckKind::LinearODE,
        "R'' + (1/y-1/(y-1)+1/(y+1)+1/(y-2)+1/(y-1/2)) R' + "
        "2(y^2-y+1)/((y-1)^2(y+1)(2y-1)) R = 0, y = Q/R",
        "five singular points; cleared by y(y-1)^2(y+1)(y-2)(y-1/2)",
        [](const Rational& N) {
            std::vector<AFactor> af{
                {fv(0), 1}, {fv(1), 2}, {fv(-1), 1}, {fv(2), 1}, {fv(1, 2), 1}};
            Polynomial C = pl({fv(0), fv(1)}) * pl({fv(-2), fv(1)}) *
                           pl({fv(1), fv(-1), fv(1)});
            return linear_ode(F(FormId::R6d, N), F(FormId::X6e, N).inverse(), cleared_A(af),
                              cleared_B(af, {{fv(1), fv(0)},
                                             {fv(-1), fv(1)},
                                             {fv(1), fv(-1)},
                                             {fv(1), fv(2)},
                                             {fv(1), fv(1, 2)}}),
                              C);
        });
    add(reg, "g12-j-from-x", "G12", CheckKind::JIdentity,
        "j = 256(x^2-x+1)^3(x^6-3x^5+60x^4-115x^3+60x^2-3x+1)^3/"
        "((1-2x)^6(1-x)^2(x-2)^6 x^2(x+1)^6)",
        "", [](const Rational& N) {
            Polynomial num =
                fv(256) * pow(pl({fv(1), fv(-1), fv(1)}), 3) *
                pow(pl({fv(1), fv(-3), fv(60), fv(-115), fv(60), fv(-3), fv(1)}), 3);
            Polynomial den = pow(pl({fv(1), fv(-2)}), 6) * pow(pl({fv(1), fv(-1)}), 2) *
                             pow(pl({fv(-2), fv(1)}), 6) * pow(pl({fv(0), fv(1)}), 2) *
                             pow(pl({fv(1), fv(1)}), 6);
            return j_res(F(FormId::LittleJ, N), RationalFunction{num, den},
                         F(FormId::X6e, N));
        });
    add(reg, "g12-dual-x", "G12", CheckKind::DualRoute,
        "x: eta quotient vs R/Q", "",
        [](const Rational& N) { return dual_res(FormId::X6e, N); });
}

void add_negative_controls(std::vector<CheckSpec>& reg) {
    add(reg, "nc-ramanujan-perturbed", "NC", CheckKind::NonlinearSystem,
        "D E2 = (E2^2-E4)/11 (deliberately wrong denominator; must FAIL)",
        "negative control", [](const Rational& N) {
            PuiseuxSeries e2 = F(FormId::E2, N), e4 = F(FormId::E4, N);
            return Residuals{Dq(e2) - fv(1, 11) * (e2 * e2 - e4)};
        });
    add(reg, "nc-borweina-vs-p6a", "NC", CheckKind::SeriesIdentity,
        "a(tau) = P6a (deliberate mismatch; must FAIL at q^1)", "negative control",
        [](const Rational& N) {
            return Residuals{F(FormId::BorweinA, N) - F(FormId::P6a, N)};
        });
    add(reg, "nc-schwarzian-zero-rhs", "NC", CheckKind::SchwarzianODE,
        "{q,tau}-form with zero right-hand side (must FAIL with residual -1/2)",
        "negative control", [](const Rational& N) {
            return schwarzian_res(PuiseuxSeries::monomial(fv(1), 1, N),
                                  RationalFunction{Polynomial::zero()});
        });
}

}  // namespace

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> reg = [] {
        std::vector<CheckSpec> r;
        add_g0(r);
        add_g1(r);
        add_g2(r);
        add_g3(r);
        add_g4(r);
        add_g5(r);
        add_g6(r);
        add_g7(r);
        add_g8(r);
        add_g9(r);
        add_g10(r);
        add_g11(r);
        add_g12(r);
        add_negative_controls(r);
        return r;
    }();
    return reg;
}

}  // namespace qv
