#include "qv/sequences.hpp"

#include "qv/errors.hpp"

namespace qv {

namespace {

FieldValue half(long a, long b) { return FieldValue(rat(a, 2), rat(b, 2)); }

}  // namespace

std::vector<FieldValue> run_recurrence(const RecurrenceSpec& spec, size_t count) {
    std::vector<FieldValue> t = spec.initial;
    if (t.size() > count) t.resize(count);
    while (t.size() < count) {
        const long n = static_cast<long>(t.size()) - 1;  // solve for t(n+1)
        FieldValue lead = spec.lead.eval(FieldValue(n));
        if (lead.is_zero()) throw LeadingCoefficientZero();
        FieldValue acc;
        for (size_t k = 0; k < spec.lags.size(); ++k) {
            const long idx = n - static_cast<long>(k);
            if (idx < 0) continue;  // terms before t(0) are zero
            const FieldValue& tv = t[static_cast<size_t>(idx)];
            if (tv.is_zero()) continue;
            acc += spec.lags[k].eval(FieldValue(n)) * tv;
        }
        t.push_back(-(acc * lead.inverse()));
    }
    return t;
}

PuiseuxSeries expand_sequence_series(const std::vector<FieldValue>& seq,
                                     const PuiseuxSeries& inner) {
    const Rational T = inner.trunc();
    if (!inner.is_zero()) {
        const Rational v = inner.valuation();
        if (v <= 0) throw NonPositiveValuation();
        if (Rational(static_cast<long>(seq.size())) * v < T)
            throw BadParams("sequence too short for the requested order");
    }
    return compose(
        [&seq](size_t n) { return n < seq.size() ? seq[n] : FieldValue(0); }, inner);
}

std::vector<FieldValue> resubstitution_residuals(const RecurrenceSpec& spec,
                                                 const std::vector<FieldValue>& terms) {
    std::vector<FieldValue> res;
    for (size_t m = 1; m < terms.size(); ++m) {
        const long n = static_cast<long>(m) - 1;
        FieldValue acc = spec.lead.eval(FieldValue(n)) * terms[m];
        for (size_t k = 0; k < spec.lags.size(); ++k) {
            const long idx = n - static_cast<long>(k);
            if (idx < 0) continue;
            acc += spec.lags[k].eval(FieldValue(n)) * terms[static_cast<size_t>(idx)];
        }
        res.push_back(acc);
    }
    return res;
}

RecurrenceSpec conjugated(const RecurrenceSpec& spec) {
    auto conj_poly = [](const Polynomial& p) {
        std::vector<FieldValue> c = p.coeffs();
        for (auto& v : c) v = v.conj();
        return Polynomial(std::move(c));
    };
    RecurrenceSpec out;
    out.lead = conj_poly(spec.lead);
    for (const auto& p : spec.lags) out.lags.push_back(conj_poly(p));
    for (const auto& v : spec.initial) out.initial.push_back(v.conj());
    return out;
}

RecurrenceSpec seq_a5() {
    // (n+1)^2 a(n+1) + ((11+15 sqrt5)/2 n(n+1) + 5(1+sqrt5)/2) a(n)
    //                + 5(25+11 sqrt5)/2 n^2 a(n-1) = 0,  a(0)=1
    RecurrenceSpec s;
    s.lead = Polynomial({FieldValue(1), FieldValue(2), FieldValue(1)});
    s.lags = {
        Polynomial({half(5, 5), half(11, 15), half(11, 15)}),
        Polynomial({FieldValue(0), FieldValue(0), half(125, 55)}),
    };
    s.initial = {FieldValue(1)};
    return s;
}

RecurrenceSpec seq_b5() { return conjugated(seq_a5()); }

RecurrenceSpec seq_s5() {
    // (n+1)^2 s(n+1) + (-(33+5 sqrt5)/2 n^2 + 5 sqrt5 n + 5(1+sqrt5)/2) s(n)
    //  + ((119+55 sqrt5)/2 n^2 - 33(11+5 sqrt5)/2 n + (279+125 sqrt5)/2) s(n-1)
    //  + (11+5 sqrt5)/2 (n-2)^2 s(n-2) = 0,  s(0)=1
    RecurrenceSpec s;
    s.lead = Polynomial({FieldValue(1), FieldValue(2), FieldValue(1)});
    Polynomial lag0({half(5, 5), FieldValue(Rational(0), Rational(5)), half(-33, -5)});
    Polynomial lag1({half(279, 125), half(-363, -165), half(119, 55)});
    // (11+5 sqrt5)/2 (n-2)^2 = mu (n^2 - 4n + 4)
    const FieldValue mu = half(11, 5);
    Polynomial lag2({FieldValue(4) * mu, FieldValue(-4) * mu, mu});
    s.lags = {lag0, lag1, lag2};
    s.initial = {FieldValue(1)};
    return s;
}

RecurrenceSpec seq_t5() { return conjugated(seq_s5()); }

RecurrenceSpec zagier_recurrence(const Rational& alpha, const Rational& beta,
                                 const Rational& gamma) {
    RecurrenceSpec s;
    s.lead = Polynomial({FieldValue(1), FieldValue(2), FieldValue(1)});
    s.lags = {
        Polynomial({FieldValue(-beta), FieldValue(-alpha), FieldValue(-alpha)}),
        Polynomial({FieldValue(0), FieldValue(0), FieldValue(-gamma)}),
    };
    s.initial = {FieldValue(1)};
    return s;
}

}  // namespace qv
