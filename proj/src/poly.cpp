#include "qv/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qv/errors.hpp"

namespace qv {

Polynomial Polynomial::from_roots(const std::vector<FieldValue>& roots) {
    Polynomial p = constant(FieldValue(1));
    for (const auto& r : roots) p = p * Polynomial({-r, FieldValue(1)});
    return p;
}

FieldValue Polynomial::eval(const FieldValue& v) const {
    FieldValue acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * v + c_[k];
    return acc;
}

PuiseuxSeries Polynomial::eval_series(const PuiseuxSeries& s) const {
    // Laurent inputs lose one |valuation| of precision per Horner step.
    Rational ct = s.trunc();
    if (!s.is_zero() && s.valuation() < 0)
        ct += Rational(degree() < 0 ? 0 : degree()) * s.valuation();
    if (is_zero()) return PuiseuxSeries::zero(ct, s.denom());
    PuiseuxSeries acc = PuiseuxSeries::constant(c_.back(), ct);
    for (size_t k = c_.size() - 1; k-- > 0;)
        acc = acc * s + PuiseuxSeries::constant(c_[k], ct);
    return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<FieldValue> c(std::max(p.c_.size(), q.c_.size()), FieldValue());
    for (size_t k = 0; k < p.c_.size(); ++k) c[k] += p.c_[k];
    for (size_t k = 0; k < q.c_.size(); ++k) c[k] += q.c_[k];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p) {
    std::vector<FieldValue> c = p.c_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<FieldValue> c(p.c_.size() + q.c_.size() - 1, FieldValue());
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i].is_zero()) continue;
        for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const FieldValue& c, const Polynomial& p) {
    std::vector<FieldValue> out = p.c_;
    for (auto& v : out) v = v * c;
    return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c_[k].str() << ")";
        if (k == 1) out << "*" << var;
        if (k > 1) out << "*" << var << "^" << k;
    }
    return out.str();
}

std::string RationalFunction::str(const std::string& var) const {
    return "(" + num.str(var) + ") / (" + den.str(var) + ")";
}

}  // namespace qv
