#include "qv/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qv/errors.hpp"

namespace qv {

namespace {

int64_t gcd_i64(int64_t a, int64_t b) { return std::gcd(a, b); }
int64_t lcm_i64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

// ceil(a/b) for b > 0, correct for negative a
int64_t ceil_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return q + (r > 0 ? 1 : 0);
}

int64_t units_ceil(const Rational& x, int64_t denom) {
    Rational scaled = x * Rational(static_cast<long>(denom));
    return rat_ceil(scaled);
}

}  // namespace

PuiseuxSeries PuiseuxSeries::zero(const Rational& trunc, int64_t denom) {
    PuiseuxSeries s;
    s.denom_ = denom;
    s.trunc_ = units_ceil(trunc, denom);
    s.min_exp_ = s.trunc_;
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const FieldValue& c, const Rational& exp,
                                      const Rational& trunc) {
    if (exp >= trunc) throw BadParams("monomial exponent at or beyond truncation");
    if (c.is_zero()) {
        int64_t d = static_cast<int64_t>(trunc.get_den().get_si());
        return zero(trunc, d);
    }
    int64_t d = static_cast<int64_t>(lcm_i64(exp.get_den().get_si(), trunc.get_den().get_si()));
    PuiseuxSeries s;
    s.denom_ = d;
    s.min_exp_ = rat_to_i64(exp * Rational(static_cast<long>(d)));
    s.trunc_ = units_ceil(trunc, d);
    s.c_.assign(static_cast<size_t>(s.trunc_ - s.min_exp_), FieldValue());
    s.c_[0] = c;
    s.field_ = c.tag();
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::constant(const FieldValue& c, const Rational& trunc) {
    return monomial(c, Rational(0), trunc);
}

PuiseuxSeries PuiseuxSeries::from_block(FieldTag field, int64_t denom, int64_t min_exp,
                                        std::vector<FieldValue> coeffs, int64_t trunc_units) {
    PuiseuxSeries s;
    s.field_ = field;
    s.denom_ = denom;
    s.min_exp_ = min_exp;
    s.trunc_ = trunc_units;
    s.c_ = std::move(coeffs);
    if (static_cast<int64_t>(s.c_.size()) != s.trunc_ - s.min_exp_)
        throw BadParams("coefficient block length does not match truncation");
    s.normalize();
    return s;
}

void PuiseuxSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        min_exp_ = trunc_;
    } else if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        min_exp_ += static_cast<int64_t>(lead);
    }
    if (denom_ == 1) return;
    // shrink the exponent lattice when every nonzero term allows it
    int64_t g = denom_;
    for (size_t k = 0; k < c_.size() && g > 1; ++k)
        if (!c_[k].is_zero()) g = gcd_i64(g, std::llabs(min_exp_ + static_cast<int64_t>(k)));
    if (c_.empty()) g = denom_;
    if (g <= 1) return;
    int64_t new_denom = denom_ / g;
    int64_t new_trunc = ceil_div(trunc_, g);
    if (c_.empty()) {
        denom_ = new_denom;
        trunc_ = new_trunc;
        min_exp_ = new_trunc;
        return;
    }
    int64_t new_min = min_exp_ / g;
    std::vector<FieldValue> nc(static_cast<size_t>(new_trunc - new_min), FieldValue());
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        int64_t e = min_exp_ + static_cast<int64_t>(k);
        nc[static_cast<size_t>(e / g - new_min)] = c_[k];
    }
    denom_ = new_denom;
    min_exp_ = new_min;
    trunc_ = new_trunc;
    c_ = std::move(nc);
}

PuiseuxSeries PuiseuxSeries::with_denom(int64_t new_denom) const {
    if (new_denom == denom_) return *this;
    int64_t m = new_denom / denom_;
    PuiseuxSeries s;
    s.field_ = field_;
    s.denom_ = new_denom;
    s.min_exp_ = min_exp_ * m;
    s.trunc_ = trunc_ * m;
    s.c_.assign(static_cast<size_t>(s.trunc_ - s.min_exp_), FieldValue());
    for (size_t k = 0; k < c_.size(); ++k)
        s.c_[k * static_cast<size_t>(m)] = c_[k];
    return s;
}

Rational PuiseuxSeries::valuation() const {
    if (is_zero()) throw ZeroSeries();
    return rat_from_units(min_exp_, denom_);
}

FieldValue PuiseuxSeries::coeff_at(const Rational& e) const {
    if (e >= trunc()) throw BeyondTruncation();
    Rational scaled = e * Rational(static_cast<long>(denom_));
    if (!rat_is_integer(scaled)) return FieldValue();
    int64_t u = rat_to_i64(scaled);
    if (u < min_exp_) return FieldValue();
    return c_[static_cast<size_t>(u - min_exp_)];
}

PuiseuxSeries PuiseuxSeries::conj() const {
    PuiseuxSeries s = *this;
    for (auto& v : s.c_) v = v.conj();
    return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    int64_t d = x.denom_ / std::gcd(x.denom_, y.denom_) * y.denom_;
    PuiseuxSeries a = x.with_denom(d), b = y.with_denom(d);
    PuiseuxSeries s;
    s.field_ = promote(a.field_, b.field_);
    s.denom_ = d;
    s.trunc_ = std::min(a.trunc_, b.trunc_);
    s.min_exp_ = std::min(a.is_zero() ? s.trunc_ : a.min_exp_,
                          b.is_zero() ? s.trunc_ : b.min_exp_);
    if (s.min_exp_ > s.trunc_) s.min_exp_ = s.trunc_;
    s.c_.assign(static_cast<size_t>(s.trunc_ - s.min_exp_), FieldValue());
    for (size_t k = 0; k < a.c_.size(); ++k) {
        int64_t e = a.min_exp_ + static_cast<int64_t>(k);
        if (e >= s.trunc_) break;
        s.c_[static_cast<size_t>(e - s.min_exp_)] += a.c_[k];
    }
    for (size_t k = 0; k < b.c_.size(); ++k) {
        int64_t e = b.min_exp_ + static_cast<int64_t>(k);
        if (e >= s.trunc_) break;
        s.c_[static_cast<size_t>(e - s.min_exp_)] += b.c_[k];
    }
    s.normalize();
    return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& x) {
    PuiseuxSeries s = x;
    for (auto& v : s.c_) v = -v;
    return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& x, const PuiseuxSeries& y) { return x + (-y); }

PuiseuxSeries operator*(const FieldValue& c, const PuiseuxSeries& x) {
    if (c.is_zero()) {
        PuiseuxSeries z;
        z.denom_ = x.denom_;
        z.trunc_ = x.trunc_;
        z.min_exp_ = x.trunc_;
        z.field_ = promote(x.field_, c.tag());
        z.normalize();
        return z;
    }
    PuiseuxSeries s = x;
    s.field_ = promote(x.field_, c.tag());
    for (auto& v : s.c_) v = v * c;
    s.normalize();
    return s;
}

PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    int64_t d = x.denom_ / std::gcd(x.denom_, y.denom_) * y.denom_;
    PuiseuxSeries a = x.with_denom(d), b = y.with_denom(d);
    // truncation: min over shifted validity, using trunc as the valuation of a
    // zero operand (nothing earlier is known to exist)
    int64_t va = a.is_zero() ? a.trunc_ : a.min_exp_;
    int64_t vb = b.is_zero() ? b.trunc_ : b.min_exp_;
    PuiseuxSeries s;
    s.field_ = promote(a.field_, b.field_);
    s.denom_ = d;
    s.trunc_ = std::min(a.trunc_ + vb, b.trunc_ + va);
    if (a.is_zero() || b.is_zero()) {
        s.min_exp_ = s.trunc_;
        s.normalize();
        return s;
    }
    s.min_exp_ = std::min(va + vb, s.trunc_);
    s.c_.assign(static_cast<size_t>(s.trunc_ - s.min_exp_), FieldValue());
    // gather nonzero positions; iterate the sparser operand outside
    std::vector<size_t> nza, nzb;
    for (size_t k = 0; k < a.c_.size(); ++k)
        if (!a.c_[k].is_zero()) nza.push_back(k);
    for (size_t k = 0; k < b.c_.size(); ++k)
        if (!b.c_[k].is_zero()) nzb.push_back(k);
    const bool a_outer = nza.size() <= nzb.size();
    const auto& outer = a_outer ? nza : nzb;
    const auto& inner = a_outer ? nzb : nza;
    const auto& oc = a_outer ? a.c_ : b.c_;
    const auto& ic = a_outer ? b.c_ : a.c_;
    for (size_t i : outer) {
        int64_t base = a.min_exp_ + b.min_exp_ + static_cast<int64_t>(i) - s.min_exp_;
        for (size_t j : inner) {
            int64_t pos = base + static_cast<int64_t>(j);
            if (pos >= static_cast<int64_t>(s.c_.size())) break;
            s.c_[static_cast<size_t>(pos)] += oc[i] * ic[j];
        }
    }
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
    if (is_zero()) throw ZeroSeries();
    const int64_t L = trunc_ - min_exp_;
    FieldValue lead_inv = c_[0].inverse();
    std::vector<FieldValue> b(static_cast<size_t>(L), FieldValue());
    b[0] = lead_inv;
    for (int64_t k = 1; k < L; ++k) {
        FieldValue acc;
        for (int64_t j = 1; j <= k; ++j) {
            if (c_[static_cast<size_t>(j)].is_zero()) continue;
            acc += c_[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
        }
        b[static_cast<size_t>(k)] = -(acc * lead_inv);
    }
    PuiseuxSeries s;
    s.field_ = field_;
    s.denom_ = denom_;
    s.min_exp_ = -min_exp_;
    s.trunc_ = L - min_exp_;
    s.c_ = std::move(b);
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::pow_int(long k) const {
    if (k < 0) return inverse().pow_int(-k);
    if (k == 0) {
        // x^0 == 1, certified to x's relative precision
        PuiseuxSeries s;
        s.denom_ = denom_;
        s.trunc_ = trunc_ - min_exp_;
        s.min_exp_ = 0;
        s.c_.assign(static_cast<size_t>(s.trunc_), FieldValue());
        if (s.c_.empty()) throw ZeroSeries();
        s.c_[0] = FieldValue(1);
        s.normalize();
        return s;
    }
    PuiseuxSeries acc = *this;
    --k;
    PuiseuxSeries base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

PuiseuxSeries PuiseuxSeries::pow_rational(const Rational& r) const {
    if (rat_is_integer(r)) return pow_int(static_cast<long>(rat_to_i64(r)));
    if (is_zero()) throw ZeroSeries();
    const unsigned root_deg = static_cast<unsigned>(r.get_den().get_ui());
    const FieldValue& lead = c_[0];
    if (!lead.is_rational())
        throw RootNotInField("leading coefficient " + lead.str() + " is outside Q");
    auto root = nth_root_if_exact(lead.rational(), root_deg);
    if (!root)
        throw RootNotInField("leading coefficient " + lead.rational().get_str() +
                             " has no exact " + std::to_string(root_deg) + "-th root");

    // x = lead q^v (1 + u); (1+u)^r via the binomial series, then scale back
    const int64_t L = trunc_ - min_exp_;
    std::vector<FieldValue> ub(static_cast<size_t>(L), FieldValue());
    FieldValue lead_inv = lead.inverse();
    for (int64_t k = 1; k < L; ++k) ub[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * lead_inv;
    PuiseuxSeries u = from_block(field_, denom_, 0, std::move(ub), L);

    std::vector<Rational> binom{Rational(1)};
    auto binom_stream = [r, binom](size_t n) mutable -> FieldValue {
        while (binom.size() <= n) {
            size_t m = binom.size();
            Rational next = binom.back() * (r - Rational(static_cast<long>(m - 1))) /
                            Rational(static_cast<long>(m));
            binom.push_back(next);
        }
        return FieldValue(binom[n]);
    };
    PuiseuxSeries w = u.is_zero() ? constant(FieldValue(1), rat_from_units(L, denom_))
                                  : compose(binom_stream, u);

    // multiply by root^p q^(r v)
    mpz_class p = r.get_num();
    const unsigned long pabs = mpz_class(abs(p)).get_ui();
    Rational scale_num;
    mpz_pow_ui(scale_num.get_num_mpz_t(), root->get_num_mpz_t(), pabs);
    mpz_pow_ui(scale_num.get_den_mpz_t(), root->get_den_mpz_t(), pabs);
    scale_num.canonicalize();
    if (p < 0) scale_num = 1 / scale_num;
    Rational shift = r * valuation();
    return monomial(FieldValue(scale_num), shift, w.trunc() + shift) * w;
}

PuiseuxSeries PuiseuxSeries::rescale(const Rational& r) const {
    if (r <= 0) throw BadParams("rescale factor must be positive");
    int64_t p = r.get_num().get_si();
    int64_t q = r.get_den().get_si();
    PuiseuxSeries s = *this;
    s.denom_ = denom_ * q;
    s.min_exp_ = min_exp_ * p;
    s.trunc_ = trunc_ * p;
    if (p > 1) {
        std::vector<FieldValue> nc(static_cast<size_t>(s.trunc_ - s.min_exp_), FieldValue());
        for (size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero())
                nc[k * static_cast<size_t>(p)] = c_[k];
        s.c_ = std::move(nc);
    }
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& t) const {
    int64_t tu = units_ceil(t, denom_);
    if (tu >= trunc_) return *this;
    PuiseuxSeries s = *this;
    s.trunc_ = tu;
    if (tu <= s.min_exp_) {
        s.c_.clear();
        s.min_exp_ = tu;
    } else {
        s.c_.resize(static_cast<size_t>(tu - s.min_exp_));
    }
    s.normalize();
    return s;
}

std::optional<std::pair<Rational, FieldValue>> PuiseuxSeries::first_nonzero() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero())
            return std::make_pair(rat_from_units(min_exp_ + static_cast<int64_t>(k), denom_),
                                  c_[k]);
    return std::nullopt;
}

std::string PuiseuxSeries::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        int64_t e = min_exp_ + static_cast<int64_t>(k);
        out << "(" << c_[k].str() << ")";
        if (e != 0) {
            out << "*" << var;
            const int64_t g = std::gcd(e, denom_);
            const int64_t en = e / g, ed = denom_ / g;
            if (ed == 1) {
                if (en != 1) out << "^" << en;
            } else {
                out << "^(" << en << "/" << ed << ")";
            }
        }
    }
    if (first) out << "0";
    out << " + O(" << var << "^(" << rat_str(trunc()) << "))";
    return out.str();
}

PuiseuxSeries compose(const std::function<FieldValue(size_t)>& outer,
                      const PuiseuxSeries& inner) {
    const Rational T = inner.trunc();
    if (inner.is_zero()) {
        if (T <= 0) throw NonPositiveValuation();
        return PuiseuxSeries::constant(outer(0), T);
    }
    const Rational v = inner.valuation();
    if (v <= 0) throw NonPositiveValuation();
    const int64_t n_terms = std::max<int64_t>(rat_ceil(T / v), 1);
    PuiseuxSeries acc =
        PuiseuxSeries::constant(outer(static_cast<size_t>(n_terms - 1)), T);
    for (int64_t k = n_terms - 2; k >= 0; --k)
        acc = acc * inner + PuiseuxSeries::constant(outer(static_cast<size_t>(k)), T);
    return acc;
}

}  // namespace qv
