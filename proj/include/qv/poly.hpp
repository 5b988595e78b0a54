#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qv/field.hpp"
#include "qv/series.hpp"

namespace qv {

/// Dense univariate polynomial with FieldValue coefficients, ascending order.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<FieldValue> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<FieldValue> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const FieldValue& c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({FieldValue(0), FieldValue(1)}); }
    /// (X - r0)(X - r1)...
    static Polynomial from_roots(const std::vector<FieldValue>& roots);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<FieldValue>& coeffs() const { return c_; }
    FieldValue coeff(size_t k) const { return k < c_.size() ? c_[k] : FieldValue(); }

    FieldValue eval(const FieldValue& v) const;
    PuiseuxSeries eval_series(const PuiseuxSeries& s) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const FieldValue& c, const Polynomial& p);
    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<FieldValue> c_;
};

/// Quotient of two polynomials; denominator not identically zero.
struct RationalFunction {
    Polynomial num;
    Polynomial den = Polynomial::constant(FieldValue(1));

    std::string str(const std::string& var = "x") const;
};

}  // namespace qv
