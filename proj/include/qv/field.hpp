#pragma once

#include <string>

#include "qv/errors.hpp"
#include "qv/rational.hpp"

namespace qv {

enum class FieldTag { Rational, Sqrt5 };

inline FieldTag promote(FieldTag x, FieldTag y) {
    return (x == FieldTag::Sqrt5 || y == FieldTag::Sqrt5) ? FieldTag::Sqrt5
                                                          : FieldTag::Rational;
}

std::string field_tag_name(FieldTag t);

/// Element of Q or Q(sqrt5), stored as a + b*sqrt5.  The tag is derived from
/// the representation (b == 0 means rational), so mixed-field arithmetic
/// promotes silently and embedding a Rational and projecting back is exact.
class FieldValue {
public:
    FieldValue() : a_(0), b_(0) {}
    FieldValue(const Rational& a) : a_(a), b_(0) {}
    FieldValue(long n) : a_(n), b_(0) {}
    FieldValue(int n) : a_(n), b_(0) {}
    FieldValue(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static FieldValue sqrt5(const Rational& scale = Rational(1)) {
        return FieldValue(Rational(0), scale);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    FieldTag tag() const { return b_ == 0 ? FieldTag::Rational : FieldTag::Sqrt5; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// The rational part of a rational value; throws NotRational otherwise.
    const Rational& rational() const {
        if (b_ != 0) throw NotRational();
        return a_;
    }

    /// Field automorphism sqrt5 -> -sqrt5.
    FieldValue conj() const { return FieldValue(a_, -b_); }

    FieldValue inverse() const;

    friend FieldValue operator+(const FieldValue& x, const FieldValue& y) {
        return FieldValue(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend FieldValue operator-(const FieldValue& x, const FieldValue& y) {
        return FieldValue(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend FieldValue operator-(const FieldValue& x) { return FieldValue(-x.a_, -x.b_); }
    friend FieldValue operator*(const FieldValue& x, const FieldValue& y) {
        if (x.b_ == 0 && y.b_ == 0) return FieldValue(x.a_ * y.a_);
        return FieldValue(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend FieldValue operator/(const FieldValue& x, const FieldValue& y) {
        return x * y.inverse();
    }
    friend bool operator==(const FieldValue& x, const FieldValue& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const FieldValue& x, const FieldValue& y) { return !(x == y); }

    FieldValue& operator+=(const FieldValue& y) {
        a_ += y.a_;
        b_ += y.b_;
        return *this;
    }

    /// "p/q" for rational values, "p/q+r/s*sqrt5" otherwise (negative sqrt5
    /// part rendered with '-').
    std::string str() const;

private:
    Rational a_, b_;
};

FieldValue field_parse(const std::string& text);

}  // namespace qv
