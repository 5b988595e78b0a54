#include "qv/field.hpp"

namespace qv {

std::string field_tag_name(FieldTag t) {
    return t == FieldTag::Rational ? "Q" : "Q(sqrt5)";
}

FieldValue FieldValue::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (b_ == 0) return FieldValue(1 / a_);
    // (a + b sqrt5)^-1 = (a - b sqrt5) / (a^2 - 5 b^2); the norm vanishes only
    // at zero since sqrt5 is irrational.
    Rational norm = a_ * a_ - 5 * b_ * b_;
    return FieldValue(a_ / norm, -b_ / norm);
}

std::string FieldValue::str() const {
    if (b_ == 0) return a_.get_str();
    std::string out = a_.get_str();
    if (b_ > 0)
        out += "+" + b_.get_str() + "*sqrt5";
    else
        out += "-" + Rational(-b_).get_str() + "*sqrt5";
    return out;
}

FieldValue field_parse(const std::string& text) {
    const auto pos = text.find("*sqrt5");
    if (pos == std::string::npos) return FieldValue(rat_parse(text));
    // split off the trailing "<sign><rat>*sqrt5" term
    std::string head = text.substr(0, pos);
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;) {  // position 0 may be a leading sign
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure sqrt5 multiple, e.g. "1/5*sqrt5" or "-2*sqrt5"
        return FieldValue(Rational(0), rat_parse(head));
    }
    Rational a = rat_parse(head.substr(0, split));
    std::string btext = head.substr(split);
    if (btext[0] == '+') btext.erase(0, 1);
    return FieldValue(a, rat_parse(btext));
}

}  // namespace qv
