#pragma once

#include <stdexcept>
#include <string>

namespace qv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct NotRational : Error {
    NotRational() : Error("value has a nonzero sqrt5 part") {}
};
struct ZeroSeries : Error {
    ZeroSeries() : Error("series is zero up to its truncation") {}
};
struct NonPositiveValuation : Error {
    NonPositiveValuation() : Error("inner series must have positive valuation") {}
};
struct RootNotInField : Error {
    explicit RootNotInField(const std::string& what) : Error(what) {}
};
struct BeyondTruncation : Error {
    BeyondTruncation() : Error("exponent is at or beyond the truncation order") {}
};
struct ZeroDerivative : Error {
    ZeroDerivative() : Error("derivative vanishes up to truncation") {}
};
struct ZeroDenominatorSeries : Error {
    ZeroDenominatorSeries() : Error("denominator evaluates to the zero series") {}
};
struct UnknownForm : Error {
    explicit UnknownForm(const std::string& name) : Error("unknown form: " + name) {}
};
struct SingleRouteOnly : Error {
    explicit SingleRouteOnly(const std::string& name)
        : Error("form has a single construction route: " + name) {}
};
struct InsufficientOrder : Error {
    InsufficientOrder() : Error("requested order does not reach the valuation") {}
};
struct BadParams : Error {
    explicit BadParams(const std::string& what) : Error(what) {}
};
struct LeadingCoefficientZero : Error {
    LeadingCoefficientZero() : Error("recurrence leading coefficient vanishes") {}
};

}  // namespace qv
