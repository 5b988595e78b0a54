#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qv/field.hpp"

namespace qv {

/// Truncated Puiseux/Laurent series  sum c_e q^(e/D)  over Q or Q(sqrt5).
///
/// Representation: a dense coefficient block over the exponent lattice Z/D,
/// from min_exp (inclusive) to trunc (exclusive), both in units of 1/D.
/// Every exponent e/D with e < trunc is certified: stored coefficients are the
/// true coefficients and off-block lattice points below trunc are true zeros.
/// Nothing is claimed at or beyond trunc.
///
/// Invariants: the first stored coefficient of a nonzero series is nonzero;
/// the zero series has an empty block with min_exp == trunc.  Operations
/// unify denominators by lcm and propagate truncation pessimistically.
class PuiseuxSeries {
public:
    PuiseuxSeries() = default;

    static PuiseuxSeries zero(const Rational& trunc, int64_t denom = 1);
    static PuiseuxSeries monomial(const FieldValue& c, const Rational& exp,
                                  const Rational& trunc);
    static PuiseuxSeries constant(const FieldValue& c, const Rational& trunc);

    /// Builds from a dense block; strips leading zeros and reduces D.
    static PuiseuxSeries from_block(FieldTag field, int64_t denom, int64_t min_exp,
                                    std::vector<FieldValue> coeffs, int64_t trunc_units);

    int64_t denom() const { return denom_; }
    int64_t min_exp_units() const { return min_exp_; }
    int64_t trunc_units() const { return trunc_; }
    const std::vector<FieldValue>& coeffs() const { return c_; }

    FieldTag field() const { return field_; }
    bool is_zero() const { return c_.empty(); }

    /// Valuation of a nonzero series, as a rational exponent.
    Rational valuation() const;
    Rational trunc() const { return rat_from_units(trunc_, denom_); }

    /// Exact coefficient of q^e for e below the truncation (zero when absent
    /// or off-lattice); BeyondTruncation otherwise.
    FieldValue coeff_at(const Rational& e) const;

    PuiseuxSeries conj() const;

    friend PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y);
    friend PuiseuxSeries operator-(const PuiseuxSeries& x, const PuiseuxSeries& y);
    friend PuiseuxSeries operator-(const PuiseuxSeries& x);
    friend PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y);
    friend PuiseuxSeries operator*(const FieldValue& c, const PuiseuxSeries& x);
    friend PuiseuxSeries operator*(const PuiseuxSeries& x, const FieldValue& c) {
        return c * x;
    }

    /// Multiplicative inverse; Laurent-aware (valuation negates).  ZeroSeries
    /// if nothing is stored.
    PuiseuxSeries inverse() const;

    PuiseuxSeries pow_int(long k) const;

    /// x^(p/q): requires an exact q-th root of the leading coefficient
    /// (RootNotInField otherwise); the principal branch takes the exact root
    /// returned by nth_root_if_exact.
    PuiseuxSeries pow_rational(const Rational& r) const;

    /// q^e -> q^(r e) for r > 0; realizes tau -> r tau on q-expansions.
    PuiseuxSeries rescale(const Rational& r) const;

    /// Lowers the truncation (no-op if already at or below).
    PuiseuxSeries truncated(const Rational& t) const;

    std::optional<std::pair<Rational, FieldValue>> first_nonzero() const;

    std::string str(const std::string& var = "q") const;

private:
    static Rational rat_from_units(int64_t units, int64_t denom) {
        Rational r(static_cast<long>(units), static_cast<long>(denom));
        r.canonicalize();
        return r;
    }
    void normalize();
    PuiseuxSeries with_denom(int64_t new_denom) const;

    FieldTag field_ = FieldTag::Rational;
    int64_t denom_ = 1;
    int64_t min_exp_ = 0;
    int64_t trunc_ = 0;
    std::vector<FieldValue> c_;
};

/// sum outer(n) * inner^n, truncated at inner's truncation.  The inner series
/// must have strictly positive valuation (NonPositiveValuation otherwise).
PuiseuxSeries compose(const std::function<FieldValue(size_t)>& outer,
                      const PuiseuxSeries& inner);

}  // namespace qv
