#pragma once

#include <vector>

#include "qv/poly.hpp"
#include "qv/series.hpp"

namespace qv {

/// Holonomic recurrence  lead(n) t(n+1) + sum_k lags[k](n) t(n-k) = 0,
/// with polynomial-in-n coefficients over Q or Q(sqrt5).  Back-references
/// before t(0) contribute zero.
struct RecurrenceSpec {
    Polynomial lead;                  // multiplies t(n+1); nonzero for all n >= 0
    std::vector<Polynomial> lags;     // coefficients of t(n), t(n-1), ...
    std::vector<FieldValue> initial;  // t(0), ...
};

/// Exact terms t(0..count-1).  LeadingCoefficientZero if lead(n) vanishes at
/// a step that must be solved.
std::vector<FieldValue> run_recurrence(const RecurrenceSpec& spec, size_t count);

/// sum seq[n] inner^n, truncated at inner's truncation.  The sequence must be
/// long enough to cover that order (BadParams otherwise).
PuiseuxSeries expand_sequence_series(const std::vector<FieldValue>& seq,
                                     const PuiseuxSeries& inner);

/// Residuals of re-substituting computed terms into the recurrence; exact
/// zeros when the engine is consistent.
std::vector<FieldValue> resubstitution_residuals(const RecurrenceSpec& spec,
                                                 const std::vector<FieldValue>& terms);

/// sqrt5 -> -sqrt5 applied to every coefficient polynomial and initial value.
RecurrenceSpec conjugated(const RecurrenceSpec& spec);

// Built-in sequences of the level-5 Heun expansions.
RecurrenceSpec seq_a5();
RecurrenceSpec seq_b5();
RecurrenceSpec seq_s5();
RecurrenceSpec seq_t5();

/// (n+1)^2 t(n+1) = (alpha n^2 + alpha n + beta) t(n) + gamma n^2 t(n-1).
RecurrenceSpec zagier_recurrence(const Rational& alpha, const Rational& beta,
                                 const Rational& gamma);

}  // namespace qv
