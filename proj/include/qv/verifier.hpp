#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qv/series.hpp"

namespace qv {

enum class CheckKind {
    SeriesIdentity,
    NonlinearSystem,
    SchwarzianODE,
    LinearODE,
    InversionFormula,
    JIdentity,
    RecurrenceExpansion,
    DualRoute,
};

enum class Verdict { Pass, Fail, InsufficientPrecision };

const char* kind_name(CheckKind k);
const char* verdict_name(Verdict v);

/// One theorem bound to a machine-checkable identity.  `residuals` builds the
/// residual series at a given working order; a check passes when every
/// residual is identically zero with truncation at or above the requested
/// order.
struct CheckSpec {
    std::string id;
    std::string group;  // G0..G12 for the registry, NC for negative controls
    CheckKind kind;
    std::string statement;  // the certified identity, ASCII form
    std::string note;       // verification strategy (substitutions, representatives)
    std::function<std::vector<PuiseuxSeries>(const Rational& order)> residuals;
};

struct FirstFailure {
    Rational exponent;
    FieldValue residual;
};

struct CheckResult {
    std::string id;
    std::string group;
    CheckKind kind = CheckKind::SeriesIdentity;
    Verdict verdict = Verdict::InsufficientPrecision;
    Rational certified_order = Rational(0);
    std::optional<FirstFailure> first_failure;
    std::string error;  // set when residual construction threw
    double elapsed_ms = 0.0;
};

/// The embedded registry: every certified identity, in id order, with the
/// negative-control group NC at the end.
const std::vector<CheckSpec>& registry();

/// Entries selected by group or id; `all` selects every non-NC group.
/// Returns nullopt when the group/id does not exist.
std::optional<std::vector<const CheckSpec*>> select_all();
std::optional<std::vector<const CheckSpec*>> select_group(const std::string& group);
std::optional<std::vector<const CheckSpec*>> select_id(const std::string& id);

/// Runs one check at the requested order.  Builds with a working margin and
/// retries with a larger one before reporting INSUFFICIENT_PRECISION.
CheckResult run_check(const CheckSpec& spec, const Rational& order);

/// Runs checks (optionally in parallel); results come back ordered by id and
/// are identical for any job count.
std::vector<CheckResult> run_checks(const std::vector<const CheckSpec*>& checks,
                                    const Rational& order, unsigned jobs);

}  // namespace qv
