#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qv/verifier.hpp"

namespace qv {

inline constexpr const char* kToolVersion = "1.0.0";

/// Verification report: byte-stable for fixed inputs; wall-clock times live
/// only in the per-check "elapsed_ms" field and the top-level "timing" block.
nlohmann::ordered_json report_json(const std::vector<CheckResult>& results,
                                   const Rational& order);

/// One row per check on `out`, followed by a summary line.
void print_results_table(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

/// Registry documentation map: one entry per registry check (id, group, kind,
/// statement, note), generated from the same in-code table the runner uses.
nlohmann::ordered_json registry_map_json();
std::string registry_map_markdown();

/// Portable series record: field tag, exponent denominator, nonzero
/// (exponent-numerator, coefficient-string) pairs, truncation numerator.
nlohmann::ordered_json series_json(const PuiseuxSeries& s);

}  // namespace qv
